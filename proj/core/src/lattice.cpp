//  Copyright 2026 The obsfn Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "obsfn/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "obsfn/errors.hpp"
#include "order_tables.hpp"

namespace obsfn {

namespace detail {

std::size_t BitRows::count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row(i)[w]);
  return c;
}

void close_order(std::size_t n, std::vector<std::uint8_t>& order) {
  BitRows up(n);
  for (std::size_t i = 0; i < n; ++i) {
    up.set(i, i);
    for (std::size_t j = 0; j < n; ++j)
      if (order[i * n + j]) up.set(i, j);
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* rk = up.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!up.test(i, k)) continue;
      std::uint64_t* ri = up.row(i);
      for (std::size_t w = 0; w < up.words(); ++w) ri[w] |= rk[w];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = up.test(i, j);
}

namespace {

// Index of the unique element of `target` whose row equals `target`, i.e. the
// greatest element of a down-set (or least of an up-set). `size` ranks rows.
std::optional<std::size_t> extremum_of(const BitRows& rows,
                                       const std::vector<std::size_t>& size,
                                       const std::vector<std::uint64_t>& target) {
  std::optional<std::size_t> best;
  for (std::size_t w = 0; w < target.size(); ++w) {
    std::uint64_t bits = target[w];
    while (bits) {
      const std::size_t j = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (!best || size[j] > size[*best]) best = j;
    }
  }
  if (!best) return std::nullopt;
  const std::uint64_t* r = rows.row(*best);
  for (std::size_t w = 0; w < target.size(); ++w)
    if (r[w] != target[w]) return std::nullopt;
  return best;
}

}  // namespace

std::variant<OrderTables, OrderFailure> tabulate_order(
    std::size_t n, const std::vector<std::uint8_t>& order) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (order[i * n + j] && order[j * n + i])
        return OrderFailure{"order is not antisymmetric", {i, j}};

  BitRows up(n), down(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (order[i * n + j]) {
        up.set(i, j);
        down.set(j, i);
      }

  OrderTables t;
  std::vector<std::size_t> down_size(n), up_size(n);
  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < n; ++i) {
    down_size[i] = down.count(i);
    up_size[i] = up.count(i);
    if (up_size[i] == n) bottom = i;
    if (down_size[i] == n) top = i;
  }
  if (!bottom) return OrderFailure{"order has no least element", {}};
  if (!top) return OrderFailure{"order has no greatest element", {}};
  t.bottom = *bottom;
  t.top = *top;

  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  std::vector<std::uint64_t> common(down.words());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::size_t m = 0, s = 0;
      if (order[i * n + j]) {
        m = i;
        s = j;
      } else if (order[j * n + i]) {
        m = j;
        s = i;
      } else {
        for (std::size_t w = 0; w < common.size(); ++w)
          common[w] = down.row(i)[w] & down.row(j)[w];
        auto glb = extremum_of(down, down_size, common);
        if (!glb) return OrderFailure{"pair has no unique greatest lower bound", {i, j}};
        for (std::size_t w = 0; w < common.size(); ++w)
          common[w] = up.row(i)[w] & up.row(j)[w];
        auto lub = extremum_of(up, up_size, common);
        if (!lub) return OrderFailure{"pair has no unique least upper bound", {i, j}};
        m = *glb;
        s = *lub;
      }
      t.meet[i * n + j] = t.meet[j * n + i] = static_cast<std::uint16_t>(m);
      t.join[i * n + j] = t.join[j * n + i] = static_cast<std::uint16_t>(s);
    }
  }
  return t;
}

}  // namespace detail

Lattice::Lattice(std::vector<std::string> names, std::vector<std::uint8_t> order,
                 std::vector<std::uint32_t> ortho)
    : names_(std::move(names)), order_(std::move(order)), ortho_(std::move(ortho)) {
  const std::size_t n = names_.size();
  if (n == 0) throw StructureError("lattice must have at least one element");
  if (n > kMaxElements)
    throw SizeError("lattice has " + std::to_string(n) + " elements, bound is " +
                    std::to_string(kMaxElements));
  if (order_.size() != n * n) throw StructureError("order matrix has wrong size");
  if (ortho_.size() != n) throw StructureError("ortho map has wrong size");
  std::vector<bool> hit(n, false);
  for (auto o : ortho_) {
    if (o >= n || hit[o]) throw StructureError("ortho map is not a permutation");
    hit[o] = true;
  }

  detail::close_order(n, order_);
  auto tabulated = detail::tabulate_order(n, order_);
  if (auto* failure = std::get_if<detail::OrderFailure>(&tabulated)) {
    std::string msg = failure->what;
    for (auto w : failure->witness) msg += " '" + names_[w] + "'";
    throw StructureError(msg);
  }
  auto& tables = std::get<detail::OrderTables>(tabulated);
  meet_ = std::move(tables.meet);
  join_ = std::move(tables.join);
  bottom_ = Element(static_cast<std::uint32_t>(tables.bottom));
  top_ = Element(static_cast<std::uint32_t>(tables.top));

  // Ranks by increasing down-set size, which is a linear extension.
  std::vector<std::size_t> down_size(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) down_size[j] += order_[i * n + j];
  std::vector<std::size_t> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](auto a, auto b) { return down_size[a] < down_size[b]; });
  rank_.assign(n, 0);
  for (auto x : by_size)
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && order_[y * n + x]) rank_[x] = std::max(rank_[x], rank_[y] + 1);

  for (std::size_t i = 0; i < n; ++i)
    if (down_size[i] == 2) atoms_.emplace_back(static_cast<std::uint32_t>(i));
}

Lattice Lattice::from_raw(const RawLattice& raw) {
  const std::size_t n = raw.names.size();
  if (n > kMaxElements) throw SizeError("lattice exceeds element bound");
  std::vector<std::uint8_t> order(n * n, 0);
  for (auto [i, j] : raw.leq) {
    if (i >= n || j >= n) throw InputError("leq pair refers to a missing element");
    order[i * n + j] = 1;
  }
  if (raw.ortho.size() != n) throw InputError("ortho must list one entry per element");
  std::vector<std::uint32_t> ortho;
  ortho.reserve(n);
  for (auto o : raw.ortho) {
    if (o >= n) throw InputError("ortho refers to a missing element");
    ortho.push_back(static_cast<std::uint32_t>(o));
  }
  return Lattice(raw.names, std::move(order), std::move(ortho));
}

void Lattice::check(Element a) const {
  if (a.index >= size())
    throw DomainError("element index " + std::to_string(a.index) +
                      " is not part of this lattice");
}

Element Lattice::element(std::size_t index) const {
  Element e(static_cast<std::uint32_t>(index));
  if (index >= size()) check(e);
  return e;
}

Element Lattice::meet(Element a, Element b) const {
  check(a);
  check(b);
  return Element(meet_[a.index * size() + b.index]);
}

Element Lattice::join(Element a, Element b) const {
  check(a);
  check(b);
  return Element(join_[a.index * size() + b.index]);
}

Element Lattice::ortho(Element a) const {
  check(a);
  return Element(ortho_[a.index]);
}

Element Lattice::big_meet(std::span<const Element> s) const {
  Element acc = top_;
  for (auto e : s) acc = meet(acc, e);
  return acc;
}

Element Lattice::big_join(std::span<const Element> s) const {
  Element acc = bottom_;
  for (auto e : s) acc = join(acc, e);
  return acc;
}

const std::string& Lattice::name(Element a) const {
  check(a);
  return names_[a.index];
}

std::optional<Element> Lattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (names_[i] == name) return Element(static_cast<std::uint32_t>(i));
  return std::nullopt;
}

std::vector<Element> Lattice::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<Element> Lattice::nonzero_elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (i != bottom_.index) out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

bool Lattice::is_atom(Element a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

std::vector<std::pair<Element, Element>> Lattice::cover_pairs() const {
  const std::size_t n = size();
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order_[a * n + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && order_[a * n + c] && order_[c * n + b]) cover = false;
      if (cover)
        out.emplace_back(Element(static_cast<std::uint32_t>(a)),
                         Element(static_cast<std::uint32_t>(b)));
    }
  return out;
}

bool operator==(const Lattice& a, const Lattice& b) {
  return a.names_ == b.names_ && a.order_ == b.order_ && a.ortho_ == b.ortho_;
}

std::optional<Element> Sublattice::from_source(Element a) const {
  for (std::size_t i = 0; i < embedding.size(); ++i)
    if (embedding[i] == a) return Element(static_cast<std::uint32_t>(i));
  return std::nullopt;
}

namespace {

Sublattice induced(const Lattice& source, const std::vector<Element>& members) {
  const std::size_t n = members.size();
  std::unordered_map<std::uint32_t, std::uint32_t> position;
  for (std::size_t i = 0; i < n; ++i) position[members[i].index] = static_cast<std::uint32_t>(i);

  std::vector<std::string> names;
  std::vector<std::uint8_t> order(n * n, 0);
  std::vector<std::uint32_t> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(source.name(members[i]));
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = source.leq(members[i], members[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = position.find(source.ortho(members[i]).index);
    if (it == position.end()) throw StructureError("subset is not closed under ortho");
    ortho[i] = it->second;
  }
  return Sublattice{std::make_shared<const Lattice>(std::move(names), std::move(order),
                                                    std::move(ortho)),
                    members};
}

}  // namespace

Sublattice generated_sublattice(const Lattice& source, std::span<const Element> generators,
                                std::size_t max_elements) {
  std::vector<Element> found;
  std::vector<bool> seen(source.size(), false);
  auto add = [&](Element e) {
    if (seen[e.index]) return;
    seen[e.index] = true;
    found.push_back(e);
    if (found.size() > max_elements)
      throw SizeError("generated sublattice exceeds " + std::to_string(max_elements) +
                      " elements");
  };
  add(source.bottom());
  add(source.top());
  for (auto g : generators) {
    if (!source.contains(g)) throw DomainError("generator is not part of the lattice");
    add(g);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Element x = found[i];
    add(source.ortho(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(source.meet(x, found[j]));
      add(source.join(x, found[j]));
    }
  }

  // Rank inside the closure, then discovery order.
  const std::size_t n = found.size();
  std::vector<std::size_t> by_source_rank(n);
  std::iota(by_source_rank.begin(), by_source_rank.end(), 0);
  std::stable_sort(by_source_rank.begin(), by_source_rank.end(), [&](auto a, auto b) {
    return source.rank(found[a]) < source.rank(found[b]);
  });
  std::vector<std::size_t> sub_rank(n, 0);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = by_source_rank[xi];
    for (std::size_t yi = 0; yi < xi; ++yi) {
      const auto y = by_source_rank[yi];
      if (source.lt(found[y], found[x])) sub_rank[x] = std::max(sub_rank[x], sub_rank[y] + 1);
    }
  }
  std::vector<std::size_t> canonical(n);
  std::iota(canonical.begin(), canonical.end(), 0);
  std::stable_sort(canonical.begin(), canonical.end(),
                   [&](auto a, auto b) { return sub_rank[a] < sub_rank[b]; });
  std::vector<Element> members;
  members.reserve(n);
  for (auto c : canonical) members.push_back(found[c]);
  return induced(source, members);
}

Sublattice principal_ideal(const Lattice& source, Element a) {
  std::vector<Element> members;
  for (auto e : source.elements())
    if (source.leq(e, a)) members.push_back(e);
  const std::size_t n = members.size();
  std::unordered_map<std::uint32_t, std::uint32_t> position;
  for (std::size_t i = 0; i < n; ++i) position[members[i].index] = static_cast<std::uint32_t>(i);

  std::vector<std::string> names;
  std::vector<std::uint8_t> order(n * n, 0);
  std::vector<std::uint32_t> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(source.name(members[i]));
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = source.leq(members[i], members[j]);
    ortho[i] = position.at(source.meet(source.ortho(members[i]), a).index);
  }
  return Sublattice{std::make_shared<const Lattice>(std::move(names), std::move(order),
                                                    std::move(ortho)),
                    std::move(members)};
}

Lattice boolean_lattice(const std::vector<std::string>& atom_names) {
  const std::size_t m = atom_names.size();
  if (m > 12) throw SizeError("boolean lattice on more than 12 atoms exceeds the element bound");
  const std::size_t n = std::size_t{1} << m;
  const std::size_t full = n - 1;
  std::vector<std::string> names(n);
  std::vector<std::uint8_t> order(n * n, 0);
  std::vector<std::uint32_t> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      names[i] = "0";
    } else if (i == full) {
      names[i] = "1";
    } else {
      for (std::size_t k = 0; k < m; ++k)
        if (i >> k & 1U) names[i] += (names[i].empty() ? "" : "+") + atom_names[k];
    }
    ortho[i] = static_cast<std::uint32_t>(full & ~i);
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = (i & ~j) == 0;
  }
  return Lattice(std::move(names), std::move(order), std::move(ortho));
}

Lattice product(const Lattice& a, const Lattice& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names(n);
  std::vector<std::uint8_t> order(n * n, 0);
  std::vector<std::uint32_t> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element ai = a.element(i / nb), bi = b.element(i % nb);
    names[i] = "(" + a.name(ai) + "," + b.name(bi) + ")";
    ortho[i] = static_cast<std::uint32_t>(a.ortho(ai).index * nb + b.ortho(bi).index);
    for (std::size_t j = 0; j < n; ++j)
      order[i * n + j] = a.leq(ai, a.element(j / nb)) && b.leq(bi, b.element(j % nb));
  }
  return Lattice(std::move(names), std::move(order), std::move(ortho));
}

Lattice permuted(const Lattice& source, std::span<const std::size_t> perm) {
  const std::size_t n = source.size();
  if (perm.size() != n) throw DomainError("permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw DomainError("not a permutation");
    hit[p] = true;
  }
  std::vector<std::string> names(n);
  std::vector<std::uint8_t> order(n * n, 0);
  std::vector<std::uint32_t> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element ei = source.element(i);
    names[perm[i]] = source.name(ei);
    ortho[perm[i]] = static_cast<std::uint32_t>(perm[source.ortho(ei).index]);
    for (std::size_t j = 0; j < n; ++j)
      order[perm[i] * n + perm[j]] = source.leq(ei, source.element(j));
  }
  return Lattice(std::move(names), std::move(order), std::move(ortho));
}

}  // namespace obsfn
