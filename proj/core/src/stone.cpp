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

#include "obsfn/stone.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "obsfn/errors.hpp"

namespace obsfn {

DualIdeal principal_filter(const Lattice& l, Element a) {
  if (!l.contains(a)) throw DomainError("element is not part of the lattice");
  if (a == l.bottom()) throw DomainError("the filter generated by 0 contains 0");
  return DualIdeal{a};
}

bool contains(const Lattice& l, DualIdeal j, Element a) { return l.leq(j.least, a); }

std::vector<Element> members(const Lattice& l, DualIdeal j) {
  std::vector<Element> out;
  for (auto e : l.elements())
    if (l.leq(j.least, e)) out.push_back(e);
  return out;
}

ElementMask mask_of(const Lattice& l, DualIdeal j) {
  ElementMask m(l.size(), false);
  for (auto e : l.elements()) m[e.index] = l.leq(j.least, e);
  return m;
}

bool is_dual_ideal(const Lattice& l, const ElementMask& s) {
  if (s.size() != l.size()) throw DomainError("subset mask has wrong size");
  if (std::none_of(s.begin(), s.end(), [](bool b) { return b; })) return false;
  if (s[l.bottom().index]) return false;
  for (auto a : l.elements()) {
    if (!s[a.index]) continue;
    for (auto b : l.elements()) {
      if (l.leq(a, b) && !s[b.index]) return false;
      if (s[b.index] && !s[l.meet(a, b).index]) return false;
    }
  }
  return true;
}

bool is_dual_ideal(const Lattice& l, std::span<const Element> subset) {
  ElementMask m(l.size(), false);
  for (auto e : subset) {
    if (!l.contains(e)) throw DomainError("element is not part of the lattice");
    m[e.index] = true;
  }
  return is_dual_ideal(l, m);
}

std::vector<DualIdeal> enumerate_dual_ideals(const Lattice& l) {
  std::vector<DualIdeal> out;
  for (auto a : l.nonzero_elements()) out.push_back(DualIdeal{a});
  return out;
}

std::vector<ElementMask> brute_force_dual_ideals(const Lattice& l) {
  const std::size_t n = l.size();
  if (n > 12) throw SizeError("brute-force dual ideal scan is limited to 12 elements");
  std::vector<ElementMask> out;
  for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
    ElementMask m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = (bits >> i) & 1U;
    if (is_dual_ideal(l, m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cross_check_dual_ideals(const Lattice& l) {
  std::vector<ElementMask> principal;
  for (auto j : enumerate_dual_ideals(l)) principal.push_back(mask_of(l, j));
  std::sort(principal.begin(), principal.end());
  return principal == brute_force_dual_ideals(l);
}

std::vector<Quasipoint> quasipoints(const Lattice& l) {
  std::vector<Quasipoint> out;
  for (auto a : l.atoms()) out.push_back(Quasipoint{a});
  return out;
}

std::vector<ElementMask> maximal_dual_ideals_by_scan(const Lattice& l) {
  const auto all = brute_force_dual_ideals(l);
  auto subset = [](const ElementMask& a, const ElementMask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  std::vector<ElementMask> out;
  for (const auto& a : all) {
    const bool maximal = std::none_of(all.begin(), all.end(), [&](const ElementMask& b) {
      return a != b && subset(a, b);
    });
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<Quasipoint> basis_Q(const Lattice& l, Element a) {
  std::vector<Quasipoint> out;
  for (auto q : quasipoints(l))
    if (l.leq(q.atom, a)) out.push_back(q);
  return out;
}

std::vector<DualIdeal> basis_D(const Lattice& l, Element a) {
  std::vector<DualIdeal> out;
  for (auto j : enumerate_dual_ideals(l))
    if (l.leq(j.least, a)) out.push_back(j);
  return out;
}

DualIdeal intersect(const Lattice& l, std::span<const DualIdeal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of an empty family of dual ideals");
  Element acc = l.bottom();
  for (auto j : ideals) acc = l.join(acc, j.least);
  return DualIdeal{acc};
}

std::vector<DualIdeal> closure_in_D(const Lattice& l, std::span<const DualIdeal> s) {
  std::vector<DualIdeal> out;
  for (auto j : enumerate_dual_ideals(l)) {
    bool in_closure = true;
    for (auto a : l.elements()) {
      if (!l.leq(j.least, a)) continue;  // D_a is a neighbourhood of j
      const bool meets = std::any_of(s.begin(), s.end(),
                                     [&](DualIdeal x) { return l.leq(x.least, a); });
      if (!meets) {
        in_closure = false;
        break;
      }
    }
    if (in_closure) out.push_back(j);
  }
  return out;
}

std::vector<DualIdeal> closure_of_basis_D(const Lattice& l, Element p) {
  std::vector<DualIdeal> out;
  for (auto j : enumerate_dual_ideals(l)) {
    // Q >= least implies P ^ Q >= P ^ least, so checking Q = least suffices.
    if (l.meet(p, j.least) != l.bottom()) out.push_back(j);
  }
  return out;
}

bool density_check(const Lattice& l) {
  for (auto a : l.nonzero_elements())
    if (basis_Q(l, a).empty()) return false;
  return true;
}

std::optional<std::pair<Element, Element>> non_hausdorff_witness(const Lattice& l) {
  for (auto p : l.nonzero_elements())
    for (auto p1 : l.elements()) {
      if (!l.lt(p, p1)) continue;
      const auto d = basis_D(l, p);
      const auto cl = closure_in_D(l, d);
      const DualIdeal h{p1};
      const bool in_closure = std::find(cl.begin(), cl.end(), h) != cl.end();
      const bool in_d = std::find(d.begin(), d.end(), h) != d.end();
      if (in_closure && !in_d) return std::pair{p, p1};
    }
  return std::nullopt;
}

namespace {

bool subset_of(const std::vector<DualIdeal>& a, const std::vector<DualIdeal>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Report verify_remark14(const Lattice& l) {
  Report r("stone-basis");
  std::optional<std::string> fail_i, fail_ii, fail_iii, strict_iii;
  for (auto a : l.elements()) {
    const auto da = basis_D(l, a);
    for (auto b : l.elements()) {
      const auto db = basis_D(l, b);
      if (l.leq(a, b) && !subset_of(da, db) && !fail_i)
        fail_i = fmt::format("{} <= {}", l.name(a), l.name(b));

      std::vector<DualIdeal> cap;
      std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(cap));
      if (basis_D(l, l.meet(a, b)) != cap && !fail_ii)
        fail_ii = fmt::format("a={}, b={}", l.name(a), l.name(b));

      std::vector<DualIdeal> cup;
      std::set_union(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(cup));
      const auto djoin = basis_D(l, l.join(a, b));
      if (!subset_of(cup, djoin) && !fail_iii)
        fail_iii = fmt::format("a={}, b={}", l.name(a), l.name(b));
      else if (cup != djoin && !strict_iii)
        strict_iii = fmt::format("a={}, b={}, a v b={}", l.name(a), l.name(b),
                                 l.name(l.join(a, b)));
    }
  }
  r.check("(i) a <= b implies D_a subset of D_b", !fail_i, fail_i.value_or(""));
  r.check("(ii) D_(a^b) = D_a cap D_b", !fail_ii, fail_ii.value_or(""));
  r.check("(iii) D_a cup D_b subset of D_(avb)", !fail_iii, fail_iii.value_or(""));
  if (strict_iii) r.note("(iii) strict inclusion", *strict_iii);
  r.check("(iv) D_0 empty", basis_D(l, l.bottom()).empty());
  r.check("(iv) D_1 = D(L)", basis_D(l, l.top()) == enumerate_dual_ideals(l));
  r.check("quasipoints dense in D(L)", density_check(l));
  return r;
}

Report verify_lemma15(const Lattice& l) {
  Report r("filter-as-quasipoint-intersection");
  for (auto p : l.nonzero_elements()) {
    ElementMask cap(l.size(), true);
    for (auto q : basis_Q(l, p)) {
      const auto m = mask_of(l, q.ideal());
      for (std::size_t i = 0; i < cap.size(); ++i) cap[i] = cap[i] && m[i];
    }
    r.check(fmt::format("H_{} = cap Q_{}", l.name(p), l.name(p)),
            cap == mask_of(l, DualIdeal{p}));
  }
  return r;
}

}  // namespace obsfn
