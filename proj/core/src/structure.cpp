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

#include "obsfn/structure.hpp"

#include <fmt/format.h>

#include "obsfn/errors.hpp"
#include "order_tables.hpp"

namespace obsfn {

namespace {

std::optional<Witness> ortho_failure(const Lattice& l) {
  const auto& n = [&](Element e) -> const std::string& { return l.name(e); };
  for (auto a : l.elements()) {
    const Element ao = l.ortho(a);
    if (l.ortho(ao) != a)
      return Witness{{a.index}, fmt::format("{}'' = {} != {}", n(a), n(l.ortho(ao)), n(a))};
    if (l.meet(a, ao) != l.bottom())
      return Witness{{a.index}, fmt::format("{} ^ {}' = {} != 0", n(a), n(a), n(l.meet(a, ao)))};
    if (l.join(a, ao) != l.top())
      return Witness{{a.index}, fmt::format("{} v {}' = {} != 1", n(a), n(a), n(l.join(a, ao)))};
  }
  for (auto a : l.elements())
    for (auto b : l.elements())
      if (l.leq(a, b) && !l.leq(l.ortho(b), l.ortho(a)))
        return Witness{{a.index, b.index},
                       fmt::format("{} <= {} but {}' is not <= {}'", n(a), n(b), n(b), n(a))};
  return std::nullopt;
}

std::optional<Witness> orthomodular_failure(const Lattice& l) {
  for (auto a : l.elements())
    for (auto b : l.elements()) {
      if (!l.leq(a, b)) continue;
      const Element rhs = l.join(a, l.meet(b, l.ortho(a)));
      if (rhs != b)
        return Witness{{a.index, b.index},
                       fmt::format("{} <= {} but {} v ({} ^ {}') = {} != {}", l.name(a),
                                   l.name(b), l.name(a), l.name(b), l.name(a), l.name(rhs),
                                   l.name(b))};
    }
  return std::nullopt;
}

std::optional<Witness> distributive_failure(const Lattice& l) {
  for (auto x : l.elements())
    for (auto y : l.elements())
      for (auto z : l.elements()) {
        const Element lhs = l.join(x, l.meet(y, z));
        const Element rhs = l.meet(l.join(x, y), l.join(x, z));
        if (lhs != rhs)
          return Witness{{x.index, y.index, z.index},
                         fmt::format("{0} v ({1} ^ {2}) = {3} != {4} = ({0} v {1}) ^ ({0} v {2})",
                                     l.name(x), l.name(y), l.name(z), l.name(lhs), l.name(rhs))};
      }
  return std::nullopt;
}

std::optional<Witness> atomistic_failure(const Lattice& l) {
  for (auto a : l.elements()) {
    std::vector<Element> below;
    for (auto at : l.atoms())
      if (l.leq(at, a)) below.push_back(at);
    const Element j = l.big_join(below);
    if (j != a)
      return Witness{{a.index},
                     fmt::format("join of atoms below {} is {}", l.name(a), l.name(j))};
  }
  return std::nullopt;
}

}  // namespace

StructureReport verify_structure(const Lattice& lattice) {
  StructureReport r;
  r.is_lattice = true;
  r.ortho_witness = ortho_failure(lattice);
  r.is_ortho_complemented = !r.ortho_witness;
  if (r.is_ortho_complemented) {
    r.orthomodular_witness = orthomodular_failure(lattice);
  } else {
    r.orthomodular_witness = Witness{r.ortho_witness->elements, "not ortho-complemented"};
  }
  r.is_orthomodular = !r.orthomodular_witness;
  r.distributive_witness = distributive_failure(lattice);
  r.is_distributive = !r.distributive_witness;
  if (!r.is_distributive)
    r.boolean_witness = Witness{r.distributive_witness->elements, "not distributive"};
  else if (!r.is_ortho_complemented)
    r.boolean_witness = Witness{r.ortho_witness->elements, "not complemented"};
  r.is_boolean = !r.boolean_witness;
  r.atomistic_witness = atomistic_failure(lattice);
  r.is_atomistic = !r.atomistic_witness;
  return r;
}

StructureReport verify_structure(const RawLattice& raw) {
  const std::size_t n = raw.names.size();
  if (n > Lattice::kMaxElements) throw SizeError("lattice exceeds element bound");
  if (raw.ortho.size() != n) throw InputError("ortho must list one entry per element");
  std::vector<std::uint8_t> order(n * n, 0);
  for (auto [i, j] : raw.leq) {
    if (i >= n || j >= n) throw InputError("leq pair refers to a missing element");
    order[i * n + j] = 1;
  }
  for (auto o : raw.ortho)
    if (o >= n) throw InputError("ortho refers to a missing element");

  auto failed = [&](std::string text, std::vector<std::size_t> elements) {
    StructureReport r;
    std::string where;
    for (auto e : elements) where += " " + raw.names[e];
    r.lattice_witness = Witness{elements, text + where};
    const Witness downstream{elements, "not a lattice"};
    r.ortho_witness = r.orthomodular_witness = r.distributive_witness = r.boolean_witness =
        r.atomistic_witness = downstream;
    return r;
  };
  if (n == 0) return failed("empty element list", {});

  detail::close_order(n, order);
  auto tabulated = detail::tabulate_order(n, order);
  if (auto* f = std::get_if<detail::OrderFailure>(&tabulated))
    return failed(f->what, f->witness);

  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (hit[raw.ortho[i]]) {
      // Order-only verdicts still apply; evaluate them with a placeholder map.
      std::vector<std::uint32_t> identity(n);
      for (std::size_t k = 0; k < n; ++k) identity[k] = static_cast<std::uint32_t>(k);
      StructureReport r = verify_structure(Lattice(raw.names, order, std::move(identity)));
      r.is_ortho_complemented = r.is_orthomodular = r.is_boolean = false;
      r.ortho_witness = Witness{{i}, "ortho map is not a permutation at " + raw.names[i]};
      r.orthomodular_witness = Witness{{i}, "not ortho-complemented"};
      if (!r.boolean_witness) r.boolean_witness = Witness{{i}, "not complemented"};
      return r;
    }
    hit[raw.ortho[i]] = true;
  }
  return verify_structure(Lattice::from_raw(raw));
}

}  // namespace obsfn
