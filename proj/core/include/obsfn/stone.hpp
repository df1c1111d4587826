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

#ifndef OBSFN_STONE_HPP_
#define OBSFN_STONE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "obsfn/lattice.hpp"
#include "obsfn/report.hpp"

namespace obsfn {

/// A dual ideal (filter) of a finite lattice. Every such filter is principal,
/// so it is stored as its least element: the ideal is {b : b >= least}.
struct DualIdeal {
  Element least;

  friend auto operator<=>(const DualIdeal&, const DualIdeal&) = default;
};

/// Maximal dual ideal; in a finite lattice, the principal filter of an atom.
struct Quasipoint {
  Element atom;

  DualIdeal ideal() const { return DualIdeal{atom}; }
  friend auto operator<=>(const Quasipoint&, const Quasipoint&) = default;
};

/// Explicit subset of a lattice, one flag per element index.
using ElementMask = std::vector<bool>;

/// H_a. Throws DomainError for a = 0.
DualIdeal principal_filter(const Lattice& l, Element a);
bool contains(const Lattice& l, DualIdeal j, Element a);
std::vector<Element> members(const Lattice& l, DualIdeal j);
ElementMask mask_of(const Lattice& l, DualIdeal j);

/// Clauses (i)-(iii) of the dual-ideal definition plus non-emptiness.
bool is_dual_ideal(const Lattice& l, const ElementMask& subset);
bool is_dual_ideal(const Lattice& l, std::span<const Element> subset);

/// {H_a : a != 0}, ordered by index of a.
std::vector<DualIdeal> enumerate_dual_ideals(const Lattice& l);
/// Every subset passing is_dual_ideal, by exhaustive scan over all 2^n
/// subsets. Throws SizeError above 12 elements.
std::vector<ElementMask> brute_force_dual_ideals(const Lattice& l);
/// True iff the principal enumeration and the subset scan agree.
bool cross_check_dual_ideals(const Lattice& l);

/// One quasipoint per atom, in atom order.
std::vector<Quasipoint> quasipoints(const Lattice& l);
/// Maximal elements of the brute-force dual-ideal list, as masks.
std::vector<ElementMask> maximal_dual_ideals_by_scan(const Lattice& l);

/// Q_a(L) and D_a(L).
std::vector<Quasipoint> basis_Q(const Lattice& l, Element a);
std::vector<DualIdeal> basis_D(const Lattice& l, Element a);

/// Intersection of dual ideals: the filter generated by the join of their
/// least elements. `ideals` must be nonempty: the empty intersection is all of
/// L, which is not a dual ideal.
DualIdeal intersect(const Lattice& l, std::span<const DualIdeal> ideals);

/// Topological closure in D(L) with basis {D_a}: J is in the closure iff
/// every basis set containing J meets S.
std::vector<DualIdeal> closure_in_D(const Lattice& l, std::span<const DualIdeal> s);
/// Closure of D_P via the criterion "P ^ Q != 0 for all Q in J".
std::vector<DualIdeal> closure_of_basis_D(const Lattice& l, Element p);

/// Every nonempty D_a contains a quasipoint.
bool density_check(const Lattice& l);

/// A pair (P, P1) with 0 != P < P1 and H_P1 in closure(D_P) \ D_P.
std::optional<std::pair<Element, Element>> non_hausdorff_witness(const Lattice& l);

Report verify_remark14(const Lattice& l);
Report verify_lemma15(const Lattice& l);

}  // namespace obsfn

#endif  // OBSFN_STONE_HPP_
