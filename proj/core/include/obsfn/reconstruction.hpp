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

#ifndef OBSFN_RECONSTRUCTION_HPP_
#define OBSFN_RECONSTRUCTION_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "obsfn/lattice.hpp"
#include "obsfn/report.hpp"
#include "obsfn/spectral_family.hpp"
#include "obsfn/stone.hpp"
#include "obsfn/table.hpp"

namespace obsfn {

/// Outcome of a law check: the first offending pair in index order on failure.
struct LawCheck {
  bool ok = true;
  std::optional<std::pair<Element, Element>> witness;
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// r(a v b) = max(r(a), r(b)) for every pair of nonzero elements. On a finite
/// lattice this is equivalent to the law for arbitrary families.
LawCheck is_completely_increasing(const CompletelyIncreasingFn& r);

/// The family form r(v S) = max r(S), checked over every nonempty subset of
/// nonzero elements. Throws SizeError above 12 elements.
bool family_law_holds(const CompletelyIncreasingFn& r);

/// f_r(J) = min over P in J of r(P). Throws DomainError unless r is
/// completely increasing.
ObservableTable f_from_r(const CompletelyIncreasingFn& r);

/// r_f(P) = f(H_P).
CompletelyIncreasingFn r_from_f(const ObservableTable& f);

/// (i) f(J) = min{f(H_P) : P in J} and (ii) the intersection condition,
/// which on principal ideals is the max law for r_from_f(f).
LawCheck is_abstract_observable(const ObservableTable& f);

/// The unique family with observable function f. Step 1 builds
/// E_lambda = inf J_lambda on the image, step 2 extends between image points;
/// the result is checked against f and against E_lambda = v{P : f(H_P) =
/// lambda}. Throws DomainError if f is not an abstract observable function.
SpectralFamily reconstruct(const ObservableTable& f);

/// Step-by-step verdicts of the reconstruction on f.
Report verify_monotone_steps(const ObservableTable& f);

/// Values at quasipoints, keyed by atom.
using QuasipointFn = std::map<Element, double>;

struct NonObservableWitness {
  std::pair<Element, Element> pair;  // r(a v b) != max(r(a), r(b))
  std::string detail;
};

/// Extends f by r(P) = max{f(B) : B in Q_P}; a family exists iff r is
/// completely increasing and f_r agrees with f on quasipoints.
std::variant<SpectralFamily, NonObservableWitness> observable_from_quasipoint_data(
    LatticePtr lattice, const QuasipointFn& f);

/// For every lambda in im r: F_lambda = r^-1((-inf, lambda]) u {0} is
/// down-closed and join-closed, compared with is_completely_increasing.
Report verify_ideal_criterion(const CompletelyIncreasingFn& r);

struct MirrorVerdict {
  bool symmetric = true;
  std::size_t families_checked = 0;
  // A family whose mirrored function, on quasipoints, is no observable function.
  std::optional<SpectralFamily> witness;
  std::optional<NonObservableWitness> obstruction;
};

/// Distributive L: g = f on quasipoints for every family with thresholds in
/// {0, 1/2, 1}. Otherwise: first family with thresholds in {0, 1} whose
/// mirrored function on quasipoints is not observable.
MirrorVerdict mirror_symmetry_test(LatticePtr lattice);

/// Every strictly increasing chain of nonzero elements ending at top, with
/// thresholds drawn in order from `thresholds` (at most thresholds.size()
/// jumps). Deterministic order.
std::vector<SpectralFamily> enumerate_families(LatticePtr lattice,
                                               const std::vector<double>& thresholds);

}  // namespace obsfn

#endif  // OBSFN_RECONSTRUCTION_HPP_
