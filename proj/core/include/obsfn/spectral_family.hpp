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

#ifndef OBSFN_SPECTRAL_FAMILY_HPP_
#define OBSFN_SPECTRAL_FAMILY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "obsfn/lattice.hpp"
#include "obsfn/report.hpp"
#include "obsfn/stone.hpp"
#include "obsfn/table.hpp"

namespace obsfn {

struct Jump {
  double lambda;
  Element value;

  friend bool operator==(const Jump&, const Jump&) = default;
};

/// Right-continuous increasing step function from the reals into a lattice.
///
/// E(t) = 0 for t < lambda_1, E(t) = E_i on [lambda_i, lambda_(i+1)), and
/// E(t) = 1 from lambda_k on. Thresholds and values strictly increase and the
/// last value is top, so the family is bounded on both sides.
class SpectralFamily {
 public:
  /// Validates; throws DomainError on duplicate or unsorted thresholds,
  /// non-increasing values, a bottom value, or a last value other than top.
  SpectralFamily(LatticePtr lattice, std::vector<Jump> jumps);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<Jump>& jumps() const { return jumps_; }

  Element eval(double lambda) const;
  std::vector<double> thresholds() const;

  friend bool operator==(const SpectralFamily& a, const SpectralFamily& b);

 private:
  LatticePtr lattice_;
  std::vector<Jump> jumps_;
};

SpectralFamily make_spectral_family(LatticePtr lattice, std::vector<Jump> jumps);

/// Jump of a monotone family that need not be right-continuous. With
/// `attained` false the family still has its previous value at `lambda` and
/// takes `value` only strictly after it.
struct PreJump {
  double lambda;
  Element value;
  bool attained;
};

/// Non-decreasing step function reaching top; continuity not assumed.
class PreSpectralFamily {
 public:
  PreSpectralFamily(LatticePtr lattice, std::vector<PreJump> jumps);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<PreJump>& jumps() const { return jumps_; }
  Element eval(double lambda) const;

 private:
  LatticePtr lattice_;
  std::vector<PreJump> jumps_;
};

/// E(t) = meet of F(mu) over mu > t.
SpectralFamily spectralize(const PreSpectralFamily& f);

/// A family living on the interval [0, P] of some source lattice.
struct Section {
  SpectralFamily family;
  Sublattice ideal;  // ideal.lattice is family's lattice; embedding goes to the source
  LatticePtr source;

  Element top_in_source() const { return ideal.to_source(family.lattice().top()); }
  /// Jumps with values translated into the source lattice.
  std::vector<std::pair<double, Element>> lifted() const;
};

/// E viewed as a section over top, with the identity embedding.
Section whole(const SpectralFamily& e);

/// E^a: t -> E(t) ^ a, as a family over [0, a].
Section restrict(const SpectralFamily& e, Element a);
/// Restriction of a section to a nonzero element of its source below its top.
Section restrict(const Section& s, Element a_in_source);

/// f_E(H_p) = min{lambda_i : E_i >= p}.
ObservableTable observable_fn(const SpectralFamily& e);
/// Value of f at a dual ideal.
double value_at(const ObservableTable& f, DualIdeal j);
/// f of a section at a quasipoint of its source; the atom must lie below the
/// section's top.
double value_at(const Section& s, Quasipoint b);

enum class Domain { kQuasipoints, kDualIdeals };
/// Sorted distinct values of f over the chosen domain.
std::vector<double> image_of(const ObservableTable& f, Domain over);

/// Thresholds shifted by a.
SpectralFamily translate(const SpectralFamily& e, double a);

/// Family of -A: reflect thresholds, complement values, spectralize.
/// Throws DomainError if the ortho map is not order reversing.
SpectralFamily negate(const SpectralFamily& e);

/// g_E(H_p) = sup{t : E(t)' >= p}.
ObservableTable mirrored_fn(const SpectralFamily& e);

/// Some R with atom <= R <= P ^ Q and E^R = F^R, if any. Throws DomainError
/// unless the atom of b lies below P ^ Q; both sections need the same source.
std::optional<Element> equivalent_at(const Section& e, const Section& f, Quasipoint b);

/// f(cap J_k) = max f(J_k) over nonempty families of dual ideals: every
/// family when |D(L)| <= 16, otherwise `random_families` seeded draws.
Report verify_intersection(const SpectralFamily& e, std::uint64_t seed = 0,
                           std::size_t random_families = 4096);

/// For each J0 and eps in {1, 1/2, 1/4}: P = E(f(J0) + eps/2) lies in J0 and
/// f < f(J0) + eps on D_P.
Report verify_usc(const SpectralFamily& e);

/// J_lambda = {P : P >= E(mu) for some mu > lambda}, computed literally and
/// checked against the meet E(lambda) and against the intersection of the
/// fiber of lambda. Throws DomainError if lambda is not a value of f.
DualIdeal minimal_ideal(const SpectralFamily& e, double lambda);

}  // namespace obsfn

#endif  // OBSFN_SPECTRAL_FAMILY_HPP_
