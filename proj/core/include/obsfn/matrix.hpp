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

#ifndef OBSFN_MATRIX_HPP_
#define OBSFN_MATRIX_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "obsfn/lattice.hpp"
#include "obsfn/report.hpp"
#include "obsfn/spectral_family.hpp"

namespace obsfn {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Numerical tolerances of the matrix layer.
struct Tolerances {
  double herm = 1e-12;        // |A - A*| allowed on load, relative to max(1, max|a_ij|)
  double ray = 1e-9;          // |Pi x| above this counts as nonzero
  double check = 1e-9;        // comparisons in the verify_* reports
  double cluster_rel = 1e-8;  // eigenvalue gap, relative to max(1, |A|)

  /// Defaults, with OBS_EPS (if set) replacing `ray` and `check`.
  /// Throws InputError if OBS_EPS is not a positive number.
  static Tolerances from_env();
};

/// Complex Hermitian matrix, symmetrized on construction.
class HermitianOperator {
 public:
  /// Throws DomainError if `m` is not square or not Hermitian within `herm_tol`.
  explicit HermitianOperator(CMatrix m, double herm_tol = 1e-12);
  static HermitianOperator diagonal(const std::vector<double>& entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  /// Operator norm, max |eigenvalue|.
  double norm() const;

 private:
  CMatrix m_;
};

/// Unit vector standing for the line it spans. The phase is fixed so the first
/// component of modulus above 1e-12 is real and positive.
class Ray {
 public:
  /// Throws DomainError for a zero or non-finite vector.
  explicit Ray(const CVector& v);
  const CVector& vector() const { return v_; }
  std::size_t dim() const { return static_cast<std::size_t>(v_.size()); }

 private:
  CVector v_;
};

/// Distinct eigenvalues with their spectral projections.
struct EigenDecomposition {
  std::vector<double> values;       // strictly increasing
  std::vector<CMatrix> projections;  // Pi_i, Hermitian idempotents
  std::vector<CMatrix> bases;        // orthonormal columns spanning ran Pi_i

  std::size_t dim() const { return projections.empty() ? 0 : projections[0].rows(); }
};

/// Clusters eigenvalues whose gap is at most cluster_rel * max(1, |A|); each
/// cluster is represented by its smallest member plus the mean offset from it.
/// Exactly diagonal input skips the solver, so its entries come back verbatim.
/// Throws NumericalError if the solver fails or a projection invariant breaks.
EigenDecomposition eig(const HermitianOperator& a, const Tolerances& tol = {});

std::vector<double> spectrum(const HermitianOperator& a, const Tolerances& tol = {});

/// The spectral family of A inside the Boolean lattice generated by its
/// spectral projections (atoms P1..Pm, index = bitmask of atoms).
struct OperatorFamily {
  SpectralFamily family;
  EigenDecomposition decomposition;

  /// Matrix of a lattice element: the sum of its atoms' projections.
  CMatrix projector(Element e) const;
};

/// Throws SizeError for more than 12 distinct eigenvalues.
OperatorFamily spectral_family_of(const HermitianOperator& a, const Tolerances& tol = {});

/// Image of f over quasipoints and over dual ideals against the spectrum.
Report verify_thm3(const HermitianOperator& a, const Tolerances& tol = {});

struct RayReading {
  double f;            // max{lambda_i : |Pi_i x| > ray}
  double g;            // min{lambda_i : |Pi_i x| > ray}
  double expectation;  // <Ax, x>
  bool ill_conditioned;  // some |Pi_i x| in [1e-12, 1e-6]
};

RayReading read_ray(const HermitianOperator& a, const EigenDecomposition& d, const Ray& x,
                    const Tolerances& tol = {});
double ray_obs(const EigenDecomposition& d, const Ray& x, const Tolerances& tol = {});
double mirrored_ray(const EigenDecomposition& d, const Ray& x, const Tolerances& tol = {});
double expectation(const HermitianOperator& a, const Ray& x);

/// (2) f(z) <= max(f(x), f(y)) for z in span(x, y) on `samples` triples;
/// (1) f(x) <= lambda iff E_lambda x = x on sampled rays; (3) noted.
Report verify_m6(const HermitianOperator& a, std::size_t samples, std::uint64_t seed,
                 const Tolerances& tol = {});

/// Spectral family as partial sums E_lambda = sum of Pi_i with lambda_i <= lambda.
struct MatrixFamily {
  std::vector<double> thresholds;
  std::vector<CMatrix> projectors;
};
MatrixFamily matrix_family(const EigenDecomposition& d);

/// Largest Frobenius distance between matching projectors; infinity when the
/// threshold lists differ by more than `threshold_tol`.
double family_distance(const MatrixFamily& a, const MatrixFamily& b, double threshold_tol = 0);

using RayOracle = std::function<double(const Ray&)>;

/// Rebuilds the spectral family behind a ray oracle. Probes: the columns u_i
/// of `probe_basis`, every u_i + w u_j (i < j, w in {1, i, -1, -i}) and 4n
/// seeded random rays. E_lambda is the projector onto the span of the probes
/// with value <= lambda. Throws NumericalError when the ranks do not account
/// for all n dimensions.
MatrixFamily reconstruct_from_rays(const RayOracle& oracle, const CMatrix& probe_basis,
                                   std::uint64_t seed, const Tolerances& tol = {});
MatrixFamily reconstruct_from_rays(const RayOracle& oracle, std::size_t n, std::uint64_t seed,
                                   const Tolerances& tol = {});

/// At the atomic quasipoint of y: inf over a chain P_y <= ... <= I of the sup
/// of f over sampled rays in ran P equals f(y), attained at P_y.
Report verify_m11(const HermitianOperator& a, const Ray& y, std::size_t samples,
                  std::uint64_t seed, const Tolerances& tol = {});

struct StepApproximation {
  HermitianOperator a_eps;
  std::vector<double> partition;  // lambda_0 < ... < lambda_n
  std::vector<double> midpoints;  // lambda*_k
  Report report;
};

/// A_eps = sum lambda*_k (E_lambda_k - E_lambda_(k-1)) with mesh < eps and
/// midpoint values. Throws DomainError unless eps > 0.
StepApproximation step_approx(const HermitianOperator& a, double eps, const Tolerances& tol = {});

struct RankOneInduction {
  double exact;    // max{lambda_i : Pi_i Q != 0}
  double sampled;  // sup of f over sampled rays in ran Q
};
RankOneInduction rank_one_induction(const EigenDecomposition& d, const CMatrix& q,
                                    std::size_t samples, std::uint64_t seed,
                                    const Tolerances& tol = {});
/// f(p) <= max(f(q), f(r)) for rank-one p below q v r, on sampled triples.
Report verify_rank_one_condition(const EigenDecomposition& d, std::size_t samples,
                                 std::uint64_t seed, const Tolerances& tol = {});

/// Each eigenvector ray reads its eigenvalue, each atom quasipoint of the
/// generated lattice reads its eigenvalue, every quasipoint value is in the
/// spectrum.
Report verify_16a_finite(const HermitianOperator& a, const Tolerances& tol = {});

/// f_A = f_A1 + i f_A2 for A1 = (A + A*)/2, A2 = (A - A*)/2i.
class ComplexObservable {
 public:
  explicit ComplexObservable(const CMatrix& a, const Tolerances& tol = {});
  std::complex<double> at(const Ray& x) const;
  const HermitianOperator& real_part() const { return re_; }
  const HermitianOperator& imag_part() const { return im_; }

 private:
  Tolerances tol_;
  HermitianOperator re_, im_;
  EigenDecomposition re_dec_, im_dec_;
};

CVector random_vector(std::size_t n, std::mt19937_64& rng);
CMatrix random_unitary(std::size_t n, std::mt19937_64& rng);
/// (G + G*)/2 with standard complex Gaussian G.
HermitianOperator random_hermitian(std::size_t n, std::mt19937_64& rng);
/// U diag(values) U* with Haar-ish random U.
HermitianOperator random_hermitian_with_spectrum(const std::vector<double>& values,
                                                 std::mt19937_64& rng);

}  // namespace obsfn

#endif  // OBSFN_MATRIX_HPP_
