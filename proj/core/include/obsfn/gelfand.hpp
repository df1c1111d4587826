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

#ifndef OBSFN_GELFAND_HPP_
#define OBSFN_GELFAND_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "obsfn/lattice.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/report.hpp"
#include "obsfn/stone.hpp"

namespace obsfn {

using Diagonal = std::vector<std::complex<double>>;

/// The algebra of n x n diagonal matrices. Its projection lattice is the
/// Boolean lattice on atoms e1..en (element index = bitmask of basis vectors)
/// and its quasipoints are the n atoms.
class DiagonalAlgebra {
 public:
  /// Throws SizeError for n > 12 and DomainError for n = 0.
  explicit DiagonalAlgebra(std::size_t n);

  std::size_t dim() const { return n_; }
  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::vector<Quasipoint> quasipoints() const { return obsfn::quasipoints(*lattice_); }
  /// Projection onto the listed basis vectors.
  Element projection(std::span<const std::size_t> indices) const;
  /// Basis index of the atom behind a quasipoint.
  std::size_t basis_index(Quasipoint b) const;

 private:
  std::size_t n_;
  LatticePtr lattice_;
};

/// Diagonal of `m`; throws DomainError if an off-diagonal entry exceeds `tol`.
Diagonal diagonal_of(const CMatrix& m, double tol = 1e-12);
/// Diagonal of U* A U, for reaching other maximal abelian subalgebras.
Diagonal diagonal_in_basis(const CMatrix& a, const CMatrix& u, double tol = 1e-12);

/// Ingestion snap: entries within `tol` of 0 become 0, entries within `tol` of
/// an earlier distinct entry take its value.
Diagonal snap(const Diagonal& d, double tol = 1e-12);

/// A = sum b_j P_j with distinct nonzero b_j (order of first appearance) and
/// pairwise disjoint P_j.
struct OrthogonalRepresentation {
  std::vector<std::complex<double>> coefficients;
  std::vector<Element> projections;
};

OrthogonalRepresentation orthogonal_representation(const DiagonalAlgebra& alg, const Diagonal& a);

/// F(A) = sum b_j chi(Q_P_j), listed in quasipoint order. Cross-checked
/// against reading the diagonal directly; throws InvariantError on mismatch.
std::vector<std::complex<double>> gelfand_transform(const DiagonalAlgebra& alg, const Diagonal& a);

/// Additivity, multiplicativity, homogeneity and adjoints exact on `pairs`
/// seeded random pairs; sup |F(A)| against the operator norm within 1e-12.
Report verify_gt1(const DiagonalAlgebra& alg, std::size_t pairs, std::uint64_t seed);

/// F(P)(beta) = 1 iff P in beta, for every projection and quasipoint.
Report verify_gt3(const DiagonalAlgebra& alg);

/// f_A from the operator's spectral family equals F(A) on every quasipoint,
/// and so does the mirrored function.
Report verify_gt4(const DiagonalAlgebra& alg, const std::vector<double>& a);

}  // namespace obsfn

#endif  // OBSFN_GELFAND_HPP_
