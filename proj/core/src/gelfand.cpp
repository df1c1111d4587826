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

#include "obsfn/gelfand.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include <fmt/format.h>

#include "obsfn/errors.hpp"
#include "obsfn/spectral_family.hpp"

namespace obsfn {

DiagonalAlgebra::DiagonalAlgebra(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("diagonal algebra needs n >= 1");
  if (n > 12) throw SizeError("diagonal algebra is limited to n <= 12");
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(fmt::format("e{}", i + 1));
  lattice_ = std::make_shared<const Lattice>(boolean_lattice(atoms));
}

Element DiagonalAlgebra::projection(std::span<const std::size_t> indices) const {
  std::size_t mask = 0;
  for (auto i : indices) {
    if (i >= n_) throw DomainError("basis index out of range");
    mask |= std::size_t{1} << i;
  }
  return lattice_->element(mask);
}

std::size_t DiagonalAlgebra::basis_index(Quasipoint b) const {
  if (!lattice_->is_atom(b.atom)) throw DomainError("not a quasipoint of the algebra");
  return static_cast<std::size_t>(std::countr_zero(b.atom.index));
}

Diagonal diagonal_of(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  Diagonal d;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > tol)
        throw DomainError(fmt::format("matrix is not diagonal: |a({},{})| = {:.3g}", i + 1,
                                      j + 1, std::abs(m(i, j))));
    d.push_back(m(i, i));
  }
  return d;
}

Diagonal diagonal_in_basis(const CMatrix& a, const CMatrix& u, double tol) {
  return diagonal_of(u.adjoint() * a * u, tol);
}

Diagonal snap(const Diagonal& d, double tol) {
  Diagonal out;
  for (auto z : d) {
    if (std::abs(z) <= tol) z = 0.0;
    for (auto prior : out)
      if (prior != z && std::abs(prior - z) <= tol) {
        z = prior;
        break;
      }
    out.push_back(z);
  }
  return out;
}

OrthogonalRepresentation orthogonal_representation(const DiagonalAlgebra& alg, const Diagonal& a) {
  if (a.size() != alg.dim()) throw DomainError("diagonal has the wrong dimension");
  const Diagonal s = snap(a);
  OrthogonalRepresentation rep;
  std::vector<std::size_t> masks;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0.0) continue;
    auto it = std::find(rep.coefficients.begin(), rep.coefficients.end(), s[i]);
    if (it == rep.coefficients.end()) {
      rep.coefficients.push_back(s[i]);
      masks.push_back(0);
      it = rep.coefficients.end() - 1;
    }
    masks[static_cast<std::size_t>(it - rep.coefficients.begin())] |= std::size_t{1} << i;
  }
  for (auto m : masks) rep.projections.push_back(alg.lattice().element(m));
  return rep;
}

std::vector<std::complex<double>> gelfand_transform(const DiagonalAlgebra& alg, const Diagonal& a) {
  const auto rep = orthogonal_representation(alg, a);
  const Diagonal direct = snap(a);
  const Lattice& l = alg.lattice();
  std::vector<std::complex<double>> out;
  for (auto b : alg.quasipoints()) {
    std::complex<double> value = 0.0;
    for (std::size_t j = 0; j < rep.coefficients.size(); ++j)
      if (l.leq(b.atom, rep.projections[j])) value += rep.coefficients[j];
    if (value != direct[alg.basis_index(b)])
      throw InvariantError("transform disagrees with the diagonal entry at H_" + l.name(b.atom));
    out.push_back(value);
  }
  return out;
}

namespace {

Diagonal random_diagonal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::bernoulli_distribution repeat(0.25);
  Diagonal d;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && repeat(rng))
      d.push_back(d[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
    else
      d.emplace_back(g(rng), g(rng));
  }
  return d;
}

CMatrix as_matrix(const Diagonal& d) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

}  // namespace

Report verify_gt1(const DiagonalAlgebra& alg, std::size_t pairs, std::uint64_t seed) {
  Report r("gelfand-homomorphism");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::size_t add = 0, mul = 0, scale = 0, adj = 0, iso = 0;
  double worst = 0;
  const std::size_t n = alg.dim();
  for (std::size_t t = 0; t < pairs; ++t) {
    const Diagonal a = snap(random_diagonal(n, rng)), b = snap(random_diagonal(n, rng));
    const std::complex<double> c(g(rng), g(rng));
    Diagonal sum(n), prod(n), scaled(n), star(n);
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] = a[i] + b[i];
      prod[i] = a[i] * b[i];
      scaled[i] = c * a[i];
      star[i] = std::conj(a[i]);
    }
    const auto fa = gelfand_transform(alg, a), fb = gelfand_transform(alg, b);
    const auto fsum = gelfand_transform(alg, sum), fprod = gelfand_transform(alg, prod);
    const auto fscaled = gelfand_transform(alg, scaled), fstar = gelfand_transform(alg, star);
    double sup = 0;
    for (std::size_t i = 0; i < n; ++i) {
      add += fsum[i] != fa[i] + fb[i];
      mul += fprod[i] != fa[i] * fb[i];
      scale += fscaled[i] != c * fa[i];
      adj += fstar[i] != std::conj(fa[i]);
      sup = std::max(sup, std::abs(fa[i]));
    }
    Eigen::JacobiSVD<CMatrix> svd(as_matrix(a));
    const double op_norm = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
    worst = std::max(worst, std::abs(sup - op_norm));
    iso += std::abs(sup - op_norm) > 1e-12;
  }
  r.check(fmt::format("F(A+B) = F(A) + F(B) on {} pairs", pairs), add == 0,
          fmt::format("{} mismatches", add));
  r.check("F(AB) = F(A) F(B)", mul == 0, fmt::format("{} mismatches", mul));
  r.check("F(cA) = c F(A)", scale == 0, fmt::format("{} mismatches", scale));
  r.check("F(A*) = conj F(A)", adj == 0, fmt::format("{} mismatches", adj));
  r.check("sup |F(A)| = |A| within 1e-12", iso == 0, fmt::format("worst gap {:.3g}", worst));
  r.check("F(0) = 0", gelfand_transform(alg, Diagonal(n, 0.0)) ==
                          std::vector<std::complex<double>>(n, 0.0));
  return r;
}

Report verify_gt3(const DiagonalAlgebra& alg) {
  Report r("gelfand-characters");
  const Lattice& l = alg.lattice();
  std::size_t mismatches = 0;
  for (auto p : l.elements()) {
    Diagonal d(alg.dim(), 0.0);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if ((p.index >> i) & 1U) d[i] = 1.0;
    const auto fp = gelfand_transform(alg, d);
    const auto qs = alg.quasipoints();
    for (std::size_t k = 0; k < qs.size(); ++k) {
      const double expected = contains(l, qs[k].ideal(), p) ? 1.0 : 0.0;
      mismatches += fp[k] != std::complex<double>(expected, 0.0);
    }
  }
  r.check(fmt::format("F(P)(beta) = [P in beta] for {} projections", l.size()), mismatches == 0,
          fmt::format("{} mismatches", mismatches));
  return r;
}

Report verify_gt4(const DiagonalAlgebra& alg, const std::vector<double>& a) {
  if (a.size() != alg.dim()) throw DomainError("diagonal has the wrong dimension");
  Report r("gelfand-observable");
  Diagonal d(a.begin(), a.end());
  const auto transform = gelfand_transform(alg, d);
  const auto of = spectral_family_of(HermitianOperator::diagonal(a));
  const auto f = observable_fn(of.family);
  const auto g = mirrored_fn(of.family);
  const Lattice& ol = of.family.lattice();

  bool equal = true, mirrored = true;
  const auto qs = alg.quasipoints();
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const std::size_t i = alg.basis_index(qs[k]);
    // The operator-lattice atom whose projection contains basis vector i.
    std::optional<Element> atom;
    for (auto at : ol.atoms()) {
      const auto ii = static_cast<Eigen::Index>(i);
      if (of.projector(at)(ii, ii).real() > 0.5) atom = at;
    }
    if (!atom) throw InvariantError("basis vector lies in no spectral projection");
    equal = equal && transform[k] == std::complex<double>(f.at(*atom), 0.0);
    mirrored = mirrored && g.at(*atom) == f.at(*atom);
  }
  r.check("f_A = F(A) on quasipoints", equal);
  r.check("g_A = f_A on quasipoints", mirrored);
  return r;
}

}  // namespace obsfn
