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

#include "obsfn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "obsfn/errors.hpp"

namespace obsfn {

namespace {

constexpr double kPhaseFloor = 1e-12;
constexpr double kConditionLow = 1e-12;
constexpr double kConditionHigh = 1e-6;

void fix_phase(CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > kPhaseFloor) {
      v *= std::conj(v[i]) / m;
      v[i] = std::complex<double>(v[i].real(), 0.0);
      return;
    }
  }
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermitian_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Ray drawn from the span of a random nonempty set of eigenspaces, so that f
// takes every spectral value with positive probability.
CVector sample_in_eigenspaces(const EigenDecomposition& d, std::mt19937_64& rng) {
  const std::size_t m = d.values.size();
  std::uniform_int_distribution<std::uint32_t> pick(1, (1U << std::min<std::size_t>(m, 20)) - 1);
  const std::uint32_t subset = pick(rng);
  CVector x = CVector::Zero(static_cast<Eigen::Index>(d.dim()));
  for (std::size_t i = 0; i < m && i < 20; ++i)
    if ((subset >> i) & 1U) x += d.bases[i] * random_vector(d.bases[i].cols(), rng);
  return x;
}

std::complex<double> random_scalar(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

}  // namespace

Tolerances Tolerances::from_env() {
  Tolerances t;
  if (const char* env = std::getenv("OBS_EPS"); env != nullptr && *env != '\0') {
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(env, &used);
      if (used != std::string(env).size()) v = 0;
    } catch (const std::exception&) {
      v = 0;
    }
    if (!(v > 0) || !std::isfinite(v))
      throw InputError(fmt::format("OBS_EPS must be a positive number, got '{}'", env));
    t.ray = v;
    t.check = v;
  }
  return t;
}

HermitianOperator::HermitianOperator(CMatrix m, double herm_tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DomainError("operator must be a nonempty square matrix");
  if (!m.allFinite()) throw DomainError("operator has non-finite entries");
  const double scale = std::max(1.0, max_abs(m));
  const double skew = max_abs(m - m.adjoint());
  if (skew > herm_tol * scale)
    throw DomainError(fmt::format("matrix is not Hermitian (|A - A*| = {:.3g})", skew));
  m_ = (m + m.adjoint()) / 2.0;
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& entries) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(entries.size()),
                            static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  return HermitianOperator(std::move(m));
}

double HermitianOperator::norm() const { return hermitian_norm(m_); }

Ray::Ray(const CVector& v) {
  if (v.size() == 0 || !v.allFinite()) throw DomainError("ray needs a finite nonempty vector");
  const double n = v.norm();
  if (n == 0.0) throw DomainError("the zero vector spans no ray");
  v_ = v / n;
  fix_phase(v_);
}

EigenDecomposition eig(const HermitianOperator& a, const Tolerances& tol) {
  const CMatrix& m = a.matrix();
  const Eigen::Index n = m.rows();

  std::vector<double> ev(static_cast<std::size_t>(n));
  CMatrix vectors;
  const bool diagonal = (m - CMatrix(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0;
  if (diagonal) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto i, auto j) { return m(i, i).real() < m(j, j).real(); });
    vectors = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      ev[static_cast<std::size_t>(k)] = m(order[k], order[k]).real();
      vectors(order[k], k) = 1.0;
    }
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    for (Eigen::Index k = 0; k < n; ++k) ev[static_cast<std::size_t>(k)] = solver.eigenvalues()[k];
    vectors = solver.eigenvectors();
  }

  double norm = 0;
  for (double v : ev) norm = std::max(norm, std::abs(v));
  const double gap = tol.cluster_rel * std::max(1.0, norm);

  EigenDecomposition d;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= ev.size(); ++k) {
    if (k < ev.size() && ev[k] - ev[k - 1] <= gap) continue;
    double offsets = 0;
    for (std::size_t i = start; i < k; ++i) offsets += ev[i] - ev[start];
    d.values.push_back(ev[start] + offsets / static_cast<double>(k - start));
    CMatrix basis(n, static_cast<Eigen::Index>(k - start));
    for (std::size_t i = start; i < k; ++i) {
      CVector col = vectors.col(static_cast<Eigen::Index>(i));
      fix_phase(col);
      basis.col(static_cast<Eigen::Index>(i - start)) = col;
    }
    d.projections.push_back(basis * basis.adjoint());
    d.bases.push_back(std::move(basis));
    start = k;
  }

  // Pi_i Pi_j = 0 for i != j iff the stacked bases are orthonormal.
  CMatrix stacked(n, n);
  CMatrix sum = CMatrix::Zero(n, n), rebuilt = CMatrix::Zero(n, n);
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    stacked.middleCols(col, d.bases[i].cols()) = d.bases[i];
    col += d.bases[i].cols();
    sum += d.projections[i];
    rebuilt += d.values[i] * d.projections[i];
  }
  if (max_abs(stacked.adjoint() * stacked - CMatrix::Identity(n, n)) > tol.check)
    throw NumericalError("spectral projections are not orthogonal");
  if (max_abs(sum - CMatrix::Identity(n, n)) > tol.check)
    throw NumericalError("spectral projections do not sum to the identity");
  if (max_abs(rebuilt - m) > 1e-8 * std::max(1.0, norm))
    throw NumericalError("spectral resolution does not reproduce the operator");
  return d;
}

std::vector<double> spectrum(const HermitianOperator& a, const Tolerances& tol) {
  return eig(a, tol).values;
}

CMatrix OperatorFamily::projector(Element e) const {
  const auto n = static_cast<Eigen::Index>(decomposition.dim());
  CMatrix p = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < decomposition.projections.size(); ++i)
    if ((e.index >> i) & 1U) p += decomposition.projections[i];
  return p;
}

OperatorFamily spectral_family_of(const HermitianOperator& a, const Tolerances& tol) {
  EigenDecomposition d = eig(a, tol);
  const std::size_t m = d.values.size();
  if (m > 12)
    throw SizeError(fmt::format("{} distinct eigenvalues exceed the 12-atom Boolean bound", m));
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < m; ++i) atoms.push_back(fmt::format("P{}", i + 1));
  auto lattice = std::make_shared<const Lattice>(boolean_lattice(atoms));
  std::vector<Jump> jumps;
  for (std::size_t i = 0; i < m; ++i)
    jumps.push_back({d.values[i], lattice->element((std::size_t{1} << (i + 1)) - 1)});
  return OperatorFamily{SpectralFamily(lattice, std::move(jumps)), std::move(d)};
}

Report verify_thm3(const HermitianOperator& a, const Tolerances& tol) {
  Report r("image-equals-spectrum");
  const auto of = spectral_family_of(a, tol);
  const auto f = observable_fn(of.family);
  const auto& sp = of.decomposition.values;
  auto close = [&](const std::vector<double>& image) {
    if (image.size() != sp.size()) return false;
    for (std::size_t i = 0; i < sp.size(); ++i)
      if (std::abs(image[i] - sp[i]) > tol.check) return false;
    return true;
  };
  r.check("im f over quasipoints = sp(A)", close(image_of(f, Domain::kQuasipoints)),
          fmt::format("{} eigenvalues", sp.size()));
  r.check("im f over dual ideals = sp(A)", close(image_of(f, Domain::kDualIdeals)));
  return r;
}

RayReading read_ray(const HermitianOperator& a, const EigenDecomposition& d, const Ray& x,
                    const Tolerances& tol) {
  if (x.dim() != d.dim()) throw DomainError("ray dimension does not match the operator");
  RayReading out{-std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity(), expectation(a, x), false};
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const double c = (d.bases[i].adjoint() * x.vector()).norm();
    if (c >= kConditionLow && c <= kConditionHigh) out.ill_conditioned = true;
    if (c > tol.ray) {
      out.f = std::max(out.f, d.values[i]);
      out.g = std::min(out.g, d.values[i]);
    }
  }
  if (!std::isfinite(out.f)) throw NumericalError("ray has no component in any eigenspace");
  return out;
}

double ray_obs(const EigenDecomposition& d, const Ray& x, const Tolerances& tol) {
  if (x.dim() != d.dim()) throw DomainError("ray dimension does not match the operator");
  double f = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.values.size(); ++i)
    if ((d.bases[i].adjoint() * x.vector()).norm() > tol.ray) f = std::max(f, d.values[i]);
  if (!std::isfinite(f)) throw NumericalError("ray has no component in any eigenspace");
  return f;
}

double mirrored_ray(const EigenDecomposition& d, const Ray& x, const Tolerances& tol) {
  if (x.dim() != d.dim()) throw DomainError("ray dimension does not match the operator");
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.values.size(); ++i)
    if ((d.bases[i].adjoint() * x.vector()).norm() > tol.ray) g = std::min(g, d.values[i]);
  if (!std::isfinite(g)) throw NumericalError("ray has no component in any eigenspace");
  return g;
}

double expectation(const HermitianOperator& a, const Ray& x) {
  if (x.dim() != a.dim()) throw DomainError("ray dimension does not match the operator");
  return x.vector().dot(a.matrix() * x.vector()).real();
}

Report verify_m6(const HermitianOperator& a, std::size_t samples, std::uint64_t seed,
                 const Tolerances& tol) {
  Report r("ray-function-properties");
  const auto d = eig(a, tol);
  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  std::string first;
  for (std::size_t s = 0; s < samples; ++s) {
    const CVector x = sample_in_eigenspaces(d, rng);
    const CVector y = sample_in_eigenspaces(d, rng);
    const CVector z = random_scalar(rng) * x + random_scalar(rng) * y;
    const double fx = ray_obs(d, Ray(x), tol), fy = ray_obs(d, Ray(y), tol);
    const double fz = ray_obs(d, Ray(z), tol);
    if (fz > std::max(fx, fy)) {
      if (violations++ == 0) first = fmt::format("f(z) = {} > max({}, {})", fz, fx, fy);
    }
  }
  r.check(fmt::format("(2) f(z) <= max(f(x), f(y)) on {} span triples", samples),
          violations == 0, violations ? fmt::format("{} violations; {}", violations, first) : "");

  const auto fam = matrix_family(d);
  std::size_t mismatches = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Ray x(sample_in_eigenspaces(d, rng));
    const double fx = ray_obs(d, x, tol);
    for (std::size_t i = 0; i < fam.thresholds.size(); ++i) {
      const bool below = fx <= fam.thresholds[i];
      const bool fixed = (fam.projectors[i] * x.vector() - x.vector()).norm() <= tol.check;
      if (below != fixed) ++mismatches;
    }
  }
  r.check("(1) f(x) <= lambda iff E_lambda x = x", mismatches == 0,
          fmt::format("{} mismatches", mismatches));
  r.note("(3) domain of f", "all of projective space in finite dimension");
  return r;
}

MatrixFamily matrix_family(const EigenDecomposition& d) {
  MatrixFamily fam;
  const auto n = static_cast<Eigen::Index>(d.dim());
  CMatrix acc = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    acc += d.projections[i];
    fam.thresholds.push_back(d.values[i]);
    fam.projectors.push_back(acc);
  }
  return fam;
}

double family_distance(const MatrixFamily& a, const MatrixFamily& b, double threshold_tol) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a.thresholds.size() != b.thresholds.size()) return inf;
  double worst = 0;
  for (std::size_t i = 0; i < a.thresholds.size(); ++i) {
    if (std::abs(a.thresholds[i] - b.thresholds[i]) > threshold_tol) return inf;
    if (a.projectors[i].rows() != b.projectors[i].rows()) return inf;
    worst = std::max(worst, (a.projectors[i] - b.projectors[i]).norm());
  }
  return worst;
}

MatrixFamily reconstruct_from_rays(const RayOracle& oracle, const CMatrix& probe_basis,
                                   std::uint64_t seed, const Tolerances& tol) {
  const Eigen::Index n = probe_basis.rows();
  if (n == 0 || probe_basis.cols() != n) throw DomainError("probe basis must be n x n");
  std::vector<CVector> probes;
  for (Eigen::Index i = 0; i < n; ++i) probes.push_back(probe_basis.col(i));
  const std::complex<double> phases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (auto w : phases) probes.push_back(probe_basis.col(i) + w * probe_basis.col(j));
  std::mt19937_64 rng(seed);
  for (Eigen::Index k = 0; k < 4 * n; ++k) probes.push_back(random_vector(n, rng));

  std::vector<Ray> rays;
  std::vector<double> values;
  for (const auto& p : probes) {
    if (p.norm() == 0.0) continue;
    rays.emplace_back(p);
    values.push_back(oracle(rays.back()));
  }
  std::vector<double> levels = values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [&](double lo, double hi) {
                             return hi - lo <= tol.check * std::max(1.0, std::abs(hi));
                           }),
               levels.end());

  MatrixFamily fam;
  Eigen::Index previous_rank = 0;
  for (double lambda : levels) {
    CMatrix gram = CMatrix::Zero(n, n);
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (values[k] <= lambda + tol.check * std::max(1.0, std::abs(lambda)))
        gram += rays[k].vector() * rays[k].vector().adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    const double top = solver.eigenvalues().maxCoeff();
    CMatrix projector = CMatrix::Zero(n, n);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (solver.eigenvalues()[k] <= 1e-10 * top) continue;
      const CVector v = solver.eigenvectors().col(k);
      projector += v * v.adjoint();
      ++rank;
    }
    if (rank <= previous_rank)
      throw NumericalError(fmt::format("level {} adds no dimension to the span", lambda));
    previous_rank = rank;
    fam.thresholds.push_back(lambda);
    fam.projectors.push_back(std::move(projector));
  }
  if (previous_rank != n)
    throw NumericalError(fmt::format(
        "probe set does not resolve all eigenspaces: ranks account for {} of {} dimensions",
        previous_rank, n));
  return fam;
}

MatrixFamily reconstruct_from_rays(const RayOracle& oracle, std::size_t n, std::uint64_t seed,
                                   const Tolerances& tol) {
  const auto m = static_cast<Eigen::Index>(n);
  return reconstruct_from_rays(oracle, CMatrix::Identity(m, m), seed, tol);
}

Report verify_m11(const HermitianOperator& a, const Ray& y, std::size_t samples,
                  std::uint64_t seed, const Tolerances& tol) {
  Report r("ray-quasipoint-extension");
  const auto d = eig(a, tol);
  const auto n = static_cast<Eigen::Index>(a.dim());
  std::mt19937_64 rng(seed);

  // Chain P_y <= span(y, e_1) <= ... <= I, keeping only strict growth.
  std::vector<CMatrix> bases{y.vector()};
  for (Eigen::Index k = 0; k < n; ++k) {
    const CVector ek = CVector::Unit(n, k);
    const CVector out = ek - bases.back() * (bases.back().adjoint() * ek);
    if (out.norm() <= 1e-9) continue;
    CMatrix grown(n, bases.back().cols() + 1);
    grown << bases.back(), out / out.norm();
    bases.push_back(std::move(grown));
  }

  const double fy = ray_obs(d, y, tol);
  std::vector<double> sups;
  for (const auto& b : bases) {
    double sup = fy;  // y lies in every member of the chain
    for (std::size_t s = 0; s < samples; ++s) {
      const CVector x = b * random_vector(b.cols(), rng);
      if (x.norm() <= 1e-12) continue;
      sup = std::max(sup, ray_obs(d, Ray(x), tol));
    }
    sups.push_back(sup);
  }
  const double inf = *std::min_element(sups.begin(), sups.end());
  r.check("inf over chain of sup f = f(y)", std::abs(inf - fy) <= tol.check,
          fmt::format("inf = {}, f(y) = {}", inf, fy));
  r.check("infimum attained at P_y", sups.front() == inf);
  r.check("sup f increases along the chain", std::is_sorted(sups.begin(), sups.end()));
  r.note("coverage", fmt::format("chain of {} projections, {} sampled rays each; sampled, "
                                 "not exhaustive", bases.size(), samples));
  return r;
}

StepApproximation step_approx(const HermitianOperator& a, double eps, const Tolerances& tol) {
  if (!(eps > 0) || !std::isfinite(eps)) throw DomainError("eps must be positive");
  const auto of = spectral_family_of(a, tol);
  const auto& d = of.decomposition;
  const double lo = d.values.front(), hi = d.values.back();

  std::vector<double> partition;
  if (hi - lo < eps) {
    const double margin = (eps - (hi - lo)) / 4;
    partition = {lo - margin, hi + margin};
  } else {
    const double start = lo - eps / 4, end = hi + eps / 4;
    const auto steps = static_cast<std::size_t>(std::ceil((end - start) / (eps / 2)));
    const double h = (end - start) / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) partition.push_back(start + h * static_cast<double>(k));
    partition.push_back(end);
  }
  std::vector<double> mid;
  for (std::size_t k = 1; k < partition.size(); ++k)
    mid.push_back((partition[k - 1] + partition[k]) / 2);

  // Eigenvalue i falls into (lambda_(k-1), lambda_k].
  const std::size_t m = d.values.size();
  std::vector<std::size_t> slot(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t k = 1;
    while (d.values[i] > partition[k]) ++k;
    slot[i] = k - 1;
  }
  const auto n = static_cast<Eigen::Index>(a.dim());
  CMatrix a_eps = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < m; ++i) a_eps += mid[slot[i]] * d.projections[i];

  // The same operator on the lattice side: one jump per occupied interval.
  const Lattice& l = of.family.lattice();
  std::vector<Jump> jumps;
  std::uint32_t cumulative = 0;
  std::vector<std::uint32_t> increment(mid.size(), 0);
  for (std::size_t i = 0; i < m; ++i) increment[slot[i]] |= 1U << i;
  for (std::size_t k = 0; k < mid.size(); ++k) {
    if (increment[k] == 0) continue;
    cumulative |= increment[k];
    jumps.push_back({mid[k], l.element(cumulative)});
  }
  const auto f_eps = observable_fn(SpectralFamily(of.family.lattice_ptr(), jumps));
  const auto f_a = observable_fn(of.family);

  StepApproximation out{HermitianOperator(a_eps), partition, mid, Report("step-approximation")};
  Report& r = out.report;
  double mesh = 0;
  for (std::size_t k = 1; k < partition.size(); ++k)
    mesh = std::max(mesh, partition[k] - partition[k - 1]);
  r.check(fmt::format("mesh {} < eps {}", mesh, eps), mesh < eps);

  double sup = 0;
  bool closed_form = true;
  for (auto atom : l.atoms()) {
    sup = std::max(sup, std::abs(f_a.at(atom) - f_eps.at(atom)));
    double sum = 0.0;
    for (std::size_t k = 0; k < mid.size(); ++k)
      sum += mid[k] * (l.leq(atom, l.element(increment[k])) && increment[k] != 0 ? 1.0 : 0.0);
    closed_form = closed_form && sum == f_eps.at(atom);
  }
  r.check(fmt::format("sup |f_A - f_A_eps| = {} <= eps", sup), sup <= eps);
  const double dist = hermitian_norm(a.matrix() - a_eps);
  r.check(fmt::format("|A - A_eps| = {} <= eps", dist), dist <= eps);
  r.check("f_A_eps = sum lambda*_k chi(Q_P_k)", closed_form);

  const auto sp_eps = spectrum(out.a_eps, tol);
  bool spectrum_ok = true;
  std::vector<double> used;
  for (std::size_t k = 0; k < mid.size(); ++k)
    if (increment[k] != 0) used.push_back(mid[k]);
  spectrum_ok = sp_eps.size() == used.size();
  for (std::size_t k = 0; spectrum_ok && k < used.size(); ++k)
    spectrum_ok = std::abs(sp_eps[k] - used[k]) <= tol.check * std::max(1.0, std::abs(used[k]));
  r.check("sp(A_eps) = occupied midpoints", spectrum_ok);
  return out;
}

RankOneInduction rank_one_induction(const EigenDecomposition& d, const CMatrix& q,
                                    std::size_t samples, std::uint64_t seed,
                                    const Tolerances& tol) {
  if (static_cast<std::size_t>(q.rows()) != d.dim() || q.rows() != q.cols())
    throw DomainError("projector dimension does not match the operator");
  RankOneInduction out{-std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < d.values.size(); ++i)
    if ((d.projections[i] * q).norm() > tol.ray) out.exact = std::max(out.exact, d.values[i]);
  if (!std::isfinite(out.exact)) throw DomainError("projector is zero");
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const CVector x = q * random_vector(d.dim(), rng);
    if (x.norm() <= 1e-12) continue;
    out.sampled = std::max(out.sampled, ray_obs(d, Ray(x), tol));
  }
  return out;
}

Report verify_rank_one_condition(const EigenDecomposition& d, std::size_t samples,
                                 std::uint64_t seed, const Tolerances& tol) {
  Report r("rank-one-condition");
  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const CVector q = sample_in_eigenspaces(d, rng);
    const CVector rr = sample_in_eigenspaces(d, rng);
    const CVector p = random_scalar(rng) * q + random_scalar(rng) * rr;
    if (ray_obs(d, Ray(p), tol) > std::max(ray_obs(d, Ray(q), tol), ray_obs(d, Ray(rr), tol)))
      ++violations;
  }
  r.check(fmt::format("s(P) <= max(s(Q), s(R)) for P <= Q v R on {} triples", samples),
          violations == 0, fmt::format("{} violations", violations));
  return r;
}

Report verify_16a_finite(const HermitianOperator& a, const Tolerances& tol) {
  Report r("eigenvalue-fibers");
  const auto of = spectral_family_of(a, tol);
  const auto& d = of.decomposition;
  const auto f = observable_fn(of.family);
  const Lattice& l = of.family.lattice();
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const Ray x(d.bases[i].col(0));
    r.check(fmt::format("eigenvector ray reads {}", d.values[i]),
            ray_obs(d, x, tol) == d.values[i]);
    const Element atom = l.element(std::size_t{1} << i);
    bool inside = true;
    for (auto q : basis_Q(l, atom)) inside = inside && f.at(q.atom) == d.values[i];
    r.check(fmt::format("Q_(E_l - E_l-) lies in the fiber of {}", d.values[i]), inside);
  }
  bool in_spectrum = true;
  for (auto q : quasipoints(l))
    in_spectrum = in_spectrum && std::binary_search(d.values.begin(), d.values.end(), f.at(q.atom));
  r.check("every quasipoint value is an eigenvalue", in_spectrum);
  return r;
}

ComplexObservable::ComplexObservable(const CMatrix& a, const Tolerances& tol)
    : tol_(tol),
      re_((a + a.adjoint()) / 2.0),
      im_((a - a.adjoint()) / std::complex<double>(0, 2)),
      re_dec_(eig(re_, tol)),
      im_dec_(eig(im_, tol)) {}

std::complex<double> ComplexObservable::at(const Ray& x) const {
  return {ray_obs(re_dec_, x, tol_), ray_obs(im_dec_, x, tol_)};
}

CVector random_vector(std::size_t n, std::mt19937_64& rng) {
  CVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = random_scalar(rng);
  return v;
}

CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  CMatrix g(m, m);
  for (Eigen::Index j = 0; j < m; ++j) g.col(j) = random_vector(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto rjj = rmat(j, j);
    if (std::abs(rjj) > 0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

HermitianOperator random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  CMatrix g(m, m);
  for (Eigen::Index j = 0; j < m; ++j) g.col(j) = random_vector(n, rng);
  return HermitianOperator((g + g.adjoint()) / 2.0);
}

HermitianOperator random_hermitian_with_spectrum(const std::vector<double>& values,
                                                 std::mt19937_64& rng) {
  const CMatrix u = random_unitary(values.size(), rng);
  CMatrix diag = CMatrix::Zero(u.rows(), u.cols());
  for (std::size_t i = 0; i < values.size(); ++i)
    diag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
  const CMatrix a = u * diag * u.adjoint();
  return HermitianOperator((a + a.adjoint()) / 2.0);
}

}  // namespace obsfn
