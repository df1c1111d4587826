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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "obsfn/errors.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/spectral_family.hpp"
#include "obsfn/stone.hpp"
#include "oracles.hpp"

namespace obsfn {
namespace {

CMatrix real(std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Ray ray(std::initializer_list<std::complex<double>> v) {
  CVector x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto c : v) x[i++] = c;
  return Ray(x);
}

const HermitianOperator kPauliX(real({{0, 1}, {1, 0}}));

TEST(Matrix, RejectsNonHermitian) {
  EXPECT_THROW(HermitianOperator(real({{0, 1}, {0, 0}})), DomainError);
  EXPECT_THROW(HermitianOperator(CMatrix(2, 3)), DomainError);
  EXPECT_THROW(Ray(CVector::Zero(3)), DomainError);
}

TEST(Matrix, EigExamples) {
  const auto d = eig(HermitianOperator::diagonal({1, 2, 2}));
  EXPECT_EQ(d.values, (std::vector<double>{1, 2}));
  EXPECT_EQ(d.bases[1].cols(), 2);

  const auto x = eig(kPauliX);
  ASSERT_EQ(x.values.size(), 2u);
  EXPECT_NEAR(x.values[0], -1, 1e-12);
  EXPECT_NEAR(x.values[1], 1, 1e-12);
  const CMatrix plus = real({{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_LT((x.projections[1] - plus).norm(), 1e-12);

  const auto z = eig(HermitianOperator(CMatrix::Zero(3, 3)));
  EXPECT_EQ(z.values, std::vector<double>{0});
  EXPECT_LT((z.projections[0] - CMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(Matrix, EigProjectionInvariants) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 6;
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<double>(i % 3));
    const auto a = random_hermitian_with_spectrum(values, rng);
    const auto d = eig(a);
    CMatrix sum = CMatrix::Zero(n, n), recon = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      EXPECT_LT((d.projections[i] * d.projections[i] - d.projections[i]).norm(), 1e-9);
      sum += d.projections[i];
      recon += d.values[i] * d.projections[i];
    }
    EXPECT_LT((sum - CMatrix::Identity(n, n)).norm(), 1e-9);
    EXPECT_LT((recon - a.matrix()).norm(), 1e-9);
    EXPECT_EQ(d.values.size(), std::min<std::size_t>(n, 3));
  }
}

TEST(Matrix, SpectralFamilyOf) {
  const auto f = spectral_family_of(HermitianOperator::diagonal({1, 2, 2}));
  EXPECT_EQ(f.family.lattice().size(), 4u);
  EXPECT_EQ(f.family.thresholds(), (std::vector<double>{1, 2}));
  EXPECT_LT((f.projector(f.family.jumps()[0].value) - CMatrix(real({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}))).norm(),
            1e-15);

  // Projection onto e2: kernel first, then the full space.
  const auto p = spectral_family_of(HermitianOperator::diagonal({0, 1}));
  ASSERT_EQ(p.family.jumps().size(), 2u);
  EXPECT_EQ(p.family.jumps()[0].lambda, 0);
  EXPECT_TRUE(p.family.lattice().is_atom(p.family.jumps()[0].value));
  EXPECT_EQ(p.family.jumps()[1].lambda, 1);

  const auto z = spectral_family_of(HermitianOperator(CMatrix::Zero(2, 2)));
  EXPECT_EQ(z.family.jumps().size(), 1u);
  EXPECT_EQ(z.family.jumps()[0].lambda, 0);

  std::vector<double> many;
  for (int i = 0; i < 13; ++i) many.push_back(i);
  EXPECT_THROW(spectral_family_of(HermitianOperator::diagonal(many)), SizeError);
}

TEST(Matrix, SpectrumEqualsImage) {
  EXPECT_EQ(spectrum(HermitianOperator::diagonal({1, 2, 2})), (std::vector<double>{1, 2}));
  EXPECT_EQ(spectrum(HermitianOperator::diagonal({3, 3})), std::vector<double>{3});
  EXPECT_TRUE(verify_thm3(kPauliX).ok());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_hermitian(2 + k % 7, rng);
    EXPECT_TRUE(verify_thm3(a).ok());
    const auto fam = spectral_family_of(a);
    const auto sp = spectrum(a);
    const auto im = image_of(observable_fn(fam.family), Domain::kQuasipoints);
    ASSERT_EQ(im.size(), sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i) EXPECT_EQ(im[i], sp[i]);
  }
}

TEST(Matrix, RayObservable) {
  const auto a = HermitianOperator::diagonal({1, 2, 3});
  const auto d = eig(a);
  EXPECT_EQ(ray_obs(d, ray({1, 0, 0})), 1);
  EXPECT_EQ(ray_obs(d, ray({1, 1, 0})), 2);
  EXPECT_EQ(ray_obs(d, ray({1, 1, 1})), 3);

  const auto b = HermitianOperator::diagonal({1, 2});
  const auto x = read_ray(b, eig(b), ray({1, 1}));
  EXPECT_EQ(x.g, 1);
  EXPECT_EQ(x.f, 2);
  EXPECT_NEAR(x.expectation, 1.5, 1e-15);

  const auto c = HermitianOperator::diagonal({0, 10});
  const auto y = read_ray(c, eig(c), ray({3, 1}));
  EXPECT_EQ(y.g, 0);
  EXPECT_EQ(y.f, 10);
  EXPECT_NEAR(y.expectation, 1.0, 1e-14);

  const auto e = read_ray(c, eig(c), ray({0, 1}));
  EXPECT_EQ(e.f, e.g);
  EXPECT_EQ(e.expectation, 10);
}

TEST(Matrix, RayObservableAgainstSolverOracle) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 6;
    const auto a = random_hermitian(n, rng);
    const auto d = eig(a);
    for (int s = 0; s < 10; ++s) {
      const CVector v = random_vector(n, rng);
      const Ray x(v);
      EXPECT_NEAR(ray_obs(d, x), oracle::ray_max(a.matrix(), v), 1e-9);
      const auto r = read_ray(a, d, x);
      EXPECT_LE(r.g, r.expectation + 1e-9);
      EXPECT_LE(r.expectation, r.f + 1e-9);
      EXPECT_NEAR(mirrored_ray(d, x), -ray_obs(eig(HermitianOperator(-a.matrix())), x), 1e-9);
    }
  }
}

TEST(Matrix, M6) {
  std::mt19937_64 rng(6);
  const auto a = random_hermitian(4, rng);
  EXPECT_TRUE(verify_m6(a, 1000, 1).ok());
  EXPECT_TRUE(verify_m6(HermitianOperator::diagonal({1, 1, 2, 5}), 200, 2).ok());
  // An eigenvector inside span(x, y) reads its eigenvalue, below the max.
  const auto b = HermitianOperator::diagonal({1, 2, 3});
  const auto d = eig(b);
  const double fx = ray_obs(d, ray({1, 1, 0}));
  const double fy = ray_obs(d, ray({1, -1, 0}));
  EXPECT_LE(ray_obs(d, ray({1, 0, 0})), std::max(fx, fy));
}

TEST(Matrix, ReconstructFromRays) {
  for (const auto& a : {HermitianOperator::diagonal({1, 2, 2}), HermitianOperator::diagonal({4, 4, 4}),
                        kPauliX}) {
    const auto d = eig(a);
    const auto rebuilt = reconstruct_from_rays([&](const Ray& x) { return ray_obs(d, x); }, a.dim(), 1);
    EXPECT_LT(family_distance(rebuilt, matrix_family(d), 1e-12), 1e-12);
  }
  const auto c = HermitianOperator::diagonal({4, 4, 4});
  const auto rc =
      reconstruct_from_rays([&](const Ray& x) { return ray_obs(eig(c), x); }, 3, 1);
  EXPECT_EQ(rc.thresholds, std::vector<double>{4});
  const auto x = reconstruct_from_rays([&](const Ray& r) { return ray_obs(eig(kPauliX), r); }, 2, 1);
  ASSERT_EQ(x.projectors.size(), 2u);
  EXPECT_NEAR(x.projectors[0].trace().real(), 1, 1e-12);
}

TEST(Matrix, ReconstructFromRaysRandom) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 2 + k % 7;
    const auto a = random_hermitian(n, rng);
    const auto d = eig(a);
    CMatrix probes(n, n);
    Eigen::Index col = 0;
    for (const auto& basis : d.bases) {
      probes.middleCols(col, basis.cols()) = basis;
      col += basis.cols();
    }
    const auto rebuilt = reconstruct_from_rays([&](const Ray& x) { return ray_obs(d, x); }, probes, rng());
    EXPECT_LT(family_distance(rebuilt, matrix_family(d), 1e-9), 1e-8);
  }
}

TEST(Matrix, M11) {
  const auto b = HermitianOperator::diagonal({1, 2});
  EXPECT_TRUE(verify_m11(b, ray({1, 1}), 50, 3).ok());
  EXPECT_TRUE(verify_m11(b, ray({1, 0}), 50, 3).ok());
  std::mt19937_64 rng(31);
  const auto a = random_hermitian(3, rng);
  EXPECT_TRUE(verify_m11(a, Ray(random_vector(3, rng)), 100, 4).ok());
}

TEST(Matrix, StepApproximation) {
  const auto a = HermitianOperator::diagonal({0, 1});
  const auto s = step_approx(a, 0.1);
  EXPECT_TRUE(s.report.ok()) << format_text(s.report);
  for (std::size_t i = 0; i + 1 < s.partition.size(); ++i)
    EXPECT_LT(s.partition[i + 1] - s.partition[i], 0.1);

  // eps above the spectral diameter: a single step at the midpoint.
  const auto wide = step_approx(a, 5);
  EXPECT_EQ(wide.midpoints.size(), 1u);
  EXPECT_EQ(spectrum(wide.a_eps).size(), 1u);
  EXPECT_LE(std::abs(spectrum(wide.a_eps)[0] - 0.5), 5);
  EXPECT_TRUE(wide.report.ok());

  EXPECT_THROW(step_approx(a, 0), DomainError);
  std::mt19937_64 rng(2);
  for (double eps : {1.0, 0.1, 0.01})
    for (int k = 0; k < 5; ++k) {
      const auto r = step_approx(random_hermitian(4, rng), eps);
      EXPECT_TRUE(r.report.ok()) << format_text(r.report);
    }
}

TEST(Matrix, RankOneInduction) {
  const auto b = HermitianOperator::diagonal({1, 2});
  const auto d = eig(b);
  const auto all = rank_one_induction(d, CMatrix::Identity(2, 2), 50, 1);
  EXPECT_EQ(all.exact, 2);
  const CMatrix e1 = real({{1, 0}, {0, 0}});
  EXPECT_EQ(rank_one_induction(d, e1, 50, 1).exact, 1);
  EXPECT_EQ(rank_one_induction(d, e1, 50, 1).sampled, 1);
  const CMatrix diag_line = real({{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_EQ(rank_one_induction(d, diag_line, 50, 1).exact, 2);
  EXPECT_TRUE(verify_rank_one_condition(d, 200, 5).ok());
}

TEST(Matrix, EigenvalueFibers) {
  EXPECT_TRUE(verify_16a_finite(HermitianOperator::diagonal({1, 2, 2})).ok());
  EXPECT_TRUE(verify_16a_finite(HermitianOperator::diagonal({7, 7})).ok());
  EXPECT_TRUE(verify_16a_finite(kPauliX).ok());
}

TEST(Matrix, ToleranceFromEnvironment) {
  ::setenv("OBS_EPS", "1e-6", 1);
  const auto t = Tolerances::from_env();
  EXPECT_EQ(t.ray, 1e-6);
  EXPECT_EQ(t.check, 1e-6);
  EXPECT_EQ(t.herm, 1e-12);
  ::setenv("OBS_EPS", "abc", 1);
  EXPECT_THROW(Tolerances::from_env(), InputError);
  ::setenv("OBS_EPS", "-1", 1);
  EXPECT_THROW(Tolerances::from_env(), InputError);
  ::unsetenv("OBS_EPS");
  EXPECT_EQ(Tolerances::from_env().ray, 1e-9);
}

TEST(Matrix, ComplexObservable) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = {1, 2};
  m(1, 1) = {3, -1};
  const ComplexObservable c(m);
  EXPECT_EQ(c.at(ray({1, 0})), std::complex<double>(1, 2));
  EXPECT_EQ(c.at(ray({1, 1})), std::complex<double>(3, 2));
}

}  // namespace
}  // namespace obsfn
