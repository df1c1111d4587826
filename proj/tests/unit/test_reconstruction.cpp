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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "obsfn/corpus.hpp"
#include "obsfn/errors.hpp"
#include "obsfn/reconstruction.hpp"
#include "obsfn/structure.hpp"
#include "oracles.hpp"

namespace obsfn {
namespace {

Element el(const Lattice& l, std::string_view name) { return *l.find(name); }

CompletelyIncreasingFn make_r(const LatticePtr& l,
                              std::initializer_list<std::pair<const char*, double>> values) {
  CompletelyIncreasingFn r(l);
  for (auto [n, v] : values) r.set(el(*l, n), v);
  return r;
}

// r(v S) = max r(S) over every nonempty subset, joined by the oracle.
bool family_law_oracle(const CompletelyIncreasingFn& r) {
  const Lattice& l = r.lattice();
  const auto nz = l.nonzero_elements();
  for (std::size_t mask = 1; mask < (std::size_t{1} << nz.size()); ++mask) {
    Element j = l.bottom();
    double m = -INFINITY;
    for (std::size_t i = 0; i < nz.size(); ++i)
      if ((mask >> i) & 1) {
        j = oracle::lub(l, j, nz[i]);
        m = std::max(m, r.at(nz[i]));
      }
    if (r.at(j) != m) return false;
  }
  return true;
}

TEST(Reconstruction, CompletelyIncreasingExamples) {
  const auto b2 = builtin("B2");
  EXPECT_TRUE(is_completely_increasing(make_r(b2, {{"p", 0}, {"q", 1}, {"1", 1}})).ok);

  const auto mo2 = builtin("MO2");
  const auto chi = make_r(mo2, {{"a", 1}, {"a'", 0}, {"b", 0}, {"b'", 0}, {"1", 1}});
  const auto law = is_completely_increasing(chi);
  EXPECT_FALSE(law.ok);
  ASSERT_TRUE(law.witness.has_value());
  EXPECT_EQ(*law.witness, std::make_pair(el(*mo2, "b"), el(*mo2, "b'")));
  EXPECT_FALSE(family_law_holds(chi));

  CompletelyIncreasingFn constant(mo2);
  for (auto p : mo2->nonzero_elements()) constant.set(p, 4);
  EXPECT_TRUE(is_completely_increasing(constant).ok);
}

TEST(Reconstruction, FromRAndBack) {
  const auto b2 = builtin("B2");
  const auto r = make_r(b2, {{"p", 0}, {"q", 1}, {"1", 1}});
  const auto f = f_from_r(r);
  EXPECT_EQ(f.at(el(*b2, "p")), 0);
  EXPECT_EQ(f.at(el(*b2, "q")), 1);
  EXPECT_EQ(f.at(b2->top()), 1);
  EXPECT_EQ(r_from_f(f), r);

  const auto mo2 = builtin("MO2");
  const auto chi = make_r(mo2, {{"a", 1}, {"a'", 0}, {"b", 0}, {"b'", 0}, {"1", 1}});
  EXPECT_THROW(f_from_r(chi), DomainError);

  // A diagonal with three eigenvalues on 2^3: r(P) is the largest value on P.
  const auto cube = builtin("2^3");
  const SpectralFamily e(cube, {{1, el(*cube, "e1")}, {2, el(*cube, "e1+e2")}, {3, cube->top()}});
  CompletelyIncreasingFn rd(cube);
  const double diag[] = {1, 2, 3};
  for (auto p : cube->nonzero_elements()) {
    double m = -INFINITY;
    for (int i = 0; i < 3; ++i)
      if ((p.index >> i) & 1) m = std::max(m, diag[i]);
    rd.set(p, m);
  }
  EXPECT_EQ(f_from_r(rd), observable_fn(e));
  EXPECT_EQ(r_from_f(observable_fn(e)), rd);
}

TEST(Reconstruction, ProjectionComplementPattern) {
  const auto b2 = builtin("B2");
  const SpectralFamily e(b2, {{0, el(*b2, "p")}, {1, b2->top()}});
  const auto r = r_from_f(observable_fn(e));
  // 1 - chi: 0 exactly on the elements below I - P = p.
  for (auto x : b2->nonzero_elements())
    EXPECT_EQ(r.at(x), b2->leq(x, el(*b2, "p")) ? 0 : 1);
}

TEST(Reconstruction, AbstractObservable) {
  std::mt19937_64 rng(17);
  for (const auto& lp : oml_corpus())
    for (int k = 0; k < 10; ++k) EXPECT_TRUE(is_abstract_observable(observable_fn(random_family(lp, rng))).ok);

  const auto mo2 = builtin("MO2");
  ObservableTable sup_ext(mo2);
  for (auto p : mo2->nonzero_elements()) {
    double m = -INFINITY;
    for (auto a : mo2->atoms())
      if (mo2->leq(a, p)) m = std::max(m, a == el(*mo2, "a") ? 1.0 : 0.0);
    sup_ext.set(p, m);
  }
  EXPECT_FALSE(is_abstract_observable(sup_ext).ok);
  EXPECT_THROW(reconstruct(sup_ext), DomainError);
}

TEST(Reconstruction, Examples) {
  const auto b2 = builtin("B2");
  ObservableTable f(b2);
  f.set(el(*b2, "p"), 0);
  f.set(el(*b2, "q"), 1);
  f.set(b2->top(), 1);
  EXPECT_EQ(reconstruct(f), SpectralFamily(b2, {{0, el(*b2, "p")}, {1, b2->top()}}));
  EXPECT_TRUE(verify_monotone_steps(f).ok());

  ObservableTable c(b2);
  for (auto p : b2->nonzero_elements()) c.set(p, 0.3);
  EXPECT_EQ(reconstruct(c), SpectralFamily(b2, {{0.3, b2->top()}}));
  EXPECT_TRUE(verify_monotone_steps(c).ok());

  const auto cube = builtin("2^3");
  const SpectralFamily e(cube,
                         {{0.1, el(*cube, "e1")}, {1.0 / 3, el(*cube, "e1+e2")}, {2, cube->top()}});
  const auto back = reconstruct(observable_fn(e));
  EXPECT_EQ(back, e);
  EXPECT_EQ(back.thresholds()[1], 1.0 / 3);
}

TEST(Reconstruction, QuasipointData) {
  const auto mo2 = builtin("MO2");
  QuasipointFn chi;
  for (auto a : mo2->atoms()) chi[a] = a == el(*mo2, "a") ? 1 : 0;
  const auto res = observable_from_quasipoint_data(mo2, chi);
  const auto* w = std::get_if<NonObservableWitness>(&res);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->pair, std::make_pair(el(*mo2, "b"), el(*mo2, "b'")));

  QuasipointFn constant;
  for (auto a : mo2->atoms()) constant[a] = 2;
  const auto c = observable_from_quasipoint_data(mo2, constant);
  ASSERT_TRUE(std::holds_alternative<SpectralFamily>(c));
  EXPECT_EQ(std::get<SpectralFamily>(c), SpectralFamily(mo2, {{2, mo2->top()}}));

  // Every value pattern in {0, 1/3, 1} on the atoms of a distributive lattice.
  for (const char* name : {"B2", "2^3", "2^4"}) {
    const auto l = builtin(name);
    const std::size_t m = l->atoms().size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      QuasipointFn q;
      std::size_t x = code;
      for (auto a : l->atoms()) {
        q[a] = std::array<double, 3>{0, 1.0 / 3, 1}[x % 3];
        x /= 3;
      }
      const auto res2 = observable_from_quasipoint_data(l, q);
      ASSERT_TRUE(std::holds_alternative<SpectralFamily>(res2)) << name << " " << code;
      const auto fe = observable_fn(std::get<SpectralFamily>(res2));
      for (auto a : l->atoms()) EXPECT_EQ(fe.at(a), q.at(a));
    }
  }
}

TEST(Reconstruction, IdealCriterion) {
  const auto b2 = builtin("B2");
  const auto rep = verify_ideal_criterion(make_r(b2, {{"p", 0}, {"q", 1}, {"1", 1}}));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.findings().front().clause, "note: F_0");
  EXPECT_EQ(rep.findings().front().detail, "ideal");

  const auto mo2 = builtin("MO2");
  const auto chi = make_r(mo2, {{"a", 1}, {"a'", 0}, {"b", 0}, {"b'", 0}, {"1", 1}});
  const auto bad = verify_ideal_criterion(chi);
  EXPECT_TRUE(bad.ok());  // the equivalence holds: neither side does
  EXPECT_EQ(bad.findings().front().clause, "note: F_0");
  EXPECT_EQ(bad.findings().front().detail.rfind("not join-closed", 0), 0u);
  EXPECT_EQ(bad.findings()[1].clause, "note: F_1 (improper, all of L)");
}

TEST(Reconstruction, MirrorSymmetry) {
  EXPECT_TRUE(mirror_symmetry_test(builtin("B2")).symmetric);
  EXPECT_TRUE(mirror_symmetry_test(builtin("2^3")).symmetric);
  const auto mo2 = builtin("MO2");
  const auto v = mirror_symmetry_test(mo2);
  EXPECT_FALSE(v.symmetric);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, SpectralFamily(mo2, {{0, el(*mo2, "a")}, {1, mo2->top()}}));
  ASSERT_TRUE(v.obstruction.has_value());
  EXPECT_FALSE(mirror_symmetry_test(builtin("MO3")).symmetric);
}

TEST(Reconstruction, EnumerateFamilies) {
  const auto b2 = builtin("B2");
  // {1} takes either threshold; p < 1 and q < 1 need both, in order.
  const auto fams = enumerate_families(b2, {0, 1});
  EXPECT_EQ(fams.size(), 4u);
}

class ReconstructionProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(ReconstructionProperties, Hold) {
  const auto lp = builtin(GetParam());
  std::mt19937_64 rng(std::hash<std::string>{}(GetParam()) ^ 7);
  for (int k = 0; k < 40; ++k) {
    const auto r = random_completely_increasing(lp, rng);
    ASSERT_TRUE(is_completely_increasing(r).ok);
    const auto f = f_from_r(r);
    EXPECT_EQ(r_from_f(f), r);
    EXPECT_EQ(observable_fn(reconstruct(f)), f);
    EXPECT_TRUE(verify_monotone_steps(f).ok());
    EXPECT_TRUE(verify_ideal_criterion(r).ok());

    const auto e = random_family(lp, rng);
    EXPECT_EQ(reconstruct(observable_fn(e)), e);

    if (lp->size() <= 12) {
      const auto t = random_table(lp, rng, {0, 0.5, 1});
      const bool pairwise = is_completely_increasing(t).ok;
      EXPECT_EQ(pairwise, family_law_holds(t));
      EXPECT_EQ(pairwise, family_law_oracle(t));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, ReconstructionProperties,
                         ::testing::Values("chain-2", "B2", "2^3", "2^4", "MO2", "MO3"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace_if(s.begin(), s.end(), [](char c) { return !std::isalnum(c); }, '_');
                           return s;
                         });

}  // namespace
}  // namespace obsfn
