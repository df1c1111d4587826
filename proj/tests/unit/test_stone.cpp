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

#include <gtest/gtest.h>

#include "obsfn/corpus.hpp"
#include "obsfn/errors.hpp"
#include "obsfn/stone.hpp"
#include "oracles.hpp"

namespace obsfn {
namespace {

Element el(const Lattice& l, std::string_view name) { return *l.find(name); }

std::vector<std::string> names_of(const Lattice& l, DualIdeal j) {
  std::vector<std::string> out;
  for (auto e : members(l, j)) out.push_back(l.name(e));
  return out;
}

// Closure straight from the topology: J is in cl(S) iff every basis set D_a
// containing J meets S. Filters are given as subsets.
std::vector<oracle::Subset> closure_oracle(const Lattice& l, const std::vector<oracle::Subset>& s) {
  std::vector<oracle::Subset> out;
  for (const auto& j : oracle::all_filters(l)) {
    bool in = true;
    for (auto a : l.elements()) {
      if (!j[a.index]) continue;
      const bool meets = std::any_of(s.begin(), s.end(), [&](const auto& k) { return k[a.index]; });
      in = in && meets;
    }
    if (in) out.push_back(j);
  }
  return out;
}

TEST(Stone, PrincipalFilters) {
  const auto b2 = builtin("B2");
  EXPECT_EQ(names_of(*b2, principal_filter(*b2, el(*b2, "p"))),
            (std::vector<std::string>{"p", "1"}));
  EXPECT_EQ(names_of(*b2, principal_filter(*b2, b2->top())), std::vector<std::string>{"1"});
  const auto mo2 = builtin("MO2");
  EXPECT_EQ(names_of(*mo2, principal_filter(*mo2, el(*mo2, "a"))),
            (std::vector<std::string>{"a", "1"}));
  EXPECT_THROW(principal_filter(*b2, b2->bottom()), DomainError);
}

TEST(Stone, IsDualIdeal) {
  const auto b2 = builtin("B2");
  const std::vector<Element> top{b2->top()};
  EXPECT_TRUE(is_dual_ideal(*b2, top));
  const std::vector<Element> pq1{el(*b2, "p"), el(*b2, "q"), b2->top()};
  EXPECT_FALSE(is_dual_ideal(*b2, pq1));
  EXPECT_FALSE(is_dual_ideal(*b2, std::span<const Element>{}));
}

TEST(Stone, EnumerationMatchesSubsetSearch) {
  EXPECT_EQ(enumerate_dual_ideals(*builtin("B2")).size(), 3u);
  EXPECT_EQ(enumerate_dual_ideals(*builtin("MO2")).size(), 5u);
  EXPECT_EQ(enumerate_dual_ideals(*builtin("chain-2")).size(), 1u);
  for (const auto& name : builtin_names()) {
    const auto l = builtin(name);
    if (l->size() > 12) continue;
    auto brute = oracle::all_filters(*l);
    std::vector<oracle::Subset> ours;
    for (auto j : enumerate_dual_ideals(*l)) ours.push_back(mask_of(*l, j));
    std::sort(brute.begin(), brute.end());
    std::sort(ours.begin(), ours.end());
    EXPECT_EQ(ours, brute) << name;
    EXPECT_TRUE(cross_check_dual_ideals(*l)) << name;
  }
}

TEST(Stone, Quasipoints) {
  const auto b2 = builtin("B2");
  EXPECT_EQ(quasipoints(*b2).size(), 2u);
  const auto mo2 = builtin("MO2");
  std::vector<std::string> atoms;
  for (auto q : quasipoints(*mo2)) atoms.push_back(mo2->name(q.atom));
  EXPECT_EQ(atoms, (std::vector<std::string>{"a", "a'", "b", "b'"}));
  EXPECT_EQ(quasipoints(*builtin("2^3")).size(), 3u);
  for (const auto& name : builtin_names()) {
    const auto l = builtin(name);
    if (l->size() > 12) continue;
    const auto all = oracle::all_filters(*l);
    std::vector<oracle::Subset> maximal;
    for (const auto& a : all) {
      bool top = true;
      for (const auto& b : all)
        if (a != b && std::equal(a.begin(), a.end(), b.begin(), [](bool x, bool y) { return !x || y; }))
          top = false;
      if (top) maximal.push_back(a);
    }
    std::vector<oracle::Subset> ours;
    for (auto q : quasipoints(*l)) ours.push_back(mask_of(*l, q.ideal()));
    std::sort(maximal.begin(), maximal.end());
    std::sort(ours.begin(), ours.end());
    EXPECT_EQ(ours, maximal) << name;
  }
}

TEST(Stone, BasisSets) {
  const auto b2 = builtin("B2");
  EXPECT_EQ(basis_Q(*b2, b2->top()), quasipoints(*b2));
  EXPECT_TRUE(basis_Q(*b2, b2->bottom()).empty());
  const auto mo2 = builtin("MO2");
  const auto qa = basis_Q(*mo2, el(*mo2, "a"));
  ASSERT_EQ(qa.size(), 1u);
  EXPECT_EQ(qa[0].atom, el(*mo2, "a"));
}

TEST(Stone, Intersections) {
  const auto b2 = builtin("B2");
  const std::vector<DualIdeal> hp_hq{principal_filter(*b2, el(*b2, "p")),
                                     principal_filter(*b2, el(*b2, "q"))};
  EXPECT_EQ(intersect(*b2, hp_hq).least, b2->top());
  EXPECT_THROW(intersect(*b2, std::span<const DualIdeal>{}), DomainError);
}

TEST(Stone, BasisAlgebraAndFilterIntersection) {
  for (const auto& l : oml_corpus()) {
    const auto r14 = verify_remark14(*l);
    EXPECT_TRUE(r14.ok()) << format_text(r14);
    const auto r15 = verify_lemma15(*l);
    EXPECT_TRUE(r15.ok()) << format_text(r15);
  }
  // MO2: D_a cup D_b misses H_1 although a v b = 1.
  const auto mo2 = builtin("MO2");
  const auto da = basis_D(*mo2, el(*mo2, "a"));
  const auto db = basis_D(*mo2, el(*mo2, "b"));
  const auto d1 = basis_D(*mo2, mo2->top());
  EXPECT_EQ(da.size() + db.size(), 2u);
  EXPECT_EQ(d1.size(), 5u);
  const auto r14 = verify_remark14(*mo2);
  EXPECT_TRUE(std::any_of(r14.findings().begin(), r14.findings().end(), [](const Finding& f) {
    return f.clause == "note: (iii) strict inclusion";
  }));
}

TEST(Stone, FilterIntersectionExamples) {
  const auto cube = builtin("2^3");
  const std::vector<DualIdeal> two{principal_filter(*cube, el(*cube, "e1")),
                                   principal_filter(*cube, el(*cube, "e2"))};
  EXPECT_EQ(intersect(*cube, two).least, el(*cube, "e1+e2"));
  const auto mo2 = builtin("MO2");
  std::vector<DualIdeal> all;
  for (auto q : quasipoints(*mo2)) all.push_back(q.ideal());
  EXPECT_EQ(intersect(*mo2, all).least, mo2->top());
}

TEST(Stone, ClosureOfBasisSets) {
  // B2: the closure of D_p is {H_p, H_1}. H_1 = {1} holds no element
  // disjoint from p, so it lies in every basis set around it together with H_p.
  const auto b2 = builtin("B2");
  const auto p = el(*b2, "p");
  const auto cl = closure_of_basis_D(*b2, p);
  EXPECT_EQ(cl, (std::vector<DualIdeal>{DualIdeal{p}, DualIdeal{b2->top()}}));

  const auto cube = builtin("2^3");
  const auto e1 = el(*cube, "e1");
  const DualIdeal h12{el(*cube, "e1+e2")};
  const auto cl_e1 = closure_of_basis_D(*cube, e1);
  const auto d_e1 = basis_D(*cube, e1);
  EXPECT_NE(std::find(cl_e1.begin(), cl_e1.end(), h12), cl_e1.end());
  EXPECT_EQ(std::find(d_e1.begin(), d_e1.end(), h12), d_e1.end());
  EXPECT_TRUE(non_hausdorff_witness(*cube).has_value());
}

TEST(Stone, ClosureCriterionMatchesTopology) {
  for (const auto& l : oml_corpus()) {
    if (l->size() > 12) continue;
    for (auto p : l->nonzero_elements()) {
      const auto basis = basis_D(*l, p);
      std::vector<oracle::Subset> s;
      for (auto j : basis) s.push_back(mask_of(*l, j));
      auto expected = closure_oracle(*l, s);
      std::vector<oracle::Subset> by_def, by_criterion;
      for (auto j : closure_in_D(*l, basis)) by_def.push_back(mask_of(*l, j));
      for (auto j : closure_of_basis_D(*l, p)) by_criterion.push_back(mask_of(*l, j));
      std::sort(expected.begin(), expected.end());
      std::sort(by_def.begin(), by_def.end());
      std::sort(by_criterion.begin(), by_criterion.end());
      EXPECT_EQ(by_def, expected) << l->name(p);
      EXPECT_EQ(by_criterion, expected) << l->name(p);
    }
    EXPECT_EQ(closure_of_basis_D(*l, l->top()), enumerate_dual_ideals(*l));
  }
}

TEST(Stone, Density) {
  for (const auto& l : oml_corpus()) EXPECT_TRUE(density_check(*l));
}

}  // namespace
}  // namespace obsfn
