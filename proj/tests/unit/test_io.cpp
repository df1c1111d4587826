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

#include <random>

#include <gtest/gtest.h>

#include "obsfn/corpus.hpp"
#include "obsfn/errors.hpp"
#include "obsfn/io.hpp"
#include "obsfn/suites.hpp"

namespace obsfn {
namespace {

TEST(Io, LatticeRoundTrip) {
  for (const auto& name : builtin_names()) {
    const auto l = builtin(name);
    EXPECT_EQ(Lattice::from_raw(parse_lattice(dump_lattice(*l))), *l) << name;
  }
}

TEST(Io, LatticeSchemaErrors) {
  EXPECT_THROW(parse_lattice("{"), InputError);
  EXPECT_THROW(parse_lattice(R"({"elements": ["0", "1"], "leq": [[0, 1]]})"), InputError);
  EXPECT_THROW(parse_lattice(R"({"elements": ["0", "1"], "leq": [[0, 5]], "ortho": [1, 0]})"),
               InputError);
  EXPECT_THROW(parse_lattice(R"({"elements": ["0", "1"], "leq": [[0]], "ortho": [1, 0]})"),
               InputError);
  EXPECT_THROW(parse_lattice(R"({"elements": ["0", "1"], "leq": [], "ortho": [1]})"), InputError);
  EXPECT_THROW(parse_lattice(R"({"elements": [0, 1], "leq": [], "ortho": [1, 0]})"), InputError);
}

TEST(Io, FamilyAndTableRoundTrip) {
  std::mt19937_64 rng(3);
  for (const auto& l : oml_corpus())
    for (int k = 0; k < 10; ++k) {
      const auto e = random_family(l, rng);
      EXPECT_EQ(parse_family(dump_family(e), l), e);
      const auto f = observable_fn(e);
      EXPECT_EQ(parse_table(dump_table(f), l), f);
    }
  const auto b2 = builtin("B2");
  const SpectralFamily thirds(b2, {{0.1 + 0.2, *b2->find("p")}, {1.0 / 3, b2->top()}});
  EXPECT_EQ(parse_family(dump_family(thirds), b2).thresholds(), thirds.thresholds());
}

TEST(Io, FamilyAndTableErrors) {
  const auto b2 = builtin("B2");
  EXPECT_THROW(parse_family(R"({"jumps": [{"lambda": 0, "element": 9}]})", b2), InputError);
  EXPECT_THROW(parse_family(R"({"jumps": [{"lambda": "x", "element": 3}]})", b2), InputError);
  EXPECT_THROW(parse_family(R"({"jumps": [{"lambda": 0, "element": 1}]})", b2), DomainError);
  EXPECT_THROW(parse_table(R"({"values": [{"element": 1, "f": 0}]})", b2), InputError);
  EXPECT_THROW(parse_table(R"({"values": [{"element": 0, "f": 0}]})", b2), InputError);
}

TEST(Io, QuasipointData) {
  const auto mo2 = builtin("MO2");
  QuasipointFn q;
  for (auto a : mo2->atoms()) q[a] = a.index * 0.5;
  EXPECT_EQ(parse_quasipoint_data(dump_quasipoint_data(q), *mo2), q);
  EXPECT_THROW(parse_quasipoint_data(R"({"values": [{"atom": 5, "f": 0}]})", *mo2), InputError);
}

TEST(Io, MatrixAndRay) {
  std::mt19937_64 rng(1);
  const auto a = random_hermitian(4, rng);
  EXPECT_EQ(parse_matrix(dump_matrix(a.matrix())), a.matrix());
  const auto m = parse_matrix(R"({"n": 2, "re": [[1, 0], [0, 2]]})");
  EXPECT_EQ(m(1, 1), std::complex<double>(2, 0));
  EXPECT_THROW(parse_matrix(R"({"n": 2, "re": [[1, 0]]})"), InputError);
  EXPECT_THROW(parse_matrix(R"({"n": 0, "re": []})"), InputError);
  const auto v = parse_ray(R"({"re": [1, 0], "im": [0, 1]})");
  EXPECT_EQ(v[1], std::complex<double>(0, 1));
  EXPECT_THROW(parse_ray(R"({"re": [1, 0], "im": [0]})"), InputError);
}

TEST(Io, Csv) {
  const std::vector<RayReading> rows{{2, 1, 1.5, false}};
  EXPECT_EQ(ray_table_csv(rows), "ray_id,f,g,expectation\n0,2,1,1.5\n");
  const auto b2 = builtin("B2");
  const SpectralFamily e(b2, {{0, *b2->find("p")}, {1, b2->top()}});
  EXPECT_EQ(step_plot_csv(e), "lambda,rank\n0,1\n1,2\n");
  EXPECT_EQ(dump_ideals(*b2, {DualIdeal{*b2->find("p")}}), "[[1,3]]\n");
}

TEST(Suites, DeterministicAndGreen) {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const auto a = run_suite(name, 7);
    const auto b = run_suite(name, 7);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(format_text(a[i]), format_text(b[i]));
      EXPECT_TRUE(a[i].ok()) << format_text(a[i]);
    }
  }
  EXPECT_THROW(run_suite("nope", 1), InputError);
}

}  // namespace
}  // namespace obsfn
