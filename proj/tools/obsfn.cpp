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

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "obsfn/corpus.hpp"
#include "obsfn/errors.hpp"
#include "obsfn/gelfand.hpp"
#include "obsfn/io.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/reconstruction.hpp"
#include "obsfn/spectral_family.hpp"
#include "obsfn/stone.hpp"
#include "obsfn/structure.hpp"
#include "obsfn/suites.hpp"

namespace {

using namespace obsfn;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string lattice, family, fn, matrix, ray, format = "text", suite = "all";
  double eps = 0.1;
  std::uint64_t seed = 0;
  std::size_t samples = 16;
};

bool is_builtin(const std::string& spec) { return spec.rfind("builtin:", 0) == 0; }

RawLattice load_raw(const std::string& spec) {
  if (is_builtin(spec)) {
    const auto l = builtin(spec.substr(8));
    return parse_lattice(dump_lattice(*l));
  }
  return parse_lattice(read_file(spec));
}

LatticePtr load_lattice(const std::string& spec) {
  if (is_builtin(spec)) return builtin(spec.substr(8));
  return std::make_shared<const Lattice>(Lattice::from_raw(load_raw(spec)));
}

std::string family_text(const SpectralFamily& e) {
  std::string out;
  for (const auto& j : e.jumps())
    out += fmt::format("E({}) = {}\n", j.lambda, e.lattice().name(j.value));
  return out;
}

std::string yes(bool v) { return v ? "true" : "false"; }

int cmd_check(const Options& o) {
  const auto raw = load_raw(o.lattice);
  const auto s = verify_structure(raw);
  if (o.format == "json") {
    std::cout << dump_structure(s);
  } else {
    auto line = [](const char* label, bool v, const std::optional<Witness>& w) {
      std::cout << label << ": " << yes(v) << "\n";
      if (w) std::cout << "  witness: " << w->text << "\n";
    };
    line("lattice", s.is_lattice, s.lattice_witness);
    line("ortho-complemented", s.is_ortho_complemented, s.ortho_witness);
    line("orthomodular", s.is_orthomodular, s.orthomodular_witness);
    line("distributive", s.is_distributive, s.distributive_witness);
    line("boolean", s.is_boolean, s.boolean_witness);
    line("atomistic", s.is_atomistic, s.atomistic_witness);
  }
  return s.is_oml() && s.is_ortho_complemented ? kPass : kMathFailure;
}

int cmd_quasipoints(const Options& o) {
  const auto l = load_lattice(o.lattice);
  const auto qs = quasipoints(*l);
  if (o.format == "json") {
    std::vector<DualIdeal> ideals;
    for (auto q : qs) ideals.push_back(q.ideal());
    std::cout << dump_ideals(*l, ideals);
    return kPass;
  }
  for (auto q : qs) {
    std::string members;
    for (auto e : obsfn::members(*l, q.ideal()))
      members += (members.empty() ? "" : ", ") + l->name(e);
    std::cout << fmt::format("H_{} = {{{}}}\n", l->name(q.atom), members);
  }
  return kPass;
}

int cmd_obsfn(const Options& o) {
  const auto l = load_lattice(o.lattice);
  const auto e = parse_family(read_file(o.family), l);
  const auto f = observable_fn(e);
  if (o.format == "json") {
    std::cout << dump_table(f);
  } else if (o.format == "csv") {
    std::cout << "element,f\n";
    for (auto p : l->nonzero_elements()) std::cout << fmt::format("{},{}\n", l->name(p), f.at(p));
  } else {
    for (auto p : l->nonzero_elements())
      std::cout << fmt::format("f(H_{}) = {}\n", l->name(p), f.at(p));
  }
  return kPass;
}

int cmd_reconstruct(const Options& o) {
  const auto l = load_lattice(o.lattice);
  const auto f = parse_table(read_file(o.fn), l);
  const auto law = is_abstract_observable(f);
  if (!law.ok) {
    std::cerr << "not an observable function: " << law.detail << "\n";
    return kMathFailure;
  }
  const auto e = reconstruct(f);
  if (o.format == "json")
    std::cout << dump_family(e);
  else if (o.format == "csv")
    std::cout << step_plot_csv(e);
  else
    std::cout << family_text(e);
  return kPass;
}

HermitianOperator load_operator(const Options& o, const Tolerances& tol) {
  return HermitianOperator(parse_matrix(read_file(o.matrix)), tol.herm);
}

int cmd_spectral(const Options& o) {
  const auto tol = Tolerances::from_env();
  const auto a = load_operator(o, tol);
  const auto d = eig(a, tol);
  const auto fam = spectral_family_of(a, tol);
  const auto report = verify_thm3(a, tol);
  if (o.format == "json") {
    json j;
    j["values"] = d.values;
    j["multiplicities"] = json::array();
    for (const auto& b : d.bases) j["multiplicities"].push_back(b.cols());
    j["report"] = json::parse(dump_report(report));
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << step_plot_csv(fam.family);
  } else {
    for (std::size_t i = 0; i < d.values.size(); ++i)
      std::cout << fmt::format("lambda = {} (multiplicity {})\n", d.values[i], d.bases[i].cols());
    std::cout << family_text(fam.family) << format_text(report);
  }
  return report.ok() ? kPass : kMathFailure;
}

int cmd_rays(const Options& o) {
  const auto tol = Tolerances::from_env();
  const auto a = load_operator(o, tol);
  const auto d = eig(a, tol);
  std::vector<RayReading> readings;
  if (!o.ray.empty()) {
    const auto v = parse_ray(read_file(o.ray));
    if (static_cast<std::size_t>(v.size()) != a.dim())
      throw InputError("ray dimension does not match the matrix");
    readings.push_back(read_ray(a, d, Ray(v), tol));
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i)
      readings.push_back(read_ray(a, d, Ray(random_vector(a.dim(), rng)), tol));
  }
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : readings)
      j.push_back({{"f", r.f}, {"g", r.g}, {"expectation", r.expectation},
                   {"ill_conditioned", r.ill_conditioned}});
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << ray_table_csv(readings);
  } else {
    for (std::size_t i = 0; i < readings.size(); ++i) {
      const auto& r = readings[i];
      std::cout << fmt::format("ray {}: f = {} g = {} <Ax,x> = {}{}\n", i, r.f, r.g, r.expectation,
                               r.ill_conditioned ? " (ill-conditioned)" : "");
    }
  }
  bool ok = true;
  for (const auto& r : readings)
    ok = ok && r.g <= r.expectation + tol.check && r.expectation <= r.f + tol.check;
  return ok ? kPass : kMathFailure;
}

int cmd_gelfand(const Options& o) {
  const auto m = parse_matrix(read_file(o.matrix));
  Diagonal diag;
  try {
    diag = diagonal_of(m);
  } catch (const DomainError& e) {
    throw InputError(std::string("gelfand needs a diagonal matrix: ") + e.what());
  }
  const DiagonalAlgebra alg(diag.size());
  const auto values = gelfand_transform(alg, snap(diag));
  const auto qs = alg.quasipoints();
  if (o.format == "json") {
    json j = json::array();
    for (std::size_t i = 0; i < qs.size(); ++i)
      j.push_back({{"atom", alg.lattice().name(qs[i].atom)},
                   {"re", values[i].real()},
                   {"im", values[i].imag()}});
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << gelfand_csv(alg.lattice(), qs, values);
  } else {
    for (std::size_t i = 0; i < qs.size(); ++i)
      std::cout << fmt::format("F(A)(H_{}) = {} + {}i\n", alg.lattice().name(qs[i].atom),
                               values[i].real(), values[i].imag());
  }
  return kPass;
}

int cmd_approx(const Options& o) {
  if (!(o.eps > 0)) throw InputError("--eps must be positive");
  const auto tol = Tolerances::from_env();
  const auto a = load_operator(o, tol);
  const auto s = step_approx(a, o.eps, tol);
  if (o.format == "json") {
    json j;
    j["partition"] = s.partition;
    j["midpoints"] = s.midpoints;
    j["matrix"] = json::parse(dump_matrix(s.a_eps.matrix()));
    j["report"] = json::parse(dump_report(s.report));
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << step_plot_csv(spectral_family_of(s.a_eps, tol).family);
  } else {
    std::cout << "partition:";
    for (double x : s.partition) std::cout << " " << fmt::format("{}", x);
    std::cout << "\nmidpoints:";
    for (double x : s.midpoints) std::cout << " " << fmt::format("{}", x);
    std::cout << "\n" << format_text(s.report);
  }
  return s.report.ok() ? kPass : kMathFailure;
}

int cmd_verify(const Options& o) {
  const auto reports = run_suite(o.suite, o.seed);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (o.format == "json") {
    std::cout << dump_reports(reports);
  } else {
    std::size_t failures = 0, findings = 0;
    for (const auto& r : reports) {
      std::cout << format_text(r);
      failures += r.failures();
      findings += r.findings().size();
    }
    std::cout << fmt::format("{}: {} findings, {} failures (suite {}, seed {})\n",
                             ok ? "PASS" : "FAIL", findings, failures, o.suite, o.seed);
  }
  return ok ? kPass : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observable functions on finite orthomodular lattices and Hermitian matrices"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json", "csv"};
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_lattice = [&](CLI::App* c) {
    c->add_option("--lattice", o.lattice, "Lattice JSON file or builtin:NAME")->required();
  };

  auto* check = app.add_subcommand("check", "Structural verdicts; exit 0 iff orthomodular");
  add_lattice(check);
  add_format(check);

  auto* qp = app.add_subcommand("quasipoints", "List the quasipoints H_a");
  add_lattice(qp);
  add_format(qp);

  auto* obs = app.add_subcommand("obsfn", "Observable function of a spectral family");
  add_lattice(obs);
  obs->add_option("--family", o.family, "Spectral family JSON file")->required();
  add_format(obs);

  auto* rec = app.add_subcommand("reconstruct", "Spectral family behind an observable table");
  add_lattice(rec);
  rec->add_option("--fn", o.fn, "Observable table JSON file")->required();
  add_format(rec);

  auto* mat = app.add_subcommand("matrix", "Hermitian matrix tools");
  mat->require_subcommand(1);
  mat->fallthrough();
  mat->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
  add_format(mat);
  auto* spectral = mat->add_subcommand("spectral", "Eigenvalues and spectral family");
  auto* rays = mat->add_subcommand("rays", "f, g and <Ax,x> on rays");
  rays->add_option("--ray", o.ray, "Ray JSON file (default: random rays)");
  rays->add_option("--samples", o.samples, "Number of random rays");
  rays->add_option("--seed", o.seed, "Seed for random rays");
  auto* gelfand = mat->add_subcommand("gelfand", "Gelfand transform of a diagonal matrix");
  auto* approx = mat->add_subcommand("approx", "Step approximation A_eps");
  approx->add_option("--eps", o.eps, "Mesh bound")->required();

  auto* verify = app.add_subcommand("verify", "Seeded property suites over the corpus");
  verify->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "Seed");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(o);
    if (*qp) return cmd_quasipoints(o);
    if (*obs) return cmd_obsfn(o);
    if (*rec) return cmd_reconstruct(o);
    if (*verify) return cmd_verify(o);
    if (*spectral) return cmd_spectral(o);
    if (*rays) return cmd_rays(o);
    if (*gelfand) return cmd_gelfand(o);
    if (*approx) return cmd_approx(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const obsfn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}
