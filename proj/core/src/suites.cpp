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

#include "obsfn/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "obsfn/corpus.hpp"
#include "obsfn/errors.hpp"
#include "obsfn/gelfand.hpp"
#include "obsfn/io.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/reconstruction.hpp"
#include "obsfn/spectral_family.hpp"
#include "obsfn/stone.hpp"
#include "obsfn/structure.hpp"

namespace obsfn {
namespace {

// Counts cases of one property and keeps the first counterexample.
struct Tally {
  std::size_t cases = 0;
  std::size_t bad = 0;
  std::string first;

  void add(bool ok, const std::function<std::string()>& detail) {
    ++cases;
    if (!ok && bad++ == 0) first = detail();
  }
  void put(Report& r, std::string clause) const {
    r.check(std::move(clause), bad == 0,
            bad == 0 ? fmt::format("{} cases", cases)
                     : fmt::format("{} of {} cases fail; first: {}", bad, cases, first));
  }
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::string fam(const SpectralFamily& e) {
  std::string s = "[";
  for (const auto& j : e.jumps())
    s += fmt::format("{}({}, {})", s.size() > 1 ? ", " : "", j.lambda, e.lattice().name(j.value));
  return s + "]";
}

bool atomic(const Lattice& l) {
  for (auto a : l.nonzero_elements())
    if (std::none_of(l.atoms().begin(), l.atoms().end(), [&](Element b) { return l.leq(b, a); }))
      return false;
  return true;
}

struct Expected {
  bool oml, distributive;
};

Expected expected_for(std::string_view name) {
  if (name == "benzene-O6") return {false, false};
  if (name == "MO2" || name == "MO3") return {true, false};
  return {true, true};
}

// ---------------------------------------------------------------- lattice

std::vector<Report> lattice_suite(std::uint64_t seed) {
  std::vector<Report> out;
  std::mt19937_64 rng(mix(seed, 1));
  for (const auto& name : builtin_names()) {
    const auto l = builtin(name);
    Report r("lattice/" + name);
    const auto s = verify_structure(*l);
    const auto want = expected_for(name);
    r.check("lattice", s.is_lattice);
    r.check("ortho-complemented", s.is_ortho_complemented);
    r.check(want.oml ? "orthomodular" : "not orthomodular", s.is_orthomodular == want.oml,
            s.orthomodular_witness ? s.orthomodular_witness->text : "");
    r.check(want.distributive ? "distributive" : "not distributive",
            s.is_distributive == want.distributive,
            s.distributive_witness ? s.distributive_witness->text : "");
    r.check("boolean iff distributive and ortho-complemented",
            s.is_boolean == (s.is_distributive && s.is_ortho_complemented));
    r.check("atomic", atomic(*l));

    Tally relabel;
    for (int k = 0; k < 4; ++k) {
      std::vector<std::size_t> perm(l->size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto t = verify_structure(permuted(*l, perm));
      const bool same = t.is_lattice == s.is_lattice &&
                        t.is_ortho_complemented == s.is_ortho_complemented &&
                        t.is_orthomodular == s.is_orthomodular &&
                        t.is_distributive == s.is_distributive && t.is_boolean == s.is_boolean &&
                        t.is_atomistic == s.is_atomistic;
      relabel.add(same, [&] { return fmt::format("permutation {} changes a verdict", k); });
    }
    relabel.put(r, "verdicts invariant under relabeling");

    const auto back = Lattice::from_raw(parse_lattice(dump_lattice(*l)));
    r.check("file round trip", back == *l);
    out.push_back(std::move(r));
  }

  Report p("lattice/MO2xchain-2");
  const auto prod = product(*builtin("MO2"), *builtin("chain-2"));
  const auto s = verify_structure(prod);
  p.check("product is orthomodular", s.is_oml());
  p.check("product is not distributive", !s.is_distributive);
  p.check("product has 12 elements", prod.size() == 12);
  out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------- stone

std::vector<Report> stone_suite(std::uint64_t) {
  std::vector<Report> out;
  for (const auto& n : builtin_names()) {
    if (!expected_for(n).oml) continue;
    const auto l = builtin(n);
    Report r("stone/" + n);
    r.absorb(verify_remark14(*l));
    r.absorb(verify_lemma15(*l));
    r.check("quasipoints dense in dual ideals", density_check(*l));
    if (l->size() <= 12) {
      std::vector<ElementMask> qs;
      for (auto q : quasipoints(*l)) qs.push_back(mask_of(*l, q.ideal()));
      auto scan = maximal_dual_ideals_by_scan(*l);
      std::sort(qs.begin(), qs.end());
      std::sort(scan.begin(), scan.end());
      r.check("quasipoints are the maximal dual ideals", qs == scan);
      r.check("principal filters are all dual ideals", cross_check_dual_ideals(*l));
    }

    Tally closure;
    for (auto p : l->nonzero_elements()) {
      if (p == l->top()) continue;
      const auto cl = closure_of_basis_D(*l, p);
      const auto basis = basis_D(*l, p);
      bool found = false;
      for (auto j : cl)
        if (l->lt(p, j.least) && std::find(basis.begin(), basis.end(), j) == basis.end())
          found = true;
      closure.add(found, [&] { return fmt::format("no H_P1 with P1 > {} outside D_P", l->name(p)); });
    }
    closure.put(r, "closure of D_P strictly larger than D_P");
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- spectral

std::vector<Report> spectral_suite(std::uint64_t seed) {
  std::vector<Report> out;
  std::mt19937_64 rng(mix(seed, 3));
  for (const auto& n : builtin_names()) {
    if (!expected_for(n).oml) continue;
    const auto lp = builtin(n);
    const Lattice& l = *lp;
    Report r("spectral/" + n);
    Tally inter, usc, antitone, minlaw, images, sup_law, restr, below, neg, mirror, minimal, germs,
        unique;
    const auto ideals = enumerate_dual_ideals(l);
    const auto qs = quasipoints(l);
    std::vector<SpectralFamily> seen;
    std::vector<ObservableTable> tables;

    for (int k = 0; k < 12; ++k) {
      const auto e = random_family(lp, rng);
      const auto f = observable_fn(e);
      const auto where = [&] { return fam(e); };

      inter.add(verify_intersection(e, rng(), 256).ok(), where);
      usc.add(verify_usc(e).ok(), where);

      bool anti = true, law = true;
      for (auto a : ideals)
        for (auto b : ideals)
          if (l.leq(b.least, a.least) && value_at(f, b) > value_at(f, a)) anti = false;
      for (auto j : ideals) {
        double m = INFINITY;
        for (auto p : members(l, j)) m = std::min(m, f.at(p));
        if (m != value_at(f, j)) law = false;
      }
      antitone.add(anti, where);
      minlaw.add(law, where);

      auto thr = e.thresholds();
      images.add(image_of(f, Domain::kQuasipoints) == thr &&
                     image_of(f, Domain::kDualIdeals) == thr,
                 where);

      bool l15 = true, res = true;
      for (auto p : l.nonzero_elements()) {
        double m = -INFINITY;
        for (auto b : basis_Q(l, p)) m = std::max(m, value_at(f, b.ideal()));
        if (m != f.at(p)) l15 = false;
        const auto s = restrict(e, p);
        for (auto b : qs)
          if (l.leq(b.atom, p) && value_at(s, b) != f.at(b.atom)) res = false;
      }
      sup_law.add(l15, where);
      restr.add(res, where);

      const auto g = mirrored_fn(e);
      bool le = true;
      for (auto b : qs) le = le && g.at(b.atom) <= f.at(b.atom);
      below.add(le, where);

      const auto ne = negate(e);
      neg.add(negate(ne) == e, where);
      const auto fneg = observable_fn(ne);
      bool mir = true;
      for (auto p : l.nonzero_elements()) mir = mir && g.at(p) == -fneg.at(p);
      mirror.add(mir, where);

      bool mi = true;
      for (double lambda : image_of(f, Domain::kDualIdeals))
        mi = mi && minimal_ideal(e, lambda).least == e.eval(lambda);
      minimal.add(mi, where);

      for (std::size_t i = 0; i < tables.size(); ++i)
        unique.add((tables[i] == f) == (seen[i] == e),
                   [&] { return fmt::format("{} vs {}", fam(seen[i]), fam(e)); });
      for (std::size_t i = 0; i < seen.size(); ++i) {
        const auto& other = seen[i];
        for (auto p : l.nonzero_elements())
          for (auto q : l.nonzero_elements()) {
            const auto pq = l.meet(p, q);
            if (pq == l.bottom()) continue;
            const auto se = restrict(e, p);
            const auto sf = restrict(other, q);
            for (auto b : qs) {
              if (!l.leq(b.atom, pq)) continue;
              if (!equivalent_at(se, sf, b)) continue;
              germs.add(value_at(se, b) == value_at(sf, b), [&] {
                return fmt::format("{} and {} at H_{}", fam(e), fam(other), l.name(b.atom));
              });
            }
          }
      }
      seen.push_back(e);
      tables.push_back(f);
    }
    inter.put(r, "f of an intersection is the max");
    usc.put(r, "upper semicontinuous");
    antitone.put(r, "f antitone on dual ideals");
    minlaw.put(r, "f(J) = min f(H_P) over P in J");
    images.put(r, "image over quasipoints = image over dual ideals = thresholds");
    sup_law.put(r, "f(H_P) = max f over Q_P");
    restr.put(r, "restriction agrees with f on quasipoints below");
    below.put(r, "g <= f on quasipoints");
    neg.put(r, "negate is an involution");
    mirror.put(r, "g = -f of the negated family");
    minimal.put(r, "inf of the minimal ideal is E_lambda");
    germs.put(r, "equivalent at a quasipoint implies equal values");
    unique.put(r, "equal tables iff equal families");
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- recon

std::vector<Report> recon_suite(std::uint64_t seed) {
  std::vector<Report> out;
  std::mt19937_64 rng(mix(seed, 4));
  for (const auto& n : builtin_names()) {
    if (!expected_for(n).oml) continue;
    const auto lp = builtin(n);
    const Lattice& l = *lp;
    Report r("recon/" + n);
    Tally round_r, round_f, ci, laws, steps, ideal_crit, fam_round;
    for (int k = 0; k < 20; ++k) {
      const auto rr = random_completely_increasing(lp, rng);
      const auto f = f_from_r(rr);
      ci.add(is_completely_increasing(rr).ok, [] { return std::string("generated r"); });
      round_r.add(r_from_f(f) == rr, [] { return std::string("r_from_f(f_from_r(r)) != r"); });
      const auto e = reconstruct(f);
      round_f.add(observable_fn(e) == f, [&] { return fam(e); });
      steps.add(verify_monotone_steps(f).ok(), [&] { return fam(e); });
      ideal_crit.add(verify_ideal_criterion(rr).ok(), [&] { return fam(e); });

      const auto g = random_family(lp, rng);
      fam_round.add(reconstruct(observable_fn(g)) == g, [&] { return fam(g); });

      const auto t = random_table(lp, rng, {0.0, 0.5, 1.0});
      if (l.size() <= 12)
        laws.add(is_completely_increasing(t).ok == family_law_holds(t),
                 [] { return std::string("pairwise and family law disagree"); });
    }
    ci.put(r, "generated functions are completely increasing");
    round_r.put(r, "r_from_f inverts f_from_r");
    round_f.put(r, "observable_fn inverts reconstruct");
    fam_round.put(r, "reconstruct inverts observable_fn");
    steps.put(r, "reconstruction steps");
    ideal_crit.put(r, "ideal criterion");
    if (l.size() <= 12) laws.put(r, "pairwise law iff family law");

    const auto verdict = mirror_symmetry_test(lp);
    if (expected_for(n).distributive) {
      r.check("g = f for every family", verdict.symmetric,
              verdict.witness ? fam(*verdict.witness) : "");
      Tally realized;
      const std::size_t m = l.atoms().size();
      std::size_t total = 1;
      for (std::size_t i = 0; i < m; ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        QuasipointFn q;
        std::size_t c = code;
        for (auto a : l.atoms()) {
          q[a] = 0.5 * static_cast<double>(c % 3);
          c /= 3;
        }
        const auto res = observable_from_quasipoint_data(lp, q);
        bool ok = std::holds_alternative<SpectralFamily>(res);
        if (ok) {
          const auto fe = observable_fn(std::get<SpectralFamily>(res));
          for (auto a : l.atoms()) ok = ok && fe.at(a) == q.at(a);
        }
        realized.add(ok, [&] { return fmt::format("value code {}", code); });
      }
      realized.put(r, "every {0, 1/2, 1} function on quasipoints is realized");
    } else {
      r.check("some family has g != f", !verdict.symmetric && verdict.witness.has_value(),
              verdict.witness ? fam(*verdict.witness) : "");
      Tally chi;
      for (auto a : l.atoms()) {
        QuasipointFn q;
        for (auto b : l.atoms()) q[b] = b == a ? 1.0 : 0.0;
        const auto res = observable_from_quasipoint_data(lp, q);
        const auto* w = std::get_if<NonObservableWitness>(&res);
        chi.add(w != nullptr, [&] { return "chi of Q_" + l.name(a) + " realized"; });
      }
      chi.put(r, "chi of Q_a is not observable");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- matrix

HermitianOperator degenerate_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> level(-8, 8);
  std::uniform_int_distribution<std::size_t> distinct(1, n);
  const std::size_t k = distinct(rng);
  std::vector<double> pool;
  while (pool.size() < k) {
    const double v = level(rng) / 4.0;
    if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = pool[i % k];
  return random_hermitian_with_spectrum(values, rng);
}

std::vector<Report> matrix_suite(std::uint64_t seed) {
  std::vector<Report> out;
  std::mt19937_64 rng(mix(seed, 5));
  for (std::size_t n = 2; n <= 6; ++n) {
    Report r(fmt::format("matrix/n={}", n));
    for (int k = 0; k < 3; ++k) {
      const auto a = k == 0 ? random_hermitian(n, rng) : degenerate_hermitian(n, rng);
      const auto d = eig(a);
      r.absorb(verify_thm3(a));
      r.absorb(verify_m6(a, 200, rng()));
      r.absorb(verify_16a_finite(a));
      r.absorb(verify_m11(a, Ray(random_vector(n, rng)), 64, rng()));
      r.absorb(verify_rank_one_condition(d, 64, rng()));

      Tally sandwich;
      for (int s = 0; s < 100; ++s) {
        const auto x = read_ray(a, d, Ray(random_vector(n, rng)));
        sandwich.add(x.g <= x.expectation + 1e-9 && x.expectation <= x.f + 1e-9,
                     [&] { return fmt::format("g {} <A x, x> {} f {}", x.g, x.expectation, x.f); });
      }
      sandwich.put(r, "g <= <Ax, x> <= f");

      for (double eps : {1.0, 0.1}) r.absorb(step_approx(a, eps).report);

      // Probes from the eigenbases, rotated inside each eigenspace.
      CMatrix probes(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      Eigen::Index col = 0;
      for (const auto& basis : d.bases) {
        const CMatrix rot = basis * random_unitary(static_cast<std::size_t>(basis.cols()), rng);
        probes.middleCols(col, rot.cols()) = rot;
        col += rot.cols();
      }
      const auto rebuilt =
          reconstruct_from_rays([&](const Ray& x) { return ray_obs(d, x); }, probes, rng());
      const double dist = family_distance(rebuilt, matrix_family(d), 1e-9);
      r.check("family rebuilt from ray values", dist <= 1e-8, fmt::format("distance {:.3g}", dist));

      const double shift = std::uniform_int_distribution<int>(-8, 8)(rng) / 4.0;
      const auto fam_a = spectral_family_of(a);
      const auto shifted = translate(fam_a.family, shift);
      const auto fa = observable_fn(fam_a.family);
      const auto fs = observable_fn(shifted);
      bool exact = true;
      for (auto p : fa.lattice().nonzero_elements()) exact = exact && fs.at(p) == shift + fa.at(p);
      r.check("f of the translated family is shifted", exact);
      const auto moved =
          spectrum(HermitianOperator(a.matrix() + shift * CMatrix::Identity(a.matrix().rows(),
                                                                            a.matrix().cols())));
      const auto base = spectrum(a);
      bool close = moved.size() == base.size();
      for (std::size_t i = 0; close && i < base.size(); ++i)
        close = std::abs(moved[i] - (base[i] + shift)) <= 1e-9;
      r.check("spectrum of A + aI is shifted", close);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- gelfand

std::vector<Report> gelfand_suite(std::uint64_t seed) {
  std::vector<Report> out;
  std::mt19937_64 rng(mix(seed, 6));
  std::uniform_int_distribution<int> level(-6, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    const DiagonalAlgebra alg(n);
    Report r(fmt::format("gelfand/n={}", n));
    r.absorb(verify_gt1(alg, 50, rng()));
    r.absorb(verify_gt3(alg));
    for (int k = 0; k < 10; ++k) {
      std::vector<double> a(n);
      for (auto& v : a) v = level(rng) / 2.0;
      r.absorb(verify_gt4(alg, a));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lattice", "stone",   "spectral", "recon",
                                              "matrix",  "gelfand", "all"};
  return names;
}

std::vector<Report> run_suite(std::string_view name, std::uint64_t seed) {
  using Fn = std::vector<Report> (*)(std::uint64_t);
  static const std::vector<std::pair<std::string_view, Fn>> suites{
      {"lattice", lattice_suite}, {"stone", stone_suite},   {"spectral", spectral_suite},
      {"recon", recon_suite},     {"matrix", matrix_suite}, {"gelfand", gelfand_suite}};
  std::vector<Report> out;
  for (const auto& [n, fn] : suites) {
    if (name != "all" && name != n) continue;
    auto part = fn(seed);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  if (out.empty()) throw InputError(fmt::format("unknown suite '{}'", name));
  return out;
}

}  // namespace obsfn
