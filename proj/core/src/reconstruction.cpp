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

#include "obsfn/reconstruction.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <fmt/format.h>

#include "obsfn/errors.hpp"
#include "obsfn/structure.hpp"

namespace obsfn {

LawCheck is_completely_increasing(const CompletelyIncreasingFn& r) {
  const Lattice& l = r.lattice();
  if (!r.total()) return {false, std::nullopt, "r is not defined on every nonzero element"};
  auto test = [&](Element a, Element b) -> std::optional<LawCheck> {
    const Element j = l.join(a, b);
    const double lhs = r.at(j), rhs = std::max(r.at(a), r.at(b));
    if (lhs == rhs) return std::nullopt;
    return LawCheck{false, std::pair{a, b},
                    fmt::format("r({} v {}) = r({}) = {} != {} = max(r({}), r({}))", l.name(a),
                                l.name(b), l.name(j), lhs, rhs, l.name(a), l.name(b))};
  };
  // Complementary pairs first: they give the most readable witness.
  for (auto a : l.nonzero_elements()) {
    const Element b = l.ortho(a);
    if (b == l.bottom() || b < a) continue;
    if (auto failure = test(a, b)) return *failure;
  }
  for (auto a : l.nonzero_elements())
    for (auto b : l.nonzero_elements()) {
      if (!(a < b)) continue;
      if (auto failure = test(a, b)) return *failure;
    }
  return {};
}

bool family_law_holds(const CompletelyIncreasingFn& r) {
  const Lattice& l = r.lattice();
  const auto nz = l.nonzero_elements();
  if (l.size() > 12) throw SizeError("family law scan is limited to 12 elements");
  for (std::uint32_t bits = 1; bits < (1U << nz.size()); ++bits) {
    Element j = l.bottom();
    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nz.size(); ++i) {
      if (!((bits >> i) & 1U)) continue;
      j = l.join(j, nz[i]);
      sup = std::max(sup, r.at(nz[i]));
    }
    if (r.at(j) != sup) return false;
  }
  return true;
}

ObservableTable f_from_r(const CompletelyIncreasingFn& r) {
  if (auto check = is_completely_increasing(r); !check)
    throw DomainError("r is not completely increasing: " + check.detail);
  const Lattice& l = r.lattice();
  ObservableTable f(r.lattice_ptr());
  for (auto m : l.nonzero_elements()) {
    double inf = std::numeric_limits<double>::infinity();
    for (auto p : l.nonzero_elements())
      if (l.leq(m, p)) inf = std::min(inf, r.at(p));
    f.set(m, inf);
  }
  return f;
}

CompletelyIncreasingFn r_from_f(const ObservableTable& f) {
  CompletelyIncreasingFn r(f.lattice_ptr());
  for (auto p : f.lattice().nonzero_elements()) r.set(p, f.at(p));
  return r;
}

LawCheck is_abstract_observable(const ObservableTable& f) {
  const Lattice& l = f.lattice();
  if (!f.total()) return {false, std::nullopt, "f is not defined on every dual ideal"};
  for (auto m : l.nonzero_elements())
    for (auto p : l.nonzero_elements())
      if (l.leq(m, p) && f.at(p) < f.at(m))
        return {false, std::pair{m, p},
                fmt::format("(i) fails: f(H_{}) = {} < f(H_{}) = {} although {} is in H_{}",
                            l.name(p), f.at(p), l.name(m), f.at(m), l.name(p), l.name(m))};
  auto ci = is_completely_increasing(r_from_f(f));
  if (!ci) ci.detail = "(ii) fails: " + ci.detail;
  return ci;
}

namespace {

struct StepOne {
  std::vector<double> image;
  std::vector<ElementMask> ideals;  // J_lambda per image value
  std::vector<Element> values;      // inf J_lambda
};

StepOne step_one(const ObservableTable& f) {
  const Lattice& l = f.lattice();
  StepOne s;
  s.image = image_of(f, Domain::kDualIdeals);
  for (double lambda : s.image) {
    // Smallest dual ideal with value lambda: the intersection of the fiber.
    ElementMask cap(l.size(), true);
    for (auto m : l.nonzero_elements()) {
      if (f.at(m) != lambda) continue;
      const auto h = mask_of(l, DualIdeal{m});
      for (std::size_t i = 0; i < cap.size(); ++i) cap[i] = cap[i] && h[i];
    }
    std::vector<Element> in;
    for (auto p : l.elements())
      if (cap[p.index]) in.push_back(p);
    const Element inf = l.big_meet(in);
    if (!is_dual_ideal(l, cap) || f.at(inf) != lambda)
      throw InvariantError(fmt::format("the fiber of {} has no minimal dual ideal", lambda));
    s.ideals.push_back(std::move(cap));
    s.values.push_back(inf);
  }
  return s;
}

// Step 2 extension off the image: E(t) = E(sup S_t), S_t = {mu in im f : mu < t}.
Element step_two(const Lattice& l, const StepOne& s, double t) {
  const auto it = std::lower_bound(s.image.begin(), s.image.end(), t);
  if (it != s.image.end() && *it == t) return s.values[it - s.image.begin()];
  std::optional<std::size_t> sup;
  for (std::size_t i = 0; i < s.image.size(); ++i)
    if (s.image[i] < t) sup = i;  // image is sorted, so the last hit is the sup
  return sup ? s.values[*sup] : l.bottom();
}

}  // namespace

SpectralFamily reconstruct(const ObservableTable& f) {
  if (auto check = is_abstract_observable(f); !check)
    throw DomainError("not an abstract observable function: " + check.detail);
  const Lattice& l = f.lattice();
  const StepOne s = step_one(f);

  std::vector<Jump> jumps;
  for (std::size_t i = 0; i < s.image.size(); ++i) jumps.push_back({s.image[i], s.values[i]});
  std::optional<SpectralFamily> e;
  try {
    e.emplace(f.lattice_ptr(), std::move(jumps));
  } catch (const DomainError& err) {
    throw InvariantError(std::string("reconstructed family is invalid: ") + err.what());
  }

  // The literal extension must coincide with holding the previous value.
  std::vector<double> probes{s.image.front() - 1, s.image.back() + 1};
  for (std::size_t i = 0; i < s.image.size(); ++i) {
    probes.push_back(s.image[i]);
    if (i + 1 < s.image.size()) probes.push_back(s.image[i] + (s.image[i + 1] - s.image[i]) / 2);
  }
  for (double t : probes)
    if (step_two(l, s, t) != e->eval(t))
      throw InvariantError(fmt::format("step 2 extension disagrees with the family at {}", t));

  if (!(observable_fn(*e) == f))
    throw InvariantError("observable function of the reconstruction differs from f");

  for (std::size_t i = 0; i < s.image.size(); ++i) {
    Element j = l.bottom();
    for (auto p : l.nonzero_elements())
      if (f.at(p) == s.image[i]) j = l.join(j, p);
    if (j != s.values[i])
      throw InvariantError(fmt::format("E({}) differs from the join of its fiber", s.image[i]));
  }
  return *e;
}

Report verify_monotone_steps(const ObservableTable& f) {
  const Lattice& l = f.lattice();
  Report r("reconstruction-steps");
  const auto axioms = is_abstract_observable(f);
  r.check("abstract observable function", axioms.ok, axioms.detail);
  if (!axioms) return r;

  const StepOne s = step_one(f);
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
    increasing = increasing && l.leq(s.values[i], s.values[i + 1]);
  r.check("E_lambda increasing across im f", increasing);

  // Finite increasing chains of dual ideals end in their union, so monotone
  // continuity reduces to f being decreasing along inclusions.
  std::optional<std::string> up;
  for (auto a : l.nonzero_elements())
    for (auto b : l.nonzero_elements())
      if (l.leq(b, a) && f.at(b) > f.at(a) && !up)
        up = fmt::format("H_{} within H_{}", l.name(a), l.name(b));
  r.check("f monotonely continuous along chains", !up, up.value_or(""));

  const bool top_is_max = f.at(l.top()) == s.image.back();
  const bool top_ideal = s.ideals.back() == mask_of(l, DualIdeal{l.top()});
  r.check("im f finite with max f({1}) and J_max = {1}", top_is_max && top_ideal,
          fmt::format("{} values", s.image.size()));

  std::optional<SpectralFamily> e;
  try {
    e.emplace(reconstruct(f));
    r.check("extension is a spectral family", true);
  } catch (const Error& err) {
    r.check("extension is a spectral family", false, err.what());
    return r;
  }
  const auto t = e->thresholds();
  bool gap_free = true;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    for (double v : s.image) gap_free = gap_free && !(t[i] < v && v < t[i + 1]);
  r.check("no image point inside a constancy interval", gap_free);
  r.check("jump set equals im f", t == s.image);
  r.check("f_E = f", observable_fn(*e) == f);
  return r;
}

std::variant<SpectralFamily, NonObservableWitness> observable_from_quasipoint_data(
    LatticePtr lattice, const QuasipointFn& f) {
  const Lattice& l = *lattice;
  for (auto a : l.atoms())
    if (!f.contains(a)) throw DomainError("no value for quasipoint H_" + l.name(a));
  for (const auto& [a, v] : f)
    if (!l.contains(a) || !l.is_atom(a)) throw DomainError("value given for a non-atom");

  CompletelyIncreasingFn r(lattice);
  for (auto p : l.nonzero_elements()) {
    double sup = -std::numeric_limits<double>::infinity();
    for (auto q : basis_Q(l, p)) sup = std::max(sup, f.at(q.atom));
    r.set(p, sup);
  }
  if (auto ci = is_completely_increasing(r); !ci) return NonObservableWitness{*ci.witness, ci.detail};
  const auto fr = f_from_r(r);
  for (auto a : l.atoms())
    if (fr.at(a) != f.at(a))
      return NonObservableWitness{{a, a}, "f_r differs from f at H_" + l.name(a)};
  return reconstruct(fr);
}

Report verify_ideal_criterion(const CompletelyIncreasingFn& r) {
  const Lattice& l = r.lattice();
  Report rep("ideal-criterion");
  std::vector<double> image;
  for (auto p : l.nonzero_elements()) image.push_back(r.at(p));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  bool all_ideals = true;
  for (double lambda : image) {
    auto in = [&](Element p) { return p == l.bottom() || r.at(p) <= lambda; };
    std::optional<std::string> failure;
    for (auto a : l.elements()) {
      if (!in(a)) continue;
      for (auto b : l.elements()) {
        if (l.leq(b, a) && !in(b) && !failure)
          failure = fmt::format("not down-closed: {} <= {}", l.name(b), l.name(a));
        if (in(b) && !in(l.join(a, b)) && !failure)
          failure = fmt::format("not join-closed: {} v {} = {}", l.name(a), l.name(b),
                                l.name(l.join(a, b)));
      }
    }
    all_ideals = all_ideals && !failure;
    const bool improper = lambda == r.at(l.top());
    rep.note(fmt::format("F_{}{}", lambda, improper ? " (improper, all of L)" : ""),
             failure.value_or("ideal"));
  }
  const bool ci = is_completely_increasing(r).ok;
  rep.check("every F_lambda is an ideal iff r is completely increasing", all_ideals == ci,
            fmt::format("ideals: {}, completely increasing: {}", all_ideals, ci));
  rep.note("strong closedness / lower semicontinuity", "not applicable on a finite lattice");
  return rep;
}

std::vector<SpectralFamily> enumerate_families(LatticePtr lattice,
                                               const std::vector<double>& thresholds) {
  const Lattice& l = *lattice;
  std::vector<SpectralFamily> out;
  const std::size_t m = thresholds.size();
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::uint32_t bits = 0; bits < (1U << m); ++bits) {
      if (static_cast<std::size_t>(std::popcount(bits)) != k) continue;
      std::vector<double> t;
      for (std::size_t i = 0; i < m; ++i)
        if ((bits >> i) & 1U) t.push_back(thresholds[i]);
      // Chains c_1 < ... < c_(k-1) < top of nonzero elements, lexicographic.
      std::vector<Element> chain;
      auto extend = [&](auto&& self) -> void {
        if (chain.size() + 1 == k) {
          std::vector<Jump> jumps;
          for (std::size_t i = 0; i + 1 < k; ++i) jumps.push_back({t[i], chain[i]});
          jumps.push_back({t[k - 1], l.top()});
          out.emplace_back(lattice, std::move(jumps));
          return;
        }
        for (auto c : l.nonzero_elements()) {
          if (c == l.top()) continue;
          if (!chain.empty() && !l.lt(chain.back(), c)) continue;
          chain.push_back(c);
          self(self);
          chain.pop_back();
        }
      };
      extend(extend);
    }
  }
  return out;
}

MirrorVerdict mirror_symmetry_test(LatticePtr lattice) {
  const Lattice& l = *lattice;
  MirrorVerdict v;
  if (verify_structure(l).is_distributive) {
    for (const auto& e : enumerate_families(lattice, {0.0, 0.5, 1.0})) {
      ++v.families_checked;
      const auto f = observable_fn(e);
      const auto g = mirrored_fn(e);
      for (auto a : l.atoms())
        if (f.at(a) != g.at(a)) {
          v.symmetric = false;
          v.witness = e;
          return v;
        }
    }
    return v;
  }
  for (const auto& e : enumerate_families(lattice, {0.0, 1.0})) {
    ++v.families_checked;
    const auto g = mirrored_fn(e);
    QuasipointFn on_q;
    for (auto a : l.atoms()) on_q[a] = g.at(a);
    auto realized = observable_from_quasipoint_data(lattice, on_q);
    if (auto* w = std::get_if<NonObservableWitness>(&realized)) {
      v.symmetric = false;
      v.witness = e;
      v.obstruction = *w;
      return v;
    }
  }
  return v;
}

}  // namespace obsfn
