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

#include "obsfn/spectral_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "obsfn/errors.hpp"

namespace obsfn {

namespace {

double plain_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

SpectralFamily::SpectralFamily(LatticePtr lattice, std::vector<Jump> jumps)
    : lattice_(std::move(lattice)), jumps_(std::move(jumps)) {
  const Lattice& l = *lattice_;
  if (jumps_.empty()) throw DomainError("a spectral family needs at least one jump");
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    const Jump& j = jumps_[i];
    if (!std::isfinite(j.lambda)) throw DomainError("thresholds must be finite");
    if (!l.contains(j.value)) throw DomainError("jump value is not part of the lattice");
    if (j.value == l.bottom()) throw DomainError("jump value 0 is not a jump");
    if (i == 0) continue;
    const Jump& p = jumps_[i - 1];
    if (!(p.lambda < j.lambda))
      throw DomainError(fmt::format("thresholds not strictly increasing at {}", j.lambda));
    if (!l.lt(p.value, j.value))
      throw DomainError(fmt::format("values not strictly increasing at threshold {}", j.lambda));
  }
  if (jumps_.back().value != l.top()) throw DomainError("the last value must be top");
}

SpectralFamily make_spectral_family(LatticePtr lattice, std::vector<Jump> jumps) {
  return SpectralFamily(std::move(lattice), std::move(jumps));
}

Element SpectralFamily::eval(double lambda) const {
  Element v = lattice_->bottom();
  for (const auto& j : jumps_) {
    if (j.lambda > lambda) break;
    v = j.value;
  }
  return v;
}

std::vector<double> SpectralFamily::thresholds() const {
  std::vector<double> out;
  for (const auto& j : jumps_) out.push_back(j.lambda);
  return out;
}

bool operator==(const SpectralFamily& a, const SpectralFamily& b) {
  if (a.lattice_ != b.lattice_ && !(*a.lattice_ == *b.lattice_)) return false;
  return a.jumps_ == b.jumps_;
}

PreSpectralFamily::PreSpectralFamily(LatticePtr lattice, std::vector<PreJump> jumps)
    : lattice_(std::move(lattice)), jumps_(std::move(jumps)) {
  const Lattice& l = *lattice_;
  if (jumps_.empty()) throw DomainError("a pre-spectral family needs at least one jump");
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (!std::isfinite(jumps_[i].lambda)) throw DomainError("thresholds must be finite");
    if (!l.contains(jumps_[i].value)) throw DomainError("jump value is not part of the lattice");
    if (i == 0) continue;
    if (!(jumps_[i - 1].lambda < jumps_[i].lambda))
      throw DomainError("thresholds not strictly increasing");
    if (!l.leq(jumps_[i - 1].value, jumps_[i].value))
      throw DomainError("pre-spectral family is not monotone");
  }
  if (jumps_.back().value != l.top()) throw DomainError("the last value must be top");
}

Element PreSpectralFamily::eval(double lambda) const {
  Element v = lattice_->bottom();
  for (const auto& j : jumps_) {
    if (lambda > j.lambda || (lambda == j.lambda && j.attained))
      v = j.value;
    else
      break;
  }
  return v;
}

SpectralFamily spectralize(const PreSpectralFamily& f) {
  const Lattice& l = f.lattice();
  const auto& pj = f.jumps();
  std::vector<Jump> out;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    // F over mu > lambda_i: the open stretch after lambda_i carries pj[i].value,
    // then every later threshold and stretch.
    std::vector<Element> above{pj[i].value};
    for (std::size_t k = i + 1; k < pj.size(); ++k) {
      above.push_back(f.eval(pj[k].lambda));
      above.push_back(pj[k].value);
    }
    const Element v = l.big_meet(above);
    if (v == l.bottom()) continue;
    if (!out.empty() && out.back().value == v) continue;
    out.push_back({pj[i].lambda, v});
  }
  return SpectralFamily(f.lattice_ptr(), std::move(out));
}

std::vector<std::pair<double, Element>> Section::lifted() const {
  std::vector<std::pair<double, Element>> out;
  for (const auto& j : family.jumps()) out.emplace_back(j.lambda, ideal.to_source(j.value));
  return out;
}

Section whole(const SpectralFamily& e) {
  return Section{e, Sublattice{e.lattice_ptr(), e.lattice().elements()}, e.lattice_ptr()};
}

Section restrict(const SpectralFamily& e, Element a) {
  const Lattice& l = e.lattice();
  if (!l.contains(a) || a == l.bottom())
    throw DomainError("restriction needs a nonzero element of the lattice");
  Sublattice ideal = principal_ideal(l, a);
  std::vector<Jump> jumps;
  for (const auto& j : e.jumps()) {
    const Element v = l.meet(j.value, a);
    if (v == l.bottom()) continue;
    const Element local = *ideal.from_source(v);
    if (!jumps.empty() && jumps.back().value == local) continue;
    jumps.push_back({j.lambda, local});
  }
  SpectralFamily family(ideal.lattice, std::move(jumps));
  return Section{std::move(family), std::move(ideal), e.lattice_ptr()};
}

Section restrict(const Section& s, Element a_in_source) {
  const auto local = s.ideal.from_source(a_in_source);
  if (!local) throw DomainError("restriction target is not below the section's top");
  Section inner = restrict(s.family, *local);
  for (auto& e : inner.ideal.embedding) e = s.ideal.to_source(e);
  inner.source = s.source;
  return inner;
}

ObservableTable observable_fn(const SpectralFamily& e) {
  const Lattice& l = e.lattice();
  ObservableTable f(e.lattice_ptr());
  for (auto p : l.nonzero_elements()) {
    for (const auto& j : e.jumps()) {
      if (l.leq(p, j.value)) {
        f.set(p, j.lambda);
        break;
      }
    }
  }
  return f;
}

double value_at(const ObservableTable& f, DualIdeal j) { return f.at(j.least); }

double value_at(const Section& s, Quasipoint b) {
  const auto local = s.ideal.from_source(b.atom);
  if (!local) throw DomainError("quasipoint does not contain the section's top");
  return observable_fn(s.family).at(*local);
}

std::vector<double> image_of(const ObservableTable& f, Domain over) {
  const Lattice& l = f.lattice();
  std::vector<double> out;
  if (over == Domain::kQuasipoints) {
    for (auto a : l.atoms()) out.push_back(f.at(a));
  } else {
    for (auto a : l.nonzero_elements()) out.push_back(f.at(a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpectralFamily translate(const SpectralFamily& e, double a) {
  std::vector<Jump> jumps = e.jumps();
  for (auto& j : jumps) j.lambda = j.lambda + a;
  return SpectralFamily(e.lattice_ptr(), std::move(jumps));
}

SpectralFamily negate(const SpectralFamily& e) {
  const Lattice& l = e.lattice();
  const auto& j = e.jumps();
  // F(t) = E(-t)' is left-continuous: at t = -lambda_i it still equals E_i',
  // and only after it becomes E_(i-1)' (with E_0 = 0).
  std::vector<PreJump> pre;
  for (std::size_t i = j.size(); i-- > 0;) {
    const Element below = i == 0 ? l.bottom() : j[i - 1].value;
    pre.push_back({plain_zero(-j[i].lambda), l.ortho(below), false});
  }
  return spectralize(PreSpectralFamily(e.lattice_ptr(), std::move(pre)));
}

ObservableTable mirrored_fn(const SpectralFamily& e) {
  const Lattice& l = e.lattice();
  const auto& j = e.jumps();
  ObservableTable g(e.lattice_ptr());
  for (auto p : l.nonzero_elements()) {
    // E(t)' on (-inf, lambda_1) is 0', on [lambda_i, lambda_(i+1)) it is E_i';
    // the sup of each stretch is its right end. From lambda_k on E(t)' = 1'.
    std::optional<double> sup;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Element v = i == 0 ? l.bottom() : j[i - 1].value;
      if (l.leq(p, l.ortho(v))) sup = j[i].lambda;
    }
    if (l.leq(p, l.ortho(l.top())))
      throw DomainError("mirrored function is unbounded: 1' is not 0");
    if (!sup) throw DomainError("mirrored function is undefined: 0' is not 1");
    g.set(p, *sup);
  }
  return g;
}

std::optional<Element> equivalent_at(const Section& e, const Section& f, Quasipoint b) {
  if (e.source != f.source && !(*e.source == *f.source))
    throw DomainError("sections live on different lattices");
  const Lattice& l = *e.source;
  const Element pq = l.meet(e.top_in_source(), f.top_in_source());
  if (!l.leq(b.atom, pq)) throw DomainError("quasipoint does not contain P ^ Q");
  for (auto r : l.elements()) {
    if (!l.leq(b.atom, r) || !l.leq(r, pq)) continue;
    if (restrict(e, r).lifted() == restrict(f, r).lifted()) return r;
  }
  return std::nullopt;
}

Report verify_intersection(const SpectralFamily& e, std::uint64_t seed,
                           std::size_t random_families) {
  const Lattice& l = e.lattice();
  const auto f = observable_fn(e);
  const auto ideals = enumerate_dual_ideals(l);
  Report r("intersection-sup");
  std::size_t checked = 0;
  std::optional<std::string> failure;
  auto check = [&](const std::vector<DualIdeal>& family) {
    double sup = -std::numeric_limits<double>::infinity();
    for (auto j : family) sup = std::max(sup, value_at(f, j));
    const double lhs = value_at(f, intersect(l, family));
    ++checked;
    if (lhs != sup && !failure) {
      std::string names;
      for (auto j : family) names += " H_" + l.name(j.least);
      failure = fmt::format("f(cap) = {} != {} for{}", lhs, sup, names);
    }
  };
  if (ideals.size() <= 16) {
    for (std::uint32_t bits = 1; bits < (1U << ideals.size()); ++bits) {
      std::vector<DualIdeal> family;
      for (std::size_t i = 0; i < ideals.size(); ++i)
        if ((bits >> i) & 1U) family.push_back(ideals[i]);
      check(family);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
    std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(8, ideals.size()));
    for (std::size_t t = 0; t < random_families; ++t) {
      std::vector<DualIdeal> family(size(rng));
      for (auto& j : family) j = ideals[pick(rng)];
      check(family);
    }
  }
  r.check(fmt::format("f(cap J_k) = max f(J_k) over {} families", checked), !failure,
          failure.value_or(""));
  return r;
}

Report verify_usc(const SpectralFamily& e) {
  const Lattice& l = e.lattice();
  const auto f = observable_fn(e);
  Report r("upper-semicontinuity");
  std::optional<std::string> failure;
  for (auto j0 : enumerate_dual_ideals(l)) {
    const double f0 = value_at(f, j0);
    for (double eps : {1.0, 0.5, 0.25}) {
      const Element p = e.eval(f0 + eps / 2);
      bool ok = contains(l, j0, p);
      for (auto j : basis_D(l, p)) ok = ok && value_at(f, j) < f0 + eps;
      if (!ok && !failure)
        failure = fmt::format("J0 = H_{}, eps = {}, P = {}", l.name(j0.least), eps, l.name(p));
    }
  }
  r.check("witness P = E(f(J0) + eps/2) bounds f on D_P", !failure, failure.value_or(""));
  return r;
}

DualIdeal minimal_ideal(const SpectralFamily& e, double lambda) {
  const Lattice& l = e.lattice();
  const auto f = observable_fn(e);
  const auto image = image_of(f, Domain::kDualIdeals);
  if (!std::binary_search(image.begin(), image.end(), lambda))
    throw DomainError(fmt::format("{} is not a value of the observable function", lambda));

  std::vector<double> above{std::nextafter(lambda, std::numeric_limits<double>::infinity())};
  for (const auto& j : e.jumps())
    if (j.lambda > lambda) above.push_back(j.lambda);
  ElementMask ideal(l.size(), false);
  for (double mu : above) {
    const Element v = e.eval(mu);
    for (auto p : l.elements())
      if (l.leq(v, p)) ideal[p.index] = true;
  }
  if (!is_dual_ideal(l, ideal)) throw InvariantError("J_lambda is not a dual ideal");
  std::vector<Element> in;
  for (auto p : l.elements())
    if (ideal[p.index]) in.push_back(p);
  const Element least = l.big_meet(in);
  if (least != e.eval(lambda)) throw InvariantError("inf J_lambda differs from E(lambda)");

  ElementMask fiber(l.size(), true);
  for (auto p : l.nonzero_elements()) {
    if (f.at(p) != lambda) continue;
    const auto m = mask_of(l, DualIdeal{p});
    for (std::size_t i = 0; i < fiber.size(); ++i) fiber[i] = fiber[i] && m[i];
  }
  if (fiber != ideal) throw InvariantError("J_lambda differs from the intersection of its fiber");
  return DualIdeal{least};
}

}  // namespace obsfn
