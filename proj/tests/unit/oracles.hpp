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

// Brute-force reference implementations. They use only the order relation,
// the ortho map and the public evaluation semantics, never the library's
// tables or closed forms.
#ifndef OBSFN_TESTS_ORACLES_HPP_
#define OBSFN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "obsfn/lattice.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/spectral_family.hpp"

namespace oracle {

using obsfn::Element;
using obsfn::Lattice;

inline Element glb(const Lattice& l, Element a, Element b) {
  std::vector<Element> lower;
  for (auto c : l.elements())
    if (l.leq(c, a) && l.leq(c, b)) lower.push_back(c);
  for (auto c : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Element d) { return l.leq(d, c); })) return c;
  return l.bottom();
}

inline Element lub(const Lattice& l, Element a, Element b) {
  std::vector<Element> upper;
  for (auto c : l.elements())
    if (l.leq(a, c) && l.leq(b, c)) upper.push_back(c);
  for (auto c : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Element d) { return l.leq(c, d); })) return c;
  return l.top();
}

using Subset = std::vector<bool>;

inline bool is_filter(const Lattice& l, const Subset& s) {
  if (std::none_of(s.begin(), s.end(), [](bool b) { return b; })) return false;
  if (s[l.bottom().index]) return false;
  for (auto a : l.elements()) {
    if (!s[a.index]) continue;
    for (auto b : l.elements()) {
      if (l.leq(a, b) && !s[b.index]) return false;
      if (s[b.index] && !s[glb(l, a, b).index]) return false;
    }
  }
  return true;
}

/// Every subset of the lattice that is a dual ideal (n <= 12).
inline std::vector<Subset> all_filters(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<Subset> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    if (is_filter(l, s)) out.push_back(s);
  }
  return out;
}

inline Subset up_set(const Lattice& l, Element a) {
  Subset s(l.size());
  for (auto b : l.elements()) s[b.index] = l.leq(a, b);
  return s;
}

// Sample points: one inside every stretch between consecutive thresholds,
// plus the thresholds themselves and points beyond both ends.
inline std::vector<double> probe_points(const obsfn::SpectralFamily& e) {
  const auto t = e.thresholds();
  std::vector<double> out{t.front() - 1};
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.push_back(t[i]);
    out.push_back(i + 1 < t.size() ? (t[i] + t[i + 1]) / 2 : t[i] + 1);
  }
  return out;
}

/// f(H_p) = inf{lambda : E(lambda) >= p}, scanning right-continuous steps.
inline double f_scan(const obsfn::SpectralFamily& e, Element p) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : probe_points(e))
    if (e.lattice().leq(p, e.eval(x))) best = std::min(best, x);
  return best;
}

/// g(H_p) = sup{t : E(t)' >= p}. E(t)' is constant on each stretch, so the
/// sup over a stretch is its right end.
inline double g_scan(const obsfn::SpectralFamily& e, Element p) {
  const Lattice& l = e.lattice();
  const auto t = e.thresholds();
  double best = -std::numeric_limits<double>::infinity();
  if (l.leq(p, l.ortho(e.eval(t.front() - 1)))) best = t.front();
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (l.leq(p, l.ortho(e.eval((t[i] + t[i + 1]) / 2)))) best = std::max(best, t[i + 1]);
  return best;
}

/// Largest eigenvalue whose eigenvectors x is not orthogonal to, from a
/// fresh solver; eigenvalues within `gap` are merged.
inline double ray_max(const obsfn::CMatrix& a, const obsfn::CVector& x, double gap = 1e-8,
                      double tol = 1e-9) {
  Eigen::SelfAdjointEigenSolver<obsfn::CMatrix> s(a);
  const auto& v = s.eigenvalues();
  const auto& u = s.eigenvectors();
  const obsfn::CVector y = x.normalized();
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < v.size();) {
    Eigen::Index j = i;
    double w = 0;
    while (j < v.size() && v[j] - v[i] <= gap) {
      w += std::norm(u.col(j).dot(y));
      ++j;
    }
    if (std::sqrt(w) > tol) best = v[i];
    i = j;
  }
  return best;
}

}  // namespace oracle

#endif  // OBSFN_TESTS_ORACLES_HPP_
