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

#include "obsfn/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "obsfn/errors.hpp"

namespace obsfn {

namespace {

// Bottom, then atoms listed as complementary pairs, then top.
Lattice height_two(const std::vector<std::string>& atoms) {
  const std::size_t n = atoms.size() + 2;
  std::vector<std::string> names{"0"};
  names.insert(names.end(), atoms.begin(), atoms.end());
  names.push_back("1");
  std::vector<std::uint8_t> order(n * n, 0);
  std::vector<std::uint32_t> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[0 * n + i] = 1;
    order[i * n + (n - 1)] = 1;
  }
  ortho[0] = static_cast<std::uint32_t>(n - 1);
  ortho[n - 1] = 0;
  for (std::size_t i = 1; i + 1 < n; i += 2) {
    ortho[i] = static_cast<std::uint32_t>(i + 1);
    ortho[i + 1] = static_cast<std::uint32_t>(i);
  }
  return Lattice(std::move(names), std::move(order), std::move(ortho));
}

Lattice chain2() { return Lattice({"0", "1"}, {1, 1, 0, 1}, {1, 0}); }

Lattice benzene() {
  // 0 < a < b < 1 and 0 < b' < a' < 1.
  const std::vector<std::string> names{"0", "a", "b", "a'", "b'", "1"};
  RawLattice raw{names, {{0, 1}, {1, 2}, {2, 5}, {0, 4}, {4, 3}, {3, 5}}, {5, 3, 4, 1, 2, 0}};
  return Lattice::from_raw(raw);
}

LatticePtr build(std::string_view name) {
  if (name == "chain-2") return std::make_shared<const Lattice>(chain2());
  if (name == "B2") return std::make_shared<const Lattice>(boolean_lattice({"p", "q"}));
  if (name == "2^3") return std::make_shared<const Lattice>(boolean_lattice({"e1", "e2", "e3"}));
  if (name == "2^4")
    return std::make_shared<const Lattice>(boolean_lattice({"e1", "e2", "e3", "e4"}));
  if (name == "MO2") return std::make_shared<const Lattice>(height_two({"a", "a'", "b", "b'"}));
  if (name == "MO3")
    return std::make_shared<const Lattice>(height_two({"a", "a'", "b", "b'", "c", "c'"}));
  if (name == "benzene-O6") return std::make_shared<const Lattice>(benzene());
  throw InputError("unknown built-in lattice '" + std::string(name) + "'");
}

std::vector<Element> random_chain(const Lattice& l, std::mt19937_64& rng, std::size_t max_len) {
  std::vector<Element> chain;
  Element current = l.bottom();
  while (current != l.top() && chain.size() + 1 < max_len) {
    std::vector<Element> above;
    for (auto e : l.elements())
      if (l.lt(current, e)) above.push_back(e);
    current = above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)];
    chain.push_back(current);
  }
  if (chain.empty() || chain.back() != l.top()) chain.push_back(l.top());
  return chain;
}

std::vector<double> random_thresholds(std::size_t k, std::mt19937_64& rng) {
  std::vector<int> grid;
  for (int i = -16; i <= 16; ++i) grid.push_back(i);
  std::shuffle(grid.begin(), grid.end(), rng);
  std::vector<double> t;
  for (std::size_t i = 0; i < k; ++i) t.push_back(grid[i] / 4.0);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"chain-2", "B2",  "2^3",       "2^4",
                                              "MO2",     "MO3", "benzene-O6"};
  return names;
}

LatticePtr builtin(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, LatticePtr, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  LatticePtr l = build(name);
  cache.emplace(std::string(name), l);
  return l;
}

std::vector<LatticePtr> oml_corpus() {
  std::vector<LatticePtr> out;
  for (const auto& n : builtin_names())
    if (n != "benzene-O6") out.push_back(builtin(n));
  return out;
}

SpectralFamily random_family(LatticePtr lattice, std::mt19937_64& rng, std::size_t max_jumps) {
  const auto chain = random_chain(*lattice, rng, std::max<std::size_t>(1, max_jumps));
  const auto t = random_thresholds(chain.size(), rng);
  std::vector<Jump> jumps;
  for (std::size_t i = 0; i < chain.size(); ++i) jumps.push_back({t[i], chain[i]});
  return SpectralFamily(std::move(lattice), std::move(jumps));
}

CompletelyIncreasingFn random_completely_increasing(LatticePtr lattice, std::mt19937_64& rng,
                                                    std::size_t max_levels) {
  const Lattice& l = *lattice;
  const auto chain = random_chain(l, rng, std::max<std::size_t>(1, max_levels));
  const auto t = random_thresholds(chain.size(), rng);
  CompletelyIncreasingFn r(lattice);
  for (auto p : l.nonzero_elements())
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (l.leq(p, chain[i])) {
        r.set(p, t[i]);
        break;
      }
  return r;
}

CompletelyIncreasingFn random_table(LatticePtr lattice, std::mt19937_64& rng,
                                    const std::vector<double>& values) {
  CompletelyIncreasingFn r(lattice);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (auto p : r.lattice().nonzero_elements()) r.set(p, values[pick(rng)]);
  return r;
}

}  // namespace obsfn
