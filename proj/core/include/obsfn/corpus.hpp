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

#ifndef OBSFN_CORPUS_HPP_
#define OBSFN_CORPUS_HPP_

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "obsfn/lattice.hpp"
#include "obsfn/spectral_family.hpp"
#include "obsfn/table.hpp"

namespace obsfn {

/// chain-2, B2, 2^3, 2^4, MO2, MO3, benzene-O6.
const std::vector<std::string>& builtin_names();
/// Throws InputError for an unknown name.
LatticePtr builtin(std::string_view name);
/// The orthomodular members of the corpus (everything but benzene-O6).
std::vector<LatticePtr> oml_corpus();

/// Random strictly increasing chain ending at top with `jumps` <= max_jumps
/// thresholds drawn without repetition from multiples of 1/4 in [-4, 4].
SpectralFamily random_family(LatticePtr lattice, std::mt19937_64& rng, std::size_t max_jumps = 4);

/// r(P) = min{t_i : P <= c_i} for a random chain c_1 < ... < c_k = top and
/// random increasing t; always completely increasing.
CompletelyIncreasingFn random_completely_increasing(LatticePtr lattice, std::mt19937_64& rng,
                                                    std::size_t max_levels = 4);

/// Arbitrary values drawn from `values`; usually not completely increasing.
CompletelyIncreasingFn random_table(LatticePtr lattice, std::mt19937_64& rng,
                                    const std::vector<double>& values);

}  // namespace obsfn

#endif  // OBSFN_CORPUS_HPP_
