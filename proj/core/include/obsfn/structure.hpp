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

#ifndef OBSFN_STRUCTURE_HPP_
#define OBSFN_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "obsfn/lattice.hpp"

namespace obsfn {

/// Elements (by index) that break a law, plus a rendered explanation.
struct Witness {
  std::vector<std::size_t> elements;
  std::string text;
};

/// Verdicts on the structural hypotheses the rest of the library relies on.
/// Each failing verdict carries the first witness found in index order.
struct StructureReport {
  bool is_lattice = false;
  bool is_ortho_complemented = false;
  bool is_orthomodular = false;
  bool is_distributive = false;
  bool is_boolean = false;
  bool is_atomistic = false;

  std::optional<Witness> lattice_witness;
  std::optional<Witness> ortho_witness;
  std::optional<Witness> orthomodular_witness;
  std::optional<Witness> distributive_witness;
  std::optional<Witness> boolean_witness;
  std::optional<Witness> atomistic_witness;

  bool is_oml() const { return is_lattice && is_orthomodular; }
};

/// Exhaustive checks: ortho laws over all pairs, orthomodularity over
/// comparable pairs, distributivity x v (y ^ z) = (x v y) ^ (x v z) over all
/// triples.
StructureReport verify_structure(const Lattice& lattice);

/// Same, starting from unvalidated data. An order that is not a lattice is
/// reported (is_lattice false, every other verdict false), not thrown.
/// Out-of-range indices still throw InputError.
StructureReport verify_structure(const RawLattice& raw);

}  // namespace obsfn

#endif  // OBSFN_STRUCTURE_HPP_
