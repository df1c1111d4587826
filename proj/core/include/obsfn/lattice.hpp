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

#ifndef OBSFN_LATTICE_HPP_
#define OBSFN_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace obsfn {

/// Index of an element inside one particular Lattice.
struct Element {
  std::uint32_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Unvalidated lattice description, as read from a file.
struct RawLattice {
  std::vector<std::string> names;
  // Generating pairs (i, j) meaning i <= j; closure is applied on build.
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::size_t> ortho;
};

/// A finite bounded lattice carrying a candidate orthocomplementation.
///
/// Construction closes the order reflexively and transitively, rejects
/// anything that is not a lattice, and tabulates every meet and join. The
/// ortho map only has to be a permutation here; whether it is an involutive,
/// order-reversing complement (and whether the orthomodular law holds) is
/// reported by verify_structure().
///
/// Immutable after construction.
class Lattice {
 public:
  static constexpr std::size_t kMaxElements = 4096;

  /// `order` is an n*n row-major 0/1 relation, `order[i*n+j]` meaning i <= j.
  Lattice(std::vector<std::string> names, std::vector<std::uint8_t> order,
          std::vector<std::uint32_t> ortho);

  static Lattice from_raw(const RawLattice& raw);

  std::size_t size() const { return names_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Validated conversion from a raw index.
  Element element(std::size_t index) const;
  bool contains(Element a) const { return a.index < size(); }

  bool leq(Element a, Element b) const {
    return order_[a.index * size() + b.index] != 0;
  }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }

  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element ortho(Element a) const;

  /// Infimum of `s`; the empty meet is top.
  Element big_meet(std::span<const Element> s) const;
  /// Supremum of `s`; the empty join is bottom.
  Element big_join(std::span<const Element> s) const;

  const std::string& name(Element a) const;
  std::optional<Element> find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  std::vector<Element> elements() const;
  std::vector<Element> nonzero_elements() const;
  /// Elements covering bottom, in index order.
  const std::vector<Element>& atoms() const { return atoms_; }
  bool is_atom(Element a) const;
  /// Length of the longest chain from bottom to `a`.
  std::size_t rank(Element a) const { return rank_[a.index]; }
  /// Covering pairs (a, b), a < b with nothing strictly between.
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  void check(Element a) const;

  std::vector<std::string> names_;
  std::vector<std::uint8_t> order_;
  std::vector<std::uint32_t> ortho_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<std::size_t> rank_;
  std::vector<Element> atoms_;
  Element bottom_;
  Element top_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// A lattice built from part of another one, with the map back into it.
struct Sublattice {
  LatticePtr lattice;
  std::vector<Element> embedding;  // sublattice index -> source element

  Element to_source(Element a) const { return embedding.at(a.index); }
  std::optional<Element> from_source(Element a) const;
};

/// Smallest subset of `source` containing bottom, top and `generators` that is
/// closed under meet, join and ortho. Elements are ordered by (rank in the
/// sublattice, order of discovery) so indices are deterministic.
/// Throws SizeError once the closure exceeds `max_elements`.
Sublattice generated_sublattice(const Lattice& source,
                                std::span<const Element> generators,
                                std::size_t max_elements = Lattice::kMaxElements);

/// The interval [0, a] with relative orthocomplement b -> b' ^ a. Requires the
/// relative complement to be a permutation of [0, a], which holds in every
/// orthomodular lattice.
Sublattice principal_ideal(const Lattice& source, Element a);

/// Power-set lattice on the given atoms; element index == bitmask of atoms.
Lattice boolean_lattice(const std::vector<std::string>& atom_names);

/// Componentwise product; element (i, j) has index i * |b| + j.
Lattice product(const Lattice& a, const Lattice& b);

/// Relabels element i of `source` as perm[i].
Lattice permuted(const Lattice& source, std::span<const std::size_t> perm);

}  // namespace obsfn

#endif  // OBSFN_LATTICE_HPP_
