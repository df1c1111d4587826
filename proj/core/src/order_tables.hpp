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

#ifndef OBSFN_SRC_ORDER_TABLES_HPP_
#define OBSFN_SRC_ORDER_TABLES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace obsfn::detail {

// Dense bit rows: row i holds the set {j : i <= j} (or a down-set, by use).
class BitRows {
 public:
  BitRows(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  const std::uint64_t* row(std::size_t i) const { return &bits_[i * words_]; }
  std::uint64_t* row(std::size_t i) { return &bits_[i * words_]; }
  std::size_t count(std::size_t i) const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct OrderFailure {
  std::string what;
  std::vector<std::size_t> witness;
};

struct OrderTables {
  std::vector<std::uint16_t> meet;
  std::vector<std::uint16_t> join;
  std::size_t bottom = 0;
  std::size_t top = 0;
};

// Reflexive-transitive closure of an n*n row-major 0/1 relation, in place.
void close_order(std::size_t n, std::vector<std::uint8_t>& order);

// Expects a closed relation. Reports the first antisymmetry violation, missing
// bound, or pair without a unique glb/lub.
std::variant<OrderTables, OrderFailure> tabulate_order(
    std::size_t n, const std::vector<std::uint8_t>& order);

}  // namespace obsfn::detail

#endif  // OBSFN_SRC_ORDER_TABLES_HPP_
