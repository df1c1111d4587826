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

#ifndef OBSFN_TABLE_HPP_
#define OBSFN_TABLE_HPP_

#include <cmath>
#include <limits>
#include <vector>

#include "obsfn/errors.hpp"
#include "obsfn/lattice.hpp"

namespace obsfn {

/// Real values on the nonzero elements of one lattice. The slot of bottom
/// holds NaN and is never read. `Tag` keeps observable tables and completely
/// increasing functions from being mixed up.
template <class Tag>
class ElementTable {
 public:
  explicit ElementTable(LatticePtr lattice)
      : lattice_(std::move(lattice)),
        values_(lattice_->size(), std::numeric_limits<double>::quiet_NaN()) {}

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }

  double at(Element a) const {
    guard(a);
    return values_[a.index];
  }
  void set(Element a, double v) {
    guard(a);
    values_[a.index] = v;
  }
  /// True once every nonzero element carries a finite value.
  bool total() const {
    for (auto a : lattice_->nonzero_elements())
      if (!std::isfinite(values_[a.index])) return false;
    return true;
  }

  friend bool operator==(const ElementTable& a, const ElementTable& b) {
    if (a.lattice_ != b.lattice_ && !(*a.lattice_ == *b.lattice_)) return false;
    for (auto e : a.lattice_->nonzero_elements())
      if (a.values_[e.index] != b.values_[e.index]) return false;
    return true;
  }

 private:
  void guard(Element a) const {
    if (!lattice_->contains(a)) throw DomainError("element is not part of the lattice");
    if (a == lattice_->bottom()) throw DomainError("tables are not defined at 0");
  }

  LatticePtr lattice_;
  std::vector<double> values_;
};

/// f on D(L), keyed by the least element of each (principal) dual ideal.
using ObservableTable = ElementTable<struct ObservableTag>;
/// r on L \ {0}.
using CompletelyIncreasingFn = ElementTable<struct CompletelyIncreasingTag>;

}  // namespace obsfn

#endif  // OBSFN_TABLE_HPP_
