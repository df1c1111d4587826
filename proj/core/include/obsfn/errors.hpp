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

#ifndef OBSFN_ERRORS_HPP_
#define OBSFN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace obsfn {

// Root of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Order data that does not describe a lattice (no unique glb/lub, cycles, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

// A generated object would exceed its configured element bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed files or schema violations. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition failed: non-monotone family, value outside an
// image, function that is not completely increasing, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical failure in the matrix layer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check between two independent computations disagreed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace obsfn

#endif  // OBSFN_ERRORS_HPP_
