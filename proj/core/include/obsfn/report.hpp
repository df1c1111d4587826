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

#ifndef OBSFN_REPORT_HPP_
#define OBSFN_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace obsfn {

struct Finding {
  std::string clause;
  bool ok = true;
  std::string detail;
};

/// Named list of pass/fail findings produced by the verify_* functions.
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  /// Records one clause; `detail` usually carries the witness on failure.
  void check(std::string clause, bool ok, std::string detail = {});
  /// Records an informational finding that never fails.
  void note(std::string clause, std::string detail);
  /// Appends every finding of `other`, prefixing clauses with its name.
  void absorb(const Report& other);

  const std::string& name() const { return name_; }
  const std::vector<Finding>& findings() const { return findings_; }
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }

 private:
  std::string name_;
  std::vector<Finding> findings_;
};

/// One line per finding, "PASS"/"FAIL"/"NOTE" prefixed.
std::string format_text(const Report& report);

}  // namespace obsfn

#endif  // OBSFN_REPORT_HPP_
