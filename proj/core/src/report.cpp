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

#include "obsfn/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace obsfn {

void Report::check(std::string clause, bool ok, std::string detail) {
  findings_.push_back({std::move(clause), ok, std::move(detail)});
}

void Report::note(std::string clause, std::string detail) {
  findings_.push_back({"note: " + std::move(clause), true, std::move(detail)});
}

void Report::absorb(const Report& other) {
  for (const auto& f : other.findings())
    findings_.push_back({other.name() + "/" + f.clause, f.ok, f.detail});
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(findings_.begin(), findings_.end(), [](const Finding& f) { return !f.ok; }));
}

std::string format_text(const Report& report) {
  std::string out = fmt::format("== {} ({} findings, {} failed)\n", report.name(),
                                report.findings().size(), report.failures());
  for (const auto& f : report.findings()) {
    const char* tag = !f.ok ? "FAIL" : (f.clause.rfind("note: ", 0) == 0 ? "NOTE" : "PASS");
    out += fmt::format("{}  {}", tag, f.clause);
    if (!f.detail.empty()) out += fmt::format("  [{}]", f.detail);
    out += '\n';
  }
  return out;
}

}  // namespace obsfn
