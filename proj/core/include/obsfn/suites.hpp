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

#ifndef OBSFN_SUITES_HPP_
#define OBSFN_SUITES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "obsfn/report.hpp"

namespace obsfn {

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Seeded property sweep over the built-in corpus. The same seed gives the
/// same reports in the same order. Throws InputError for an unknown name.
std::vector<Report> run_suite(std::string_view name, std::uint64_t seed);

}  // namespace obsfn

#endif  // OBSFN_SUITES_HPP_
