// Copyright 2026 The pfa-reductions Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named invariant suites behind `pfa_tool check`.

#ifndef PFA_CHECKS_HPP_
#define PFA_CHECKS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/pcp.hpp"

namespace pfa {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct CheckOptions {
  std::optional<std::size_t> trials;   // randomized suites; suite default if unset
  std::optional<std::size_t> max_len;  // exhaustive suites; suite default if unset
  std::uint64_t seed = kDefaultSeed;
};

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<InvariantResult> invariants;
  bool passed() const;
};

// Suite names in run order, excluding "all".
const std::vector<std::string>& suite_names();

// Throws InvalidInput for an unknown suite name.
SuiteResult run_suite(std::string_view name, const CheckOptions& options);

// The textbook instance {(1,101),(10,00),(011,11)} over "01"; every solution
// starts with pair 1.
PcpInstance classic_instance();

}  // namespace pfa

#endif  // PFA_CHECKS_HPP_
