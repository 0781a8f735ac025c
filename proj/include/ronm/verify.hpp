// Copyright 2026 The RoNM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ronm {

struct CheckResult {
  std::string name;
  bool pass;
  double worst;      // largest observed violation measure
  double tolerance;  // pass iff worst <= tolerance
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed;
  std::vector<CheckResult> checks;

  bool pass() const;
};

const std::vector<std::string>& suite_names();

SuiteResult verify_properties(std::uint64_t seed);
SuiteResult verify_duality(std::uint64_t seed);
SuiteResult verify_theorem1(std::uint64_t seed);
SuiteResult verify_theorem2(std::uint64_t seed);
SuiteResult verify_theorem3(std::uint64_t seed);
SuiteResult verify_theorem4(std::uint64_t seed);
SuiteResult verify_rhp(std::uint64_t seed);

// Throws std::invalid_argument for names outside suite_names().
SuiteResult run_suite(std::string_view name, std::uint64_t seed);

void print_suite(const SuiteResult& result, std::ostream& out);

}  // namespace ronm
