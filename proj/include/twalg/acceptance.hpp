// Copyright 2026 The twalg Authors
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

// The verification suite: one named criterion per reproduced result.

#ifndef TWALG_ACCEPTANCE_HPP_
#define TWALG_ACCEPTANCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace twalg {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// relation-table, intersection-numbers, triple-vanishing, dim-formula,
// triple-regularity, wedderburn, k2-family, wreath-square,
// product-identities, robustness.
const std::vector<std::string>& criterion_names();

// Throws std::invalid_argument for an unknown name. A criterion that
// throws is reported as failed with the exception text.
CriterionResult run_criterion(const std::string& name, std::uint64_t seed = 0);

// Runs the named criteria (all when empty), printing one
// "PASS name: detail (t s)" or "FAIL ..." line each to out as they finish.
std::vector<CriterionResult> run_suite(const std::vector<std::string>& only,
                                       std::ostream& out, std::uint64_t seed = 0);

std::string format_result(const CriterionResult& r);

}  // namespace twalg

#endif  // TWALG_ACCEPTANCE_HPP_
