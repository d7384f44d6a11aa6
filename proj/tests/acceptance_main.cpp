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


// Runs the verification suite; exit status 0 iff every criterion passes.
// Usage: acceptance [--seed N] [criterion ...]

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "twalg/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> only;
  std::uint64_t seed = 0;
  try {
    for (int k = 1; k < argc; ++k) {
      const std::string arg = argv[k];
      if (arg == "--seed" && k + 1 < argc) {
        seed = std::stoull(argv[++k]);
      } else {
        only.push_back(arg);
      }
    }
    const auto results = twalg::run_suite(only, std::cout, seed);
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
}
