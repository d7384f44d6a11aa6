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

// Spec grammar, analysis reports and the twalg command front end.

#ifndef TWALG_CLI_HPP_
#define TWALG_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "twalg/repdecomp.hpp"
#include "twalg/scheme.hpp"

namespace twalg {

// spec   := factor ("wr" factor)*
// factor := "K" "(" integer ")" ["^" integer]
// with every integer in the factor at least 2, every exponent at least 1,
// and whitespace ignored. Throws ParseError.
SchemeSpec parse_spec(std::string_view text);

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,     // mismatch, invalid scheme, failed criterion
  kExitUsage = 2,       // spec or argument parse error
  kExitGuard = 3,       // order exceeds --max-order
  kExitNonSplit = 4,    // irrational eigenvalue or non-split center
};

inline constexpr Index kDefaultMaxOrder = 4096;

// TWALG_MAX_ORDER if set to a positive integer, else kDefaultMaxOrder.
Index default_max_order();

// Throws GuardError if order > max_order.
void check_order(Index order, Index max_order);

// Factors whose build_from_spec reproduces s exactly, if any. Factors are
// recovered from the valencies k_i = (n_i - 1) n_1 ... n_{i-1}.
std::optional<SchemeSpec> infer_spec(const AssociationScheme& s);

struct AnalysisReport {
  Index order = 0;
  int classes = 0;
  std::vector<std::int64_t> valencies;
  Index dim_t = 0;
  std::optional<Index> predicted_dim;
  bool triply_regular = false;
  WedderburnProfile profile;
  Index nonzero_triple_count = 0;

  bool matches_prediction() const {
    return !predicted_dim || *predicted_dim == dim_t;
  }
};

AnalysisReport analyze_scheme(const AssociationScheme& s,
                              const std::optional<SchemeSpec>& spec,
                              Index base_point, std::uint64_t seed);

nlohmann::json profile_to_json(const WedderburnProfile& p);
nlohmann::json report_to_json(const AnalysisReport& r);

struct SweepRow {
  SchemeSpec spec;
  std::optional<AnalysisReport> report;  // empty when the row was skipped
  std::string note;
  bool failed = false;  // skipped for a reason other than the order guard
};

// Specs with classes in [min_classes, max_classes] and factors from the
// list, by class count then lexicographically.
std::vector<SchemeSpec> enumerate_specs(int min_classes, int max_classes,
                                        const std::vector<int>& factors);

// Rows in input order; a row that cannot be computed is skipped with a note.
std::vector<SweepRow> run_sweep(const std::vector<SchemeSpec>& specs, Index max_order,
                                Index base_point, std::uint64_t seed, unsigned jobs);

std::string sweep_csv(const std::vector<SweepRow>& rows);

// Full command line; returns the process exit status.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace twalg

#endif  // TWALG_CLI_HPP_
