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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "twalg/cli.hpp"

namespace twalg {

Index default_max_order() {
  const char* env = std::getenv("TWALG_MAX_ORDER");
  if (env == nullptr) return kDefaultMaxOrder;
  const std::string_view text(env);
  Index v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || v <= 0) {
    return kDefaultMaxOrder;
  }
  return v;
}

void check_order(Index order, Index max_order) {
  if (order > max_order) {
    throw GuardError("order " + std::to_string(order) + " exceeds max-order " +
                     std::to_string(max_order));
  }
}

std::optional<SchemeSpec> infer_spec(const AssociationScheme& s) {
  const std::vector<std::int64_t> k = valencies(s);
  std::vector<int> factors;
  std::int64_t prefix = 1;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i] % prefix != 0) return std::nullopt;
    const std::int64_t n = k[i] / prefix + 1;
    if (n < 2 || n > s.order()) return std::nullopt;
    factors.push_back(static_cast<int>(n));
    prefix *= n;
  }
  if (factors.empty() || prefix != s.order()) return std::nullopt;
  SchemeSpec spec(std::move(factors));
  if (build_from_spec(spec).relations() != s.relations()) return std::nullopt;
  return spec;
}

AnalysisReport analyze_scheme(const AssociationScheme& s,
                              const std::optional<SchemeSpec>& spec,
                              Index base_point, std::uint64_t seed) {
  const TerwilligerContext ctx(s, base_point);
  AlgebraDecomposition dec = decompose(ctx, seed);
  AnalysisReport r;
  r.order = s.order();
  r.classes = s.classes();
  r.valencies = valencies(s);
  r.dim_t = dec.algebra.dim();
  r.triply_regular = dec.algebra.triply_regular;
  r.nonzero_triple_count = static_cast<Index>(nonzero_triple_products(ctx).size());
  r.profile = std::move(dec.profile);
  if (spec) {
    r.predicted_dim = predicted_dim(*spec);
    const std::vector<int>& f = spec->factors();
    if (std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>()) != f.end()) {
      r.profile = evaluate_module_conjecture(*spec, std::move(r.profile)).profile;
    }
  }
  return r;
}

nlohmann::json profile_to_json(const WedderburnProfile& p) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const WedderburnBlock& b : p.blocks) {
    blocks.push_back({{"dim", b.dim}, {"mult", b.mult}});
  }
  nlohmann::json out = {{"blocks", std::move(blocks)},
                        {"algebra_dim", p.algebra_dim},
                        {"triply_regular", p.triply_regular},
                        {"summary", p.summary()}};
  out["conjecture_status"] =
      p.conjecture_status ? nlohmann::json(*p.conjecture_status) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json out = {{"order", r.order},
                        {"classes", r.classes},
                        {"valencies", r.valencies},
                        {"dim_T", r.dim_t},
                        {"triply_regular", r.triply_regular},
                        {"wedderburn_profile", profile_to_json(r.profile)},
                        {"nonzero_triple_count", r.nonzero_triple_count}};
  out["predicted_dim"] =
      r.predicted_dim ? nlohmann::json(*r.predicted_dim) : nlohmann::json(nullptr);
  return out;
}

std::vector<SchemeSpec> enumerate_specs(int min_classes, int max_classes,
                                        const std::vector<int>& factors) {
  std::vector<int> choices = factors;
  std::sort(choices.begin(), choices.end());
  choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
  std::vector<SchemeSpec> out;
  if (choices.empty()) return out;
  for (int d = std::max(min_classes, 1); d <= max_classes; ++d) {
    // Odometer over choices^d, least significant digit last.
    std::vector<std::size_t> digit(d, 0);
    while (true) {
      std::vector<int> f(d);
      for (int i = 0; i < d; ++i) f[i] = choices[digit[i]];
      out.emplace_back(std::move(f));
      int pos = d - 1;
      while (pos >= 0 && ++digit[pos] == choices.size()) digit[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const std::vector<SchemeSpec>& specs, Index max_order,
                                Index base_point, std::uint64_t seed, unsigned jobs) {
  std::vector<SweepRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < specs.size(); k = next++) {
      SweepRow& row = rows[k];
      row.spec = specs[k];
      try {
        check_order(specs[k].order(), max_order);
        row.report = analyze_scheme(build_from_spec(specs[k]), specs[k], base_point, seed);
      } catch (const GuardError& e) {
        row.note = specs[k].to_string() + ": skipped: " + e.what();
      } catch (const std::exception& e) {
        row.note = specs[k].to_string() + ": failed: " + e.what();
        row.failed = true;
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t useful = std::max<std::size_t>(specs.size(), 1);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, useful));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "spec,order,dim_T,predicted,triply_regular,profile\n";
  for (const SweepRow& row : rows) {
    if (!row.report) continue;
    const AnalysisReport& r = *row.report;
    out << row.spec.to_string() << ',' << r.order << ',' << r.dim_t << ','
        << (r.predicted_dim ? std::to_string(*r.predicted_dim) : "") << ','
        << (r.triply_regular ? "true" : "false") << ',' << r.profile.summary() << '\n';
  }
  return out.str();
}

}  // namespace twalg
