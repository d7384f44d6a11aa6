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

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "twalg/acceptance.hpp"
#include "twalg/cli.hpp"
#include "twalg/scheme_io.hpp"

namespace twalg {
namespace {

struct RunConfig {
  Index base_point = 0;
  std::optional<Index> max_order;  // unset: TWALG_MAX_ORDER or the default
  std::string format;              // empty: the command's default
  std::uint64_t seed = 0;
  std::string out;                 // empty: stdout
  unsigned jobs = 0;               // 0: hardware concurrency
  std::vector<std::string> only;

  std::string spec;
  std::string input;
  std::string fixture;
  bool header = false;
  std::string classes;
  std::vector<int> factors = {2, 3};
  std::vector<std::string> specs;

  Index guard() const { return max_order.value_or(default_max_order()); }
};

// Sends text to --out, or to the command stream when --out is unset.
void Emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + cfg.out);
  file << text;
}

nlohmann::json ReadJson(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read " + path);
  try {
    return nlohmann::json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSchemeError(path + ": " + e.what());
  }
}

std::string TextTable(const AssociationScheme& s) {
  const IntMatrix& r = s.relations();
  const int width = static_cast<int>(std::to_string(s.classes()).size());
  std::ostringstream out;
  for (Index x = 0; x < r.rows(); ++x) {
    for (Index y = 0; y < r.cols(); ++y) {
      out << (y ? " " : "") << std::setw(width) << r(x, y);
    }
    out << '\n';
  }
  return out.str();
}

int Build(const RunConfig& cfg, std::ostream& out) {
  const SchemeSpec spec = parse_spec(cfg.spec);
  check_order(spec.order(), cfg.guard());
  const AssociationScheme s = build_from_spec(spec);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "json") {
    Emit(cfg, out, scheme_to_json(s).dump(2) + "\n");
  } else if (format == "text") {
    Emit(cfg, out, TextTable(s));
  } else {
    Emit(cfg, out, relation_table_csv(s, cfg.header));
  }
  return kExitOk;
}

std::string ReportText(const AnalysisReport& r) {
  std::ostringstream out;
  out << "order: " << r.order << "\nclasses: " << r.classes << "\nvalencies:";
  for (std::int64_t k : r.valencies) out << ' ' << k;
  out << "\ndim_T: " << r.dim_t << "\npredicted_dim: "
      << (r.predicted_dim ? std::to_string(*r.predicted_dim) : "n/a")
      << "\ntriply_regular: " << (r.triply_regular ? "true" : "false")
      << "\nnonzero_triple_count: " << r.nonzero_triple_count
      << "\nwedderburn_profile: " << r.profile.summary() << "\nblocks (dim x mult):";
  for (const WedderburnBlock& b : r.profile.blocks) out << ' ' << b.dim << 'x' << b.mult;
  out << '\n';
  if (r.profile.conjecture_status) out << "conjecture: " << *r.profile.conjecture_status << '\n';
  return out.str();
}

int Analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AssociationScheme s;
  std::optional<SchemeSpec> spec;
  std::string label;
  if (cfg.spec.empty() == cfg.input.empty()) {
    throw ParseError("analyze needs a spec or --input FILE");
  }
  if (!cfg.input.empty()) {
    const nlohmann::json doc = ReadJson(cfg.input);
    if (doc.contains("order") && doc["order"].is_number_integer()) {
      check_order(doc["order"].get<Index>(), cfg.guard());
    }
    s = scheme_from_json(doc);
    check_order(s.order(), cfg.guard());
    spec = infer_spec(s);
  } else {
    spec = parse_spec(cfg.spec);
    check_order(spec->order(), cfg.guard());
    s = build_from_spec(*spec);
  }
  const AnalysisReport report = analyze_scheme(s, spec, cfg.base_point, cfg.seed);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "text") {
    Emit(cfg, out, ReportText(report));
  } else if (format == "csv") {
    SweepRow row{spec.value_or(SchemeSpec()), report, "", false};
    Emit(cfg, out, sweep_csv({row}));
  } else {
    Emit(cfg, out, report_to_json(report).dump(2) + "\n");
  }
  if (!report.matches_prediction()) {
    err << "dim_T " << report.dim_t << " != predicted_dim " << *report.predicted_dim << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int VerifyPaper(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream text;
  bool ok = true;
  if (!cfg.fixture.empty()) {
    try {
      scheme_from_json(ReadJson(cfg.fixture));
      text << "PASS fixture " << cfg.fixture << ": valid scheme\n";
    } catch (const InvalidSchemeError& e) {
      text << "FAIL fixture " << cfg.fixture << ": " << e.what() << '\n';
      ok = false;
    }
  }
  std::vector<CriterionResult> results;
  if (cfg.fixture.empty() || !cfg.only.empty()) {
    // Lines go to the stream as each criterion finishes unless --out is set.
    if (cfg.out.empty() && cfg.format != "json") {
      out << text.str();
      text.str("");
      results = run_suite(cfg.only, out, cfg.seed);
    } else {
      std::ostringstream sink;
      results = run_suite(cfg.only, sink, cfg.seed);
      text << sink.str();
    }
  }
  for (const CriterionResult& r : results) ok &= r.passed;
  if (cfg.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CriterionResult& r : results) {
      doc.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    Emit(cfg, out, doc.dump(2) + "\n");
  } else if (!cfg.out.empty() || !text.str().empty()) {
    Emit(cfg, out, text.str());
  }
  return ok ? kExitOk : kExitFailure;
}

std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ParseError("--classes expects N or MIN..MAX, got '" + text + "'");
  }
}

int Sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SchemeSpec> specs;
  if (!cfg.classes.empty()) {
    const auto [lo, hi] = ParseRange(cfg.classes);
    for (int f : cfg.factors) {
      if (f < 2) throw ParseError("--factors entries must be at least 2");
    }
    specs = enumerate_specs(lo, hi, cfg.factors);
  }
  for (const std::string& text : cfg.specs) specs.push_back(parse_spec(text));
  const std::vector<SweepRow> rows =
      run_sweep(specs, cfg.guard(), cfg.base_point, cfg.seed, cfg.jobs);
  bool ok = true;
  for (const SweepRow& row : rows) {
    if (!row.note.empty()) err << row.note << '\n';
    ok &= !row.failed && (!row.report || row.report->matches_prediction());
  }
  if (cfg.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const SweepRow& row : rows) {
      if (!row.report) continue;
      nlohmann::json r = report_to_json(*row.report);
      r["spec"] = row.spec.to_string();
      doc.push_back(std::move(r));
    }
    Emit(cfg, out, doc.dump(2) + "\n");
  } else {
    Emit(cfg, out, sweep_csv(rows));
  }
  return ok ? kExitOk : kExitFailure;
}

void AddCommon(CLI::App* cmd, RunConfig& cfg, const std::vector<std::string>& formats) {
  cmd->add_option("--base-point", cfg.base_point, "Base vertex x of T(x)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-order", cfg.max_order,
                  "Refuse schemes with more vertices (default TWALG_MAX_ORDER or 4096)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--seed", cfg.seed, "Seed for the generic central element");
  cmd->add_option("--out", cfg.out, "Write output to this file");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"twalg: Terwilliger algebras of wreath products of complete schemes"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* build = app.add_subcommand("build", "Write the relation table of a spec");
  AddCommon(build, cfg, {"csv", "json", "text"});
  build->add_option("spec", cfg.spec, "Spec such as \"K(2) wr K(3)\" or \"K(3)^2\"")
      ->required();
  build->add_flag("--header", cfg.header, "CSV: emit a v0,v1,... header row");

  CLI::App* analyze = app.add_subcommand("analyze", "Compute T, T0 and the Wedderburn profile");
  AddCommon(analyze, cfg, {"json", "csv", "text"});
  CLI::Option* spec_opt = analyze->add_option("spec", cfg.spec, "Spec text");
  CLI::Option* input_opt =
      analyze->add_option("--input", cfg.input, "Scheme JSON document instead of a spec");
  spec_opt->excludes(input_opt);

  CLI::App* verify = app.add_subcommand("verify-paper", "Run the verification suite");
  AddCommon(verify, cfg, {"text", "json"});
  verify->add_option("--only", cfg.only, "Run only these criteria")
      ->check(CLI::IsMember(criterion_names()));
  verify->add_option("--fixture", cfg.fixture, "Validate this scheme JSON first");

  CLI::App* sweep = app.add_subcommand("sweep", "Analyze a range of specs as CSV rows");
  AddCommon(sweep, cfg, {"csv", "json"});
  sweep->add_option("--classes", cfg.classes, "Class counts, N or MIN..MAX");
  sweep->add_option("--factors", cfg.factors, "Factor sizes to combine (default 2,3)")
      ->delimiter(',');
  sweep->add_option("--spec", cfg.specs, "Extra spec rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return Build(cfg, out);
    if (analyze->parsed()) return Analyze(cfg, out, err);
    if (verify->parsed()) return VerifyPaper(cfg, out);
    return Sweep(cfg, out, err);
  } catch (const ParseError& e) {
    err << "twalg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "twalg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "twalg: " << e.what() << '\n';
    return kExitGuard;
  } catch (const IrrationalEigenvalueError& e) {
    err << "twalg: " << e.what() << '\n';
    return kExitNonSplit;
  } catch (const NonSplitCenterError& e) {
    err << "twalg: " << e.what() << '\n';
    return kExitNonSplit;
  } catch (const std::exception& e) {
    err << "twalg: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace twalg
