// Copyright 2026 The pr4a Authors.
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

#include "pr4a/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pr4a/assign.h"
#include "pr4a/baselines.h"
#include "pr4a/coverage.h"
#include "pr4a/experiments.h"
#include "pr4a/io.h"

namespace pr4a {
namespace {

using nlohmann::json;

struct Instance {
  SimilarityTable table;
  LoadConstraints lc;
};

// Options shared by commands that read one instance.
struct InstanceArgs {
  std::string similarity;
  std::string loads;
  std::string case_name;
  int n = 100;
  int m = 100;
  std::uint64_t case_seed = 0;
  int lambda = 4;
  int mu = 4;
};

struct TransformArgs {
  std::string f = "identity";
  std::string h = "one-minus-s";
};

struct Outputs {
  std::string dir;
  std::vector<std::string> written;

  void Write(const std::string& name, const std::string& content) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    WriteFile((std::filesystem::path(dir) / name).string(), content);
    written.push_back(name);
  }
};

SimilarityTable TableFor(const SimilarityMatrix& s) {
  SimilarityTable t{s, {}, {}};
  for (int i = 0; i < s.num_reviewers(); ++i) {
    t.reviewer_ids.push_back("r" + std::to_string(i));
  }
  for (int j = 0; j < s.num_papers(); ++j) {
    t.paper_ids.push_back("p" + std::to_string(j));
  }
  return t;
}

// Flag values that fail to parse are reported like unreadable input.
template <typename F>
auto AsParse(F&& parse) {
  try {
    return parse();
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

Instance LoadInstance(const InstanceArgs& args) {
  Instance inst;
  if (!args.case_name.empty()) {
    const CaseId id = AsParse([&] { return ParseCaseId(args.case_name); });
    inst.table =
        TableFor(GenerateCase({id, args.n, args.m}, args.case_seed));
  } else {
    std::istringstream in(ReadFile(args.similarity));
    inst.table = ReadSimilarityCsv(in);
  }
  const int n = inst.table.s.num_reviewers();
  const int m = inst.table.s.num_papers();
  if (!args.loads.empty()) {
    std::istringstream in(ReadFile(args.loads));
    inst.lc = ReadLoadsJson(in, n, m);
  } else {
    inst.lc = LoadConstraints::Uniform(n, m, args.lambda, args.mu);
    inst.lc.Validate(n, m);
  }
  return inst;
}

json InstanceJson(const InstanceArgs& args, const Instance& inst) {
  json j;
  if (!args.case_name.empty()) {
    j["case"] = args.case_name;
    j["n"] = args.n;
    j["m"] = args.m;
    j["case_seed"] = args.case_seed;
  } else {
    j["similarity"] = args.similarity;
  }
  if (!args.loads.empty()) j["loads"] = args.loads;
  j["lambda"] = inst.lc.paper_demand;
  j["mu"] = inst.lc.reviewer_capacity;
  return j;
}

void AddInstanceOptions(CLI::App* cmd, InstanceArgs& args, bool positional) {
  if (positional) {
    cmd->add_option("similarity", args.similarity, "similarity CSV");
    cmd->add_option("loads", args.loads, "loads JSON");
  } else {
    cmd->add_option("--similarity", args.similarity, "similarity CSV");
    cmd->add_option("--loads", args.loads, "loads JSON");
  }
  cmd->add_option("--case", args.case_name,
                  "generate case C1, C2, C3 or C5 instead of reading a file");
  cmd->add_option("--n", args.n, "reviewers for --case");
  cmd->add_option("--m", args.m, "papers for --case");
  cmd->add_option("--case-seed", args.case_seed, "seed for random cases");
  cmd->add_option("--lambda", args.lambda, "demand when no loads file");
  cmd->add_option("--mu", args.mu, "capacity when no loads file");
}

void AddTransformOptions(CLI::App* cmd, TransformArgs& args) {
  cmd->add_option("--f", args.f,
                  "identity | inverse-one-minus-s | one-minus-h | threshold:z");
  cmd->add_option("--noise", args.h,
                  "one-minus-s | scaled-one-minus-s:c | constant:c");
}

Transform ResolveTransform(const TransformArgs& args) {
  return AsParse([&] {
    return Transform::Parse(args.f, NoiseModel::Parse(args.h));
  });
}

std::vector<Algorithm> ResolveAlgorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  for (const auto& name : names) {
    out.push_back(AsParse([&] { return ParseAlgorithm(name); }));
  }
  return out;
}

json Manifest(const std::string& command, const std::vector<std::string>& args,
              json inputs, json config, const std::vector<std::string>& outputs) {
  json j;
  j["tool"] = "pr4a";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["args"] = args;
  j["inputs"] = std::move(inputs);
  j["config"] = std::move(config);
  j["outputs"] = outputs;
  return j;
}

void FinishManifest(Outputs& outputs, const std::string& command,
                    const std::vector<std::string>& args, json inputs,
                    json config) {
  auto listed = outputs.written;
  listed.push_back("manifest.json");
  outputs.Write("manifest.json",
                Manifest(command, args, std::move(inputs), std::move(config),
                         listed)
                        .dump(2) +
                    "\n");
}

std::string Ratio(double achieved, double best) {
  if (best == 0.0 || (std::isinf(achieved) && std::isinf(best))) return "1";
  return FormatNumber(achieved / best);
}

// --- assign ---------------------------------------------------------------

struct AssignArgs {
  InstanceArgs instance;
  TransformArgs transform;
  std::string algorithm = "pr4a";
  std::string heuristic = "maxcost";
  std::string mode = "full";
  std::string topics;
  std::uint64_t seed = 0;
  std::string out;
  bool json_out = false;
};

int RunAssign(const AssignArgs& args, const std::vector<std::string>& argv,
              std::ostream& out) {
  const Instance inst = LoadInstance(args.instance);
  const Transform f = ResolveTransform(args.transform);
  const Algorithm algorithm =
      AsParse([&] { return ParseAlgorithm(args.algorithm); });

  TopicProfile topics;
  Pr4aOptions options;
  options.mode = args.mode == "early-stop" ? Pr4aMode::kEarlyStop
                                           : Pr4aMode::kFull;
  if (args.heuristic == "coverage") {
    if (args.topics.empty()) {
      throw ParseError("--heuristic coverage needs --topics");
    }
    std::istringstream in(ReadFile(args.topics));
    topics = ReadTopicsJson(in, inst.table);
    options.subroutine.heuristic = Heuristic::kCoverage;
    options.subroutine.topics = &topics;
  }

  const SimilarityMatrix& s = inst.table.s;
  Assignment a;
  json trace;
  if (algorithm == Algorithm::kPr4a) {
    const auto result = PeerReview4All(s, inst.lc, f, options);
    a = result.assignment;
    trace = TraceToJson(result.trace, inst.table.paper_ids);
  } else {
    a = RunAlgorithm(algorithm, s, inst.lc, f, args.seed);
    trace["iterations"] = json::array();
  }
  const auto report = ValidateAssignment(a, s, inst.lc);
  if (!report.ok()) throw InvalidAssignmentError(report.Summary());

  const double fairness = Fairness(a, s, f);
  const double cumulative = CumulativeQuality(a, s);
  trace["algorithm"] = args.algorithm;
  trace["fairness"] = JsonNumber(fairness);
  trace["cumulative"] = JsonNumber(cumulative);

  Outputs outputs{args.out, {}};
  std::ostringstream csv;
  WriteAssignmentCsv(a, inst.table, csv);
  outputs.Write("assignment.csv", csv.str());
  outputs.Write("trace.json", trace.dump(2) + "\n");
  json config = {{"f", f.Name()},
                 {"noise", args.transform.h},
                 {"algorithm", args.algorithm},
                 {"heuristic", args.heuristic},
                 {"mode", args.mode},
                 {"seed", args.seed}};
  json inputs = InstanceJson(args.instance, inst);
  if (!args.topics.empty()) inputs["topics"] = args.topics;
  FinishManifest(outputs, "assign", argv, inputs, config);

  if (args.json_out) {
    out << json{{"algorithm", args.algorithm},
                {"fairness", JsonNumber(fairness)},
                {"cumulative", JsonNumber(cumulative)},
                {"iterations", trace["iterations"].size()}}
               .dump()
        << "\n";
  } else {
    out << "algorithm " << args.algorithm << "\nfairness "
        << FormatNumber(fairness) << "\ncumulative " << FormatNumber(cumulative)
        << "\n";
    if (args.out.empty()) out << csv.str();
  }
  return kExitOk;
}

// --- report ---------------------------------------------------------------

struct ReportArgs {
  InstanceArgs instance;
  TransformArgs transform;
  std::string assignment;
  std::vector<std::string> algorithms = {"pr4a", "tpms", "hartvigsen",
                                         "random"};
  std::uint64_t seed = 0;
  std::string out;
  bool json_out = false;
};

int RunReport(const ReportArgs& args, const std::vector<std::string>& argv,
              std::ostream& out) {
  const Instance inst = LoadInstance(args.instance);
  const Transform f = ResolveTransform(args.transform);
  const SimilarityMatrix& s = inst.table.s;
  std::vector<FairnessRow> rows;
  if (!args.assignment.empty()) {
    std::istringstream in(ReadFile(args.assignment));
    const Assignment a = ReadAssignmentCsv(in, inst.table);
    const auto report = ValidateAssignment(a, s, inst.lc);
    if (!report.ok()) throw InvalidAssignmentError(report.Summary());
    rows.push_back({args.assignment, Fairness(a, s, f), CumulativeQuality(a, s),
                    PaperSumProfile(a, s, f), ""});
  } else {
    rows = FairnessReport(s, inst.lc, f, ResolveAlgorithms(args.algorithms),
                          args.seed);
  }

  std::ostringstream csv, js;
  WriteFairnessCsv(rows, csv);
  WriteFairnessJson(rows, js);
  Outputs outputs{args.out, {}};
  outputs.Write("report.csv", csv.str());
  outputs.Write("report.json", js.str());
  json inputs = InstanceJson(args.instance, inst);
  if (!args.assignment.empty()) inputs["assignment"] = args.assignment;
  FinishManifest(outputs, "report", argv, inputs,
                 {{"f", f.Name()},
                  {"algorithms", args.algorithms},
                  {"seed", args.seed}});
  out << (args.json_out ? js.str() : csv.str());
  return kExitOk;
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  InstanceArgs instance;
  std::string sweep;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  int workers = 1;
  std::string out;
  bool json_out = false;
};

int RunSimulate(const SimulateArgs& args, const std::vector<std::string>& argv,
                std::ostream& out) {
  SweepConfig config;
  if (!args.sweep.empty()) {
    try {
      config = ReadSweepConfig(json::parse(ReadFile(args.sweep)));
    } catch (const json::exception& e) {
      throw ParseError(std::string("sweep file: ") + e.what());
    }
  }
  if (args.seed) config.seed = *args.seed;
  if (args.trials) config.trials = *args.trials;
  if (!args.instance.case_name.empty() && config.label == "custom") {
    config.label = args.instance.case_name;
  }
  InstanceArgs instance_args = args.instance;
  instance_args.lambda = config.lambda;
  instance_args.mu = config.mu;
  const Instance inst = LoadInstance(instance_args);
  config.Validate(inst.table.s.num_papers());

  // One task per algorithm, at most `workers` running; results are joined in
  // algorithm order so the output does not depend on scheduling.
  const std::size_t count = config.algorithms.size();
  std::vector<std::vector<SweepRecord>> parts(count);
  const std::size_t workers =
      static_cast<std::size_t>(std::max(1, args.workers));
  for (std::size_t start = 0; start < count; start += workers) {
    std::vector<std::future<std::vector<SweepRecord>>> running;
    for (std::size_t k = start; k < std::min(count, start + workers); ++k) {
      SweepConfig one = config;
      one.algorithms = {config.algorithms[k]};
      running.push_back(std::async(
          workers > 1 ? std::launch::async : std::launch::deferred,
          [one, &inst] { return RunRecoverySweep(one, inst.table.s); }));
    }
    for (std::size_t k = 0; k < running.size(); ++k) {
      parts[start + k] = running[k].get();
    }
  }
  std::vector<SweepRecord> records;
  for (auto& part : parts) {
    records.insert(records.end(), part.begin(), part.end());
  }

  std::ostringstream jsonl, csv;
  WriteSweepJsonl(records, jsonl);
  WriteSweepCsv(records, csv);
  Outputs outputs{args.out, {}};
  outputs.Write("results.jsonl", jsonl.str());
  outputs.Write("results.csv", csv.str());
  json inputs = InstanceJson(instance_args, inst);
  if (!args.sweep.empty()) inputs["sweep"] = args.sweep;
  FinishManifest(outputs, "simulate", argv, inputs, SweepConfigToJson(config));
  out << (args.json_out ? jsonl.str() : csv.str());

  const bool all_failed =
      std::all_of(records.begin(), records.end(),
                  [](const SweepRecord& r) { return !r.failure.empty(); });
  return all_failed ? kExitInfeasible : kExitOk;
}

// --- crowd-eval -----------------------------------------------------------

struct CrowdArgs {
  std::string responses;
  std::string key;
  bool synthetic = false;
  int strong = 25;
  int weak = 55;
  double strong_accuracy = 0.95;
  double weak_accuracy = 0.25;
  std::uint64_t corpus_seed = 0;
  CrowdConfig config;
  std::vector<std::string> algorithms = {"pr4a", "tpms", "hartvigsen",
                                         "random"};
  std::string out;
  bool json_out = false;
};

int RunCrowd(CrowdArgs args, const std::vector<std::string>& argv,
             std::ostream& out) {
  Outputs outputs{args.out, {}};
  ResponseMatrix rm;
  json inputs;
  if (args.synthetic) {
    CrowdProfile profile;
    profile.worker_accuracy.assign(args.strong, args.strong_accuracy);
    profile.worker_accuracy.resize(args.strong + args.weak, args.weak_accuracy);
    rm = AsParse([&] { return SyntheticResponses(profile, args.corpus_seed); });
    std::ostringstream responses, key;
    WriteResponses(rm, responses, key);
    outputs.Write("responses.csv", responses.str());
    outputs.Write("key.csv", key.str());
    inputs = {{"synthetic", true},
              {"strong", args.strong},
              {"weak", args.weak},
              {"strong_accuracy", JsonNumber(args.strong_accuracy)},
              {"weak_accuracy", JsonNumber(args.weak_accuracy)},
              {"corpus_seed", args.corpus_seed}};
  } else {
    if (args.responses.empty() || args.key.empty()) {
      throw ParseError("crowd-eval needs --responses and --key or --synthetic");
    }
    std::istringstream responses(ReadFile(args.responses));
    std::istringstream key(ReadFile(args.key));
    rm = ReadResponses(responses, key);
    inputs = {{"responses", args.responses}, {"key", args.key}};
  }
  args.config.algorithms = ResolveAlgorithms(args.algorithms);
  const CrowdResult result = CrowdEval(rm, args.config);

  std::ostringstream csv;
  WriteCrowdCsv(result, csv);
  outputs.Write("crowd.csv", csv.str());
  const auto& c = args.config;
  FinishManifest(outputs, "crowd-eval", argv, inputs,
                 {{"lambda", c.lambda},
                  {"mu", c.mu},
                  {"sample_workers", c.sample_workers},
                  {"gold_per_region", c.gold_per_region},
                  {"trials", c.trials},
                  {"algorithms", args.algorithms},
                  {"seed", c.seed}});
  if (args.json_out) {
    json rows = json::array();
    for (const auto& r : result.rows) {
      rows.push_back({{"algorithm", r.algorithm},
                      {"trials", r.trials},
                      {"failures", r.failures},
                      {"mean_error", JsonNumber(r.mean_error)},
                      {"stderr", JsonNumber(r.stderr_error)},
                      {"mean_fairness", JsonNumber(r.mean_fairness)},
                      {"mean_cumulative", JsonNumber(r.mean_cumulative)}});
    }
    out << rows.dump() << "\n";
  } else {
    out << csv.str();
  }
  return kExitOk;
}

// --- oracle ---------------------------------------------------------------

struct OracleArgs {
  InstanceArgs instance;
  TransformArgs transform;
  std::int64_t budget = OracleBudget{}.max_search_nodes;
  std::string out;
  bool json_out = false;
};

int RunOracle(const OracleArgs& args, const std::vector<std::string>& argv,
              std::ostream& out) {
  const Instance inst = LoadInstance(args.instance);
  const Transform f = ResolveTransform(args.transform);
  const SimilarityMatrix& s = inst.table.s;
  OracleBudget budget;
  budget.max_search_nodes = args.budget;
  const OracleResult best = HardBruteforce(s, inst.lc, f, budget);
  const Assignment pr4a = PeerReview4All(s, inst.lc, f).assignment;
  const double achieved = Fairness(pr4a, s, f);

  json result;
  result["oracle_fairness"] = JsonNumber(best.fairness);
  result["pr4a_fairness"] = JsonNumber(achieved);
  result["ratio"] = Ratio(achieved, best.fairness);
  result["nodes"] = best.nodes;
  if (inst.lc.IsUniformDemand()) {
    const auto bound = FairnessLowerBound(s, inst.lc, f);
    result["bound_fairness"] = JsonNumber(bound.numerator);
    result["bound_ratio"] = JsonNumber(bound.ratio);
  }
  result["certificate"] = json::array();
  for (int j = 0; j < s.num_papers(); ++j) {
    json reviewers = json::array();
    for (int i : best.assignment.ReviewersOf(j)) {
      reviewers.push_back(inst.table.reviewer_ids[i]);
    }
    result["certificate"].push_back(
        {{"paper", inst.table.paper_ids[j]}, {"reviewers", reviewers}});
  }

  Outputs outputs{args.out, {}};
  std::ostringstream csv;
  WriteAssignmentCsv(best.assignment, inst.table, csv);
  outputs.Write("oracle_assignment.csv", csv.str());
  outputs.Write("oracle.json", result.dump(2) + "\n");
  FinishManifest(outputs, "oracle", argv, InstanceJson(args.instance, inst),
                 {{"f", f.Name()}, {"budget", args.budget}});

  if (args.json_out) {
    out << result.dump() << "\n";
  } else {
    out << "oracle fairness " << FormatNumber(best.fairness)
        << "\npr4a fairness " << FormatNumber(achieved) << "\nratio "
        << result["ratio"].get<std::string>() << "\n";
    if (result.contains("bound_ratio")) {
      out << "guaranteed fairness "
          << FormatNumber(FairnessLowerBound(s, inst.lc, f).numerator)
          << "\nguaranteed ratio "
          << FormatNumber(FairnessLowerBound(s, inst.lc, f).ratio) << "\n";
    }
    out << "search nodes " << best.nodes << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Fair reviewer assignment and evaluation tools", "pr4a"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  AssignArgs assign;
  auto* cmd_assign = app.add_subcommand("assign", "compute an assignment");
  AddInstanceOptions(cmd_assign, assign.instance, true);
  AddTransformOptions(cmd_assign, assign.transform);
  cmd_assign->add_option("--algorithm", assign.algorithm)
      ->check(CLI::IsMember({"pr4a", "tpms", "hartvigsen", "random"}));
  cmd_assign->add_option("--heuristic", assign.heuristic)
      ->check(CLI::IsMember({"maxcost", "coverage"}));
  cmd_assign->add_option("--mode", assign.mode)
      ->check(CLI::IsMember({"full", "early-stop"}));
  cmd_assign->add_option("--topics", assign.topics, "topic profile JSON");
  cmd_assign->add_option("--seed", assign.seed);
  cmd_assign->add_option("--out", assign.out, "output directory");
  cmd_assign->add_flag("--json", assign.json_out);

  ReportArgs report;
  auto* cmd_report =
      app.add_subcommand("report", "fairness and total similarity table");
  AddInstanceOptions(cmd_report, report.instance, true);
  AddTransformOptions(cmd_report, report.transform);
  cmd_report->add_option("--assignment", report.assignment,
                         "evaluate this assignment CSV instead");
  cmd_report->add_option("--algorithms", report.algorithms)->delimiter(',');
  cmd_report->add_option("--seed", report.seed);
  cmd_report->add_option("--out", report.out, "output directory");
  cmd_report->add_flag("--json", report.json_out);

  SimulateArgs simulate;
  auto* cmd_simulate =
      app.add_subcommand("simulate", "top-k recovery sweep");
  AddInstanceOptions(cmd_simulate, simulate.instance, false);
  cmd_simulate->add_option("--sweep", simulate.sweep, "sweep config JSON");
  cmd_simulate->add_option("--seed", simulate.seed, "overrides the sweep seed");
  cmd_simulate->add_option("--trials", simulate.trials);
  cmd_simulate->add_option("--workers", simulate.workers,
                           "algorithms run concurrently")
      ->check(CLI::PositiveNumber);
  cmd_simulate->add_option("--out", simulate.out, "output directory");
  cmd_simulate->add_flag("--json", simulate.json_out);

  CrowdArgs crowd;
  auto* cmd_crowd =
      app.add_subcommand("crowd-eval", "majority-vote crowd evaluation");
  cmd_crowd->add_option("--responses", crowd.responses, "responses CSV");
  cmd_crowd->add_option("--key", crowd.key, "answer key CSV");
  cmd_crowd->add_flag("--synthetic", crowd.synthetic,
                      "generate a strong/weak worker corpus");
  cmd_crowd->add_option("--strong", crowd.strong);
  cmd_crowd->add_option("--weak", crowd.weak);
  cmd_crowd->add_option("--strong-accuracy", crowd.strong_accuracy);
  cmd_crowd->add_option("--weak-accuracy", crowd.weak_accuracy);
  cmd_crowd->add_option("--corpus-seed", crowd.corpus_seed);
  cmd_crowd->add_option("--lambda", crowd.config.lambda);
  cmd_crowd->add_option("--mu", crowd.config.mu);
  cmd_crowd->add_option("--sample", crowd.config.sample_workers,
                        "workers drawn per trial");
  cmd_crowd->add_option("--gold", crowd.config.gold_per_region);
  cmd_crowd->add_option("--trials", crowd.config.trials);
  cmd_crowd->add_option("--algorithms", crowd.algorithms)->delimiter(',');
  cmd_crowd->add_option("--seed", crowd.config.seed);
  cmd_crowd->add_option("--out", crowd.out, "output directory");
  cmd_crowd->add_flag("--json", crowd.json_out);

  OracleArgs oracle;
  auto* cmd_oracle =
      app.add_subcommand("oracle", "exact optimum for small instances");
  AddInstanceOptions(cmd_oracle, oracle.instance, true);
  AddTransformOptions(cmd_oracle, oracle.transform);
  cmd_oracle->add_option("--budget", oracle.budget, "search node budget");
  cmd_oracle->add_option("--out", oracle.out, "output directory");
  cmd_oracle->add_flag("--json", oracle.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (*cmd_assign) return RunAssign(assign, args, out);
    if (*cmd_report) return RunReport(report, args, out);
    if (*cmd_simulate) return RunSimulate(simulate, args, out);
    if (*cmd_crowd) return RunCrowd(crowd, args, out);
    if (*cmd_oracle) return RunOracle(oracle, args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << " (bottleneck: " << e.flow_value()
        << " of " << e.target() << " review slots can be filled)\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitParse;
}

}  // namespace pr4a
