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

#include "pr4a/experiments.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <random>

#include "json.hpp"
#include "pr4a/assign.h"
#include "pr4a/baselines.h"
#include "pr4a/io.h"

namespace pr4a {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Rounded share `percent`% of `total`.
int Share(int total, int percent) { return (total * percent + 50) / 100; }

// Beta(alpha, beta) as X / (X + Y) with X ~ Gamma(alpha), Y ~ Gamma(beta).
double DrawBeta(std::mt19937_64& rng, double alpha, double beta) {
  std::gamma_distribution<double> x(alpha, 1.0), y(beta, 1.0);
  const double a = x(rng);
  const double b = y(rng);
  return a / (a + b);
}

struct MeanAndError {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanAndError Summarize(const std::vector<double>& values) {
  const double count = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / count;
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const double var = values.size() > 1 ? sq / (count - 1) : 0.0;
  return {mean, std::sqrt(var / count)};
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(c));
  return s;
}

std::vector<int> Shuffled(int count, std::mt19937_64& rng) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

Algorithm ParseAlgorithm(const std::string& name) {
  const std::string key = Lower(name);
  if (key == "pr4a") return Algorithm::kPr4a;
  if (key == "tpms") return Algorithm::kTpms;
  if (key == "hartvigsen") return Algorithm::kHartvigsen;
  if (key == "random") return Algorithm::kRandom;
  if (key == "oracle") return Algorithm::kOracle;
  throw ArgumentError("unknown algorithm \"" + name + "\"");
}

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kPr4a: return "pr4a";
    case Algorithm::kTpms: return "tpms";
    case Algorithm::kHartvigsen: return "hartvigsen";
    case Algorithm::kRandom: return "random";
    case Algorithm::kOracle: return "oracle";
  }
  return "?";
}

Assignment RunAlgorithm(Algorithm algorithm, const SimilarityMatrix& s,
                        const LoadConstraints& lc, const Transform& f,
                        std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kPr4a: return PeerReview4All(s, lc, f).assignment;
    case Algorithm::kTpms: return TpmsAssign(s, lc);
    case Algorithm::kHartvigsen: return HartvigsenAssign(s, lc);
    case Algorithm::kRandom: return RandomAssign(s, lc, seed);
    case Algorithm::kOracle: return HardBruteforce(s, lc, f).assignment;
  }
  throw ArgumentError("unknown algorithm");
}

CaseId ParseCaseId(const std::string& name) {
  const std::string key = Lower(name);
  if (key == "c1") return CaseId::kC1;
  if (key == "c2") return CaseId::kC2;
  if (key == "c3") return CaseId::kC3;
  if (key == "c5") return CaseId::kC5;
  throw ArgumentError("unknown case \"" + name + "\" (C1, C2, C3, C5)");
}

std::string CaseName(CaseId id) {
  switch (id) {
    case CaseId::kC1: return "C1";
    case CaseId::kC2: return "C2";
    case CaseId::kC3: return "C3";
    case CaseId::kC5: return "C5";
  }
  return "?";
}

SimilarityMatrix GenerateCase(const CaseSpec& spec, std::uint64_t seed) {
  const int n = spec.num_reviewers;
  const int m = spec.num_papers;
  if (n < 2 || m < 2) throw ArgumentError("case needs n, m >= 2");
  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  auto check = [](std::initializer_list<int> sizes) {
    for (int size : sizes) {
      if (size <= 0) throw ArgumentError("case too small for its blocks");
    }
  };
  std::mt19937_64 rng = SeededEngine(seed, static_cast<int>(spec.id) + 1);
  switch (spec.id) {
    case CaseId::kC1: {
      const int experts = Share(n, 80);
      const int mainstream = Share(m, 80);
      check({experts, n - experts, mainstream, m - mainstream});
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          const bool expert = i < experts;
          const bool main = j < mainstream;
          rows[i][j] = expert && main ? 0.9 : (!expert && !main ? 0.15 : 0.5);
        }
      }
      break;
    }
    case CaseId::kC2: {
      const int strong = Share(n, 25);
      check({strong, n - strong});
      for (int i = 0; i < n; ++i) {
        const double base = i < strong ? 0.8 : 0.1;
        for (int j = 0; j < m; ++j) {
          rows[i][j] = base + 0.2 * DrawBeta(rng, 1.0, 3.0);
        }
      }
      break;
    }
    case CaseId::kC3: {
      const int super = Share(n, 10);
      const int weak = Share(n, 50);
      const int left = Share(m, 60);
      check({super, weak, n - super - weak, left, m - left});
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i < super) {
            rows[i][j] = j < left ? 0.98 : 0.9;
          } else if (i < super + weak) {
            rows[i][j] = j < left ? 0.0 : 0.7;
          } else {
            rows[i][j] = 0.9;
          }
        }
      }
      break;
    }
    case CaseId::kC5: {
      std::bernoulli_distribution zero(0.8);
      std::uniform_real_distribution<double> value(0.1, 0.9);
      for (auto& row : rows) {
        for (double& v : row) v = zero(rng) ? 0.0 : value(rng);
      }
      break;
    }
  }
  return SimilarityMatrix::FromRows(rows);
}

void SweepConfig::Validate(int num_papers) const {
  if (deltas.empty()) throw ArgumentError("empty delta grid");
  for (double d : deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw ArgumentError("delta values must be positive");
    }
  }
  if (trials < 1) throw ArgumentError("trials must be at least 1");
  if (k < 1 || k >= num_papers) throw ArgumentError("k must satisfy 1 <= k < m");
  for (int t : tolerances) {
    if (t < 0) throw ArgumentError("tolerances must be non-negative");
  }
  if (algorithms.empty()) throw ArgumentError("no algorithms to compare");
}

std::vector<SweepRecord> RunRecoverySweep(const SweepConfig& config,
                                          const SimilarityMatrix& s) {
  const int n = s.num_reviewers();
  const int m = s.num_papers();
  config.Validate(m);
  const auto lc = LoadConstraints::Uniform(n, m, config.lambda, config.mu);

  // True top-k sets are shared by every algorithm and delta.
  std::vector<std::vector<int>> truth(config.trials);
  for (int t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng = SeededEngine(config.seed, t);
    auto order = Shuffled(m, rng);
    order.resize(config.k);
    std::sort(order.begin(), order.end());
    truth[t] = std::move(order);
  }

  std::vector<SweepRecord> records;
  for (Algorithm algorithm : config.algorithms) {
    Assignment a;
    std::string failure;
    try {
      a = RunAlgorithm(algorithm, s, lc, config.fairness, config.seed);
    } catch (const Error& e) {
      failure = e.what();
    }
    for (std::size_t d = 0; d < config.deltas.size(); ++d) {
      const double delta = config.deltas[d];
      std::vector<int> distance(config.trials, 0);
      if (failure.empty()) {
        for (int t = 0; t < config.trials; ++t) {
          ObjectiveWorld world{std::vector<double>(m, 1.0 - delta),
                               config.noise, config.k};
          for (int j : truth[t]) world.true_quality[j] = 1.0;
          const std::uint64_t stream =
              (static_cast<std::uint64_t>(d + 1) << 32) |
              static_cast<std::uint64_t>(t);
          const auto y = SampleObjective(world, a, s, config.seed, stream);
          const auto estimate = config.estimator == Estimator::kMle
                                    ? MleEstimate(y, s, config.noise)
                                    : MeanEstimate(y);
          distance[t] =
              HammingDistance(TopkSelect(estimate, config.k), truth[t]);
        }
      }
      std::vector<double> errors(config.trials);
      for (int t = 0; t < config.trials; ++t) {
        errors[t] = distance[t] / (2.0 * config.k);
      }
      const auto err = Summarize(errors);
      for (int tol : config.tolerances) {
        SweepRecord r;
        r.label = config.label;
        r.algorithm = AlgorithmName(algorithm);
        r.delta = delta;
        r.tolerance = tol;
        r.trials = config.trials;
        r.failure = failure;
        if (!failure.empty()) {
          r.mean_error = r.stderr_error = r.exceed = r.stderr_exceed = kNaN;
        } else {
          std::vector<double> exceed(config.trials);
          for (int t = 0; t < config.trials; ++t) {
            exceed[t] = distance[t] > 2 * tol ? 1.0 : 0.0;
          }
          const auto ex = Summarize(exceed);
          r.mean_error = err.mean;
          r.stderr_error = err.stderr_;
          r.exceed = ex.mean;
          r.stderr_exceed = ex.stderr_;
        }
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

void WriteSweepJsonl(const std::vector<SweepRecord>& records,
                     std::ostream& out) {
  for (const auto& r : records) {
    nlohmann::json j;
    j["case"] = r.label;
    j["algorithm"] = r.algorithm;
    j["delta"] = JsonNumber(r.delta);
    j["t"] = r.tolerance;
    j["trials"] = r.trials;
    j["mean"] = JsonNumber(r.mean_error);
    j["stderr"] = JsonNumber(r.stderr_error);
    j["exceed"] = JsonNumber(r.exceed);
    j["exceed_stderr"] = JsonNumber(r.stderr_exceed);
    if (!r.failure.empty()) j["failure"] = r.failure;
    out << j.dump() << '\n';
  }
}

void WriteSweepCsv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << "case,algorithm,delta,t,trials,mean,stderr,exceed,exceed_stderr\n";
  for (const auto& r : records) {
    out << r.label << ',' << r.algorithm << ',' << FormatNumber(r.delta) << ','
        << r.tolerance << ',' << r.trials << ',' << FormatNumber(r.mean_error)
        << ',' << FormatNumber(r.stderr_error) << ',' << FormatNumber(r.exceed)
        << ',' << FormatNumber(r.stderr_exceed) << '\n';
  }
}

std::vector<FairnessRow> FairnessReport(const SimilarityMatrix& s,
                                        const LoadConstraints& lc,
                                        const Transform& f,
                                        const std::vector<Algorithm>& algorithms,
                                        std::uint64_t seed) {
  std::vector<FairnessRow> rows;
  for (Algorithm algorithm : algorithms) {
    FairnessRow row;
    row.algorithm = AlgorithmName(algorithm);
    try {
      const Assignment a = RunAlgorithm(algorithm, s, lc, f, seed);
      row.fairness = Fairness(a, s, f);
      row.cumulative = CumulativeQuality(a, s);
      row.profile = PaperSumProfile(a, s, f);
    } catch (const Error& e) {
      row.failure = e.what();
      row.fairness = row.cumulative = kNaN;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteFairnessCsv(const std::vector<FairnessRow>& rows, std::ostream& out) {
  out << "algorithm,fairness,cumulative,failure\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << FormatNumber(r.fairness) << ','
        << FormatNumber(r.cumulative) << ',' << r.failure << '\n';
  }
}

void WriteFairnessJson(const std::vector<FairnessRow>& rows, std::ostream& out) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["fairness"] = JsonNumber(r.fairness);
    j["cumulative"] = JsonNumber(r.cumulative);
    j["profile"] = nlohmann::json::array();
    for (double v : r.profile) j["profile"].push_back(JsonNumber(v));
    if (!r.failure.empty()) j["failure"] = r.failure;
    all.push_back(std::move(j));
  }
  out << all.dump(2) << '\n';
}

int ResponseMatrix::num_regions() const {
  int regions = 0;
  for (int r : region) regions = std::max(regions, r + 1);
  return regions;
}

void ResponseMatrix::Validate(int gold) const {
  const int q = num_questions();
  if (static_cast<int>(correct.size()) != q ||
      static_cast<int>(region.size()) != q ||
      static_cast<int>(answers.size()) != num_workers()) {
    throw DimensionError("response matrix shapes disagree");
  }
  for (const auto& row : answers) {
    if (static_cast<int>(row.size()) != q) {
      throw DimensionError("ragged response matrix");
    }
  }
  if (gold < 1) throw ArgumentError("need at least one gold question");
  std::vector<int> per_region(num_regions(), 0);
  for (int r : region) {
    if (r < 0) throw ArgumentError("negative region");
    ++per_region[r];
  }
  for (int count : per_region) {
    if (count <= gold) {
      throw ArgumentError("every region needs more than " +
                          std::to_string(gold) + " questions");
    }
  }
}

ResponseMatrix ReadResponses(std::istream& responses, std::istream& key) {
  ResponseMatrix rm;
  std::map<std::string, int> question_index, worker_index, answer_code,
      region_code;
  auto code_of = [&](const std::string& label) {
    auto [it, added] =
        answer_code.emplace(label, static_cast<int>(rm.answer_labels.size()));
    if (added) rm.answer_labels.push_back(label);
    return it->second;
  };

  std::string line;
  int number = 0;
  auto next = [&](std::istream& in) {
    while (std::getline(in, line)) {
      ++number;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next(key)) throw ParseError("empty key file");
  while (next(key)) {
    const auto cells = SplitCsvLine(line);
    if (cells.size() != 3) {
      throw ParseError("key line " + std::to_string(number) +
                       ": expected question_id,region,correct_answer");
    }
    if (!question_index.emplace(cells[0], rm.num_questions()).second) {
      throw ParseError("key line " + std::to_string(number) +
                       ": duplicate question \"" + cells[0] + "\"");
    }
    rm.question_ids.push_back(cells[0]);
    rm.region.push_back(
        region_code.emplace(cells[1], static_cast<int>(region_code.size()))
            .first->second);
    rm.correct.push_back(code_of(cells[2]));
  }

  number = 0;
  if (!next(responses)) throw ParseError("empty responses file");
  while (next(responses)) {
    const auto cells = SplitCsvLine(line);
    const std::string where = "responses line " + std::to_string(number);
    if (cells.size() != 3) {
      throw ParseError(where + ": expected worker_id,question_id,answer");
    }
    const auto q = question_index.find(cells[1]);
    if (q == question_index.end()) {
      throw ParseError(where + ": question \"" + cells[1] + "\" not in key");
    }
    auto [w, added] = worker_index.emplace(cells[0], rm.num_workers());
    if (added) {
      rm.worker_ids.push_back(cells[0]);
      rm.answers.emplace_back(rm.num_questions(), ResponseMatrix::kNoAnswer);
    }
    int& slot = rm.answers[w->second][q->second];
    if (slot != ResponseMatrix::kNoAnswer) {
      throw ParseError(where + ": duplicate answer");
    }
    slot = code_of(cells[2]);
  }
  return rm;
}

void WriteResponses(const ResponseMatrix& rm, std::ostream& responses,
                    std::ostream& key) {
  // Region codes are written back as "r<code>".
  key << "question_id,region,correct_answer\n";
  for (int q = 0; q < rm.num_questions(); ++q) {
    key << rm.question_ids[q] << ",r" << rm.region[q] << ','
        << rm.answer_labels[rm.correct[q]] << '\n';
  }
  responses << "worker_id,question_id,answer\n";
  for (int w = 0; w < rm.num_workers(); ++w) {
    for (int q = 0; q < rm.num_questions(); ++q) {
      const int answer = rm.answers[w][q];
      if (answer == ResponseMatrix::kNoAnswer) continue;
      responses << rm.worker_ids[w] << ',' << rm.question_ids[q] << ','
                << rm.answer_labels[answer] << '\n';
    }
  }
}

ResponseMatrix SyntheticResponses(const CrowdProfile& profile,
                                  std::uint64_t seed) {
  if (profile.options < 2 || profile.regions < 1 ||
      profile.questions_per_region < 1) {
    throw ArgumentError("crowd profile needs >= 2 options and >= 1 question");
  }
  std::mt19937_64 rng = SeededEngine(seed, 0x43524f57);
  ResponseMatrix rm;
  for (int o = 0; o < profile.options; ++o) {
    rm.answer_labels.push_back("a" + std::to_string(o));
  }
  std::uniform_int_distribution<int> option(0, profile.options - 1);
  std::uniform_int_distribution<int> wrong(0, profile.options - 2);
  for (int r = 0; r < profile.regions; ++r) {
    for (int k = 0; k < profile.questions_per_region; ++k) {
      rm.question_ids.push_back("q" + std::to_string(rm.num_questions()));
      rm.region.push_back(r);
      rm.correct.push_back(option(rng));
    }
  }
  for (std::size_t w = 0; w < profile.worker_accuracy.size(); ++w) {
    rm.worker_ids.push_back("w" + std::to_string(w));
    std::bernoulli_distribution right(profile.worker_accuracy[w]);
    std::vector<int> row(rm.num_questions());
    for (int q = 0; q < rm.num_questions(); ++q) {
      if (right(rng)) {
        row[q] = rm.correct[q];
      } else {
        const int pick = wrong(rng);
        row[q] = pick < rm.correct[q] ? pick : pick + 1;
      }
    }
    rm.answers.push_back(std::move(row));
  }
  return rm;
}

std::optional<int> MajorityVote(const std::vector<int>& answers) {
  std::map<int, int> count;
  for (int a : answers) {
    if (a != ResponseMatrix::kNoAnswer) ++count[a];
  }
  std::optional<int> best;
  int best_count = 0;
  bool shared = false;
  for (auto [answer, c] : count) {
    if (c > best_count) {
      best = answer;
      best_count = c;
      shared = false;
    } else if (c == best_count) {
      shared = true;
    }
  }
  if (shared) return std::nullopt;
  return best;
}

CrowdResult CrowdEval(const ResponseMatrix& rm, const CrowdConfig& config) {
  rm.Validate(config.gold_per_region);
  if (config.trials < 1) throw ArgumentError("trials must be at least 1");
  if (config.sample_workers < 2 || config.sample_workers > rm.num_workers()) {
    throw ArgumentError("worker sample must be in [2, number of workers]");
  }
  const int regions = rm.num_regions();
  std::vector<std::vector<int>> region_questions(regions);
  for (int q = 0; q < rm.num_questions(); ++q) {
    region_questions[rm.region[q]].push_back(q);
  }
  const int unresolved = rm.num_questions() - regions * config.gold_per_region;
  const int n = config.sample_workers;
  const auto lc = LoadConstraints::Uniform(n, unresolved, config.lambda,
                                           config.mu);
  lc.Validate(n, unresolved);

  const std::size_t num_algorithms = config.algorithms.size();
  CrowdResult result;
  result.per_trial_error.assign(num_algorithms,
                                std::vector<double>(config.trials, kNaN));
  std::vector<std::vector<double>> fairness(num_algorithms),
      cumulative(num_algorithms);

  for (int t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng = SeededEngine(config.seed, t);
    // Gold / unresolved split per region.
    std::vector<std::vector<int>> gold(regions);
    std::vector<int> papers;  // unresolved question ids
    for (int r = 0; r < regions; ++r) {
      std::vector<int> qs = region_questions[r];
      std::shuffle(qs.begin(), qs.end(), rng);
      gold[r].assign(qs.begin(), qs.begin() + config.gold_per_region);
      std::vector<int> rest(qs.begin() + config.gold_per_region, qs.end());
      std::sort(rest.begin(), rest.end());
      papers.insert(papers.end(), rest.begin(), rest.end());
    }
    auto workers = Shuffled(rm.num_workers(), rng);
    workers.resize(n);
    std::sort(workers.begin(), workers.end());

    std::vector<std::vector<double>> rows(n,
                                          std::vector<double>(papers.size()));
    for (int i = 0; i < n; ++i) {
      std::vector<double> region_score(regions);
      for (int r = 0; r < regions; ++r) {
        int right = 0;
        for (int q : gold[r]) right += rm.answers[workers[i]][q] == rm.correct[q];
        region_score[r] = static_cast<double>(right) / config.gold_per_region;
      }
      for (std::size_t p = 0; p < papers.size(); ++p) {
        rows[i][p] = region_score[rm.region[papers[p]]];
      }
    }
    const auto s = SimilarityMatrix::FromRows(rows);
    const std::uint64_t algorithm_seed =
        SeededEngine(config.seed, 0x5EED0000ULL + t)();

    for (std::size_t k = 0; k < num_algorithms; ++k) {
      Assignment a;
      try {
        a = RunAlgorithm(config.algorithms[k], s, lc, Transform::Identity(),
                         algorithm_seed);
      } catch (const Error&) {
        continue;
      }
      int mistakes = 0;
      for (std::size_t p = 0; p < papers.size(); ++p) {
        std::vector<int> votes;
        for (int i : a.ReviewersOf(static_cast<int>(p))) {
          votes.push_back(rm.answers[workers[i]][papers[p]]);
        }
        const auto vote = MajorityVote(votes);
        if (!vote || *vote != rm.correct[papers[p]]) ++mistakes;
      }
      result.per_trial_error[k][t] =
          static_cast<double>(mistakes) / static_cast<double>(papers.size());
      fairness[k].push_back(Fairness(a, s, Transform::Identity()));
      cumulative[k].push_back(CumulativeQuality(a, s));
    }
  }

  for (std::size_t k = 0; k < num_algorithms; ++k) {
    CrowdRow row;
    row.algorithm = AlgorithmName(config.algorithms[k]);
    std::vector<double> ok;
    for (double e : result.per_trial_error[k]) {
      if (!std::isnan(e)) ok.push_back(e);
    }
    row.trials = static_cast<int>(ok.size());
    row.failures = config.trials - row.trials;
    if (ok.empty()) {
      row.mean_error = row.stderr_error = row.mean_fairness =
          row.mean_cumulative = kNaN;
    } else {
      const auto err = Summarize(ok);
      row.mean_error = err.mean;
      row.stderr_error = err.stderr_;
      row.mean_fairness = Summarize(fairness[k]).mean;
      row.mean_cumulative = Summarize(cumulative[k]).mean;
    }
    result.rows.push_back(row);
  }
  return result;
}

void WriteCrowdCsv(const CrowdResult& result, std::ostream& out) {
  out << "algorithm,trials,failures,mean_error,stderr,mean_fairness,"
         "mean_cumulative\n";
  for (const auto& r : result.rows) {
    out << r.algorithm << ',' << r.trials << ',' << r.failures << ','
        << FormatNumber(r.mean_error) << ',' << FormatNumber(r.stderr_error)
        << ',' << FormatNumber(r.mean_fairness) << ','
        << FormatNumber(r.mean_cumulative) << '\n';
  }
}

}  // namespace pr4a
