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

// Synthetic similarity cases, the Monte Carlo top-k recovery sweep, the
// fairness/cumulative comparison table, and a crowdsourcing evaluation
// harness in which workers play reviewers and quiz questions play papers.

#ifndef PR4A_EXPERIMENTS_H_
#define PR4A_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pr4a/core.h"
#include "pr4a/statmodel.h"

namespace pr4a {

enum class Algorithm { kPr4a, kTpms, kHartvigsen, kRandom, kOracle };

// "pr4a", "tpms", "hartvigsen", "random", "oracle".
Algorithm ParseAlgorithm(const std::string& name);
std::string AlgorithmName(Algorithm algorithm);

// Runs one assignment algorithm. `f` is the fairness transform used by pr4a
// and the oracle; `seed` only affects random.
Assignment RunAlgorithm(Algorithm algorithm, const SimilarityMatrix& s,
                        const LoadConstraints& lc, const Transform& f,
                        std::uint64_t seed);

// Block-structured test matrices, scaled proportionally from 100 x 100:
//   C1  80 experts at 0.9 on 80 mainstream papers, 0.5 elsewhere, 0.15 for
//       the 20 weak reviewers on the 20 niche papers.
//   C2  25 strong reviewers at 0.8 + 0.2 Beta(1, 3), 75 weak at
//       0.1 + 0.2 Beta(1, 3).
//   C3  10 reviewers at 0.98 / 0.9, 50 at 0 / 0.7, 40 at 0.9, over a 60 / 40
//       column split.
//   C5  each entry 0 with probability 0.8, otherwise uniform on [0.1, 0.9].
enum class CaseId { kC1, kC2, kC3, kC5 };

struct CaseSpec {
  CaseId id = CaseId::kC1;
  int num_reviewers = 100;
  int num_papers = 100;
};

// "C1", "C2", "C3", "C5" (case-insensitive).
CaseId ParseCaseId(const std::string& name);
std::string CaseName(CaseId id);

// C1 and C3 ignore the seed. Throws ArgumentError if a block would be empty.
SimilarityMatrix GenerateCase(const CaseSpec& spec, std::uint64_t seed);

struct SweepConfig {
  std::string label = "custom";
  std::vector<double> deltas;
  int trials = 1000;
  int k = 4;
  int lambda = 4;
  int mu = 4;
  Estimator estimator = Estimator::kMle;
  NoiseModel noise = NoiseModel::OneMinusS();
  // Transform optimized by pr4a and the oracle.
  Transform fairness = Transform::InverseNoise(NoiseModel::OneMinusS());
  std::vector<Algorithm> algorithms = {Algorithm::kPr4a, Algorithm::kTpms};
  // Hamming tolerances t; a trial exceeds t when |T Δ T*| > 2t.
  std::vector<int> tolerances = {0};
  std::uint64_t seed = 0;

  // Throws ArgumentError on an empty grid, non-positive delta, trials < 1,
  // negative tolerance or k outside [1, m).
  void Validate(int num_papers) const;
};

struct SweepRecord {
  std::string label;
  std::string algorithm;
  double delta = 0.0;
  int tolerance = 0;
  int trials = 0;
  // Mean of |T Δ T*| / (2k) over trials and its standard error.
  double mean_error = 0.0;
  double stderr_error = 0.0;
  // Fraction of trials with |T Δ T*| > 2t and its standard error.
  double exceed = 0.0;
  double stderr_exceed = 0.0;
  // Non-empty when the algorithm failed on this instance; numbers are NaN.
  std::string failure;
};

// For each algorithm (one assignment per instance), each delta and each
// trial: pick k true-best papers at random (quality 1, the rest 1 - delta),
// draw scores under the assignment, estimate, take the top k and compare.
// Trial t uses SeededEngine(seed, t) for the true set, shared by every
// algorithm and delta; score noise uses stream (delta index + 1) << 32 | t.
// Records are ordered by algorithm, then delta, then tolerance.
std::vector<SweepRecord> RunRecoverySweep(const SweepConfig& config,
                                          const SimilarityMatrix& s);

void WriteSweepJsonl(const std::vector<SweepRecord>& records, std::ostream& out);
void WriteSweepCsv(const std::vector<SweepRecord>& records, std::ostream& out);

struct FairnessRow {
  std::string algorithm;
  double fairness = 0.0;
  double cumulative = 0.0;
  // Per-paper sums of f, ascending.
  std::vector<double> profile;
  std::string failure;  // non-empty if the algorithm failed
};

std::vector<FairnessRow> FairnessReport(const SimilarityMatrix& s,
                                        const LoadConstraints& lc,
                                        const Transform& f,
                                        const std::vector<Algorithm>& algorithms,
                                        std::uint64_t seed);

void WriteFairnessCsv(const std::vector<FairnessRow>& rows, std::ostream& out);
void WriteFairnessJson(const std::vector<FairnessRow>& rows, std::ostream& out);

// Categorical answers of workers to questions. Answers are small integer
// codes; kNoAnswer marks a skipped question.
struct ResponseMatrix {
  static constexpr int kNoAnswer = -1;

  std::vector<std::string> worker_ids;
  std::vector<std::string> question_ids;
  std::vector<std::vector<int>> answers;  // worker x question
  std::vector<int> correct;               // per question
  std::vector<int> region;                // per question, 0-based
  std::vector<std::string> answer_labels; // code -> text

  int num_workers() const { return static_cast<int>(worker_ids.size()); }
  int num_questions() const { return static_cast<int>(question_ids.size()); }
  int num_regions() const;
  // Throws ArgumentError unless every region holds more than `gold` questions
  // and all shapes agree.
  void Validate(int gold) const;
};

// Responses CSV `worker_id,question_id,answer` and key CSV
// `question_id,region,correct_answer`, both with a header row. Throws
// ParseError naming the offending line.
ResponseMatrix ReadResponses(std::istream& responses, std::istream& key);
void WriteResponses(const ResponseMatrix& rm, std::ostream& responses,
                    std::ostream& key);

// Workers answer each question correctly with their own accuracy and
// otherwise pick one of the wrong options uniformly.
struct CrowdProfile {
  std::vector<double> worker_accuracy;
  int regions = 6;
  int questions_per_region = 10;
  int options = 5;
};
ResponseMatrix SyntheticResponses(const CrowdProfile& profile,
                                  std::uint64_t seed);

// The unique most frequent answer, or nullopt when the top count is shared
// or nobody answered.
std::optional<int> MajorityVote(const std::vector<int>& answers);

struct CrowdConfig {
  int lambda = 3;
  int mu = 2;
  int sample_workers = 40;
  int gold_per_region = 8;
  int trials = 1000;
  std::vector<Algorithm> algorithms = {Algorithm::kPr4a, Algorithm::kTpms,
                                       Algorithm::kHartvigsen,
                                       Algorithm::kRandom};
  std::uint64_t seed = 0;
};

struct CrowdRow {
  std::string algorithm;
  int trials = 0;    // successful trials
  int failures = 0;  // trials where the algorithm threw
  double mean_error = 0.0;
  double stderr_error = 0.0;
  double mean_fairness = 0.0;
  double mean_cumulative = 0.0;
};

struct CrowdResult {
  std::vector<CrowdRow> rows;
  // per_trial_error[a][t]: error fraction of algorithm a in trial t, NaN on
  // failure. Trials share splits and worker samples across algorithms.
  std::vector<std::vector<double>> per_trial_error;
};

// Per trial: split each region's questions into gold and unresolved at
// random, set similarity to the fraction of the region's gold questions a
// worker got right, sample workers, assign the unresolved questions with
// identity fairness, and majority-vote each one (ties count as errors).
// Throws ArgumentError if the split or worker sample is impossible.
CrowdResult CrowdEval(const ResponseMatrix& rm, const CrowdConfig& config);

void WriteCrowdCsv(const CrowdResult& result, std::ostream& out);

}  // namespace pr4a

#endif  // PR4A_EXPERIMENTS_H_
