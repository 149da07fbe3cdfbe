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

#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "pr4a/assign.h"
#include "pr4a/baselines.h"
#include "pr4a/experiments.h"

namespace pr4a {
namespace {

const Transform kInverse = Transform::InverseNoise(NoiseModel::OneMinusS());

TEST_CASE("generate_case C1 and C3 blocks") {
  const auto c1 = GenerateCase({CaseId::kC1, 100, 100}, 0);
  CHECK(c1.num_reviewers() == 100);
  CHECK(c1.num_papers() == 100);
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double expected =
          i < 80 ? (j < 80 ? 0.9 : 0.5) : (j < 80 ? 0.5 : 0.15);
      REQUIRE(c1.at(i, j) == expected);
    }
  }
  CHECK(GenerateCase({CaseId::kC1, 100, 100}, 99) == c1);

  const auto c3 = GenerateCase({CaseId::kC3, 100, 100}, 0);
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      double expected = 0.9;
      if (i < 10) expected = j < 60 ? 0.98 : 0.9;
      else if (i < 60) expected = j < 60 ? 0.0 : 0.7;
      REQUIRE(c3.at(i, j) == expected);
    }
  }

  const auto small = GenerateCase({CaseId::kC1, 20, 20}, 0);
  CHECK(small.at(15, 15) == 0.9);
  CHECK(small.at(16, 16) == 0.15);
  CHECK(small.at(16, 0) == 0.5);
  CHECK_THROWS_AS(GenerateCase({CaseId::kC3, 4, 4}, 0), ArgumentError);
  CHECK(ParseCaseId("c3") == CaseId::kC3);
  CHECK_THROWS_AS(ParseCaseId("C4"), ArgumentError);
}

TEST_CASE("generate_case random cases") {
  // C5: zero with probability 0.8, otherwise within [0.1, 0.9].
  long zeros = 0, cells = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = GenerateCase({CaseId::kC5, 100, 100}, seed);
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const double v = s.at(i, j);
        ++cells;
        if (v == 0.0) {
          ++zeros;
        } else {
          REQUIRE(v >= 0.1);
          REQUIRE(v <= 0.9);
        }
      }
    }
  }
  CHECK(std::abs(static_cast<double>(zeros) / cells - 0.8) <= 0.01);

  // C2: 0.8 + 0.2 Beta(1, 3) has mean 0.85 and sd 0.2 * sqrt(3 / 80).
  const auto c2 = GenerateCase({CaseId::kC2, 100, 100}, 4);
  CHECK(c2 == GenerateCase({CaseId::kC2, 100, 100}, 4));
  CHECK_FALSE(c2 == GenerateCase({CaseId::kC2, 100, 100}, 5));
  double strong = 0.0, weak = 0.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double v = c2.at(i, j);
      if (i < 25) {
        REQUIRE(v >= 0.8);
        REQUIRE(v <= 1.0);
        strong += v;
      } else {
        REQUIRE(v >= 0.1);
        REQUIRE(v <= 0.3);
        weak += v;
      }
    }
  }
  const double sd = 0.2 * std::sqrt(3.0 / 80.0);
  CHECK(std::abs(strong / 2500 - 0.85) <= 4 * sd / std::sqrt(2500.0));
  CHECK(std::abs(weak / 7500 - 0.15) <= 4 * sd / std::sqrt(7500.0));
}

TEST_CASE("fairness_report") {
  const auto c1 = GenerateCase({CaseId::kC1, 100, 100}, 0);
  const auto lc = LoadConstraints::Uniform(100, 100, 4, 4);
  const auto rows = FairnessReport(
      c1, lc, kInverse, {Algorithm::kPr4a, Algorithm::kTpms}, 0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].algorithm == "pr4a");
  CHECK(rows[0].fairness == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(rows[0].cumulative == doctest::Approx(296.0));
  CHECK(rows[1].fairness == doctest::Approx(4.0 / 0.85).epsilon(1e-9));
  CHECK(rows[1].cumulative == doctest::Approx(300.0));
  CHECK(rows[0].profile.size() == 100);
  CHECK(rows[0].profile.front() == rows[0].fairness);

  // Constant matrix: every algorithm gets lambda f(c).
  const auto flat = SimilarityMatrix::Constant(6, 6, 0.5);
  const auto flat_lc = LoadConstraints::Uniform(6, 6, 2, 2);
  for (const auto& row : FairnessReport(
           flat, flat_lc, kInverse,
           {Algorithm::kPr4a, Algorithm::kTpms, Algorithm::kHartvigsen,
            Algorithm::kRandom, Algorithm::kOracle},
           3)) {
    CHECK(row.failure.empty());
    CHECK(row.fairness == doctest::Approx(4.0));
  }

  // Failures are recorded, not thrown.
  const auto failed = FairnessReport(c1, lc, kInverse, {Algorithm::kOracle}, 0);
  CHECK_FALSE(failed[0].failure.empty());
  CHECK(std::isnan(failed[0].fairness));

  std::ostringstream csv;
  WriteFairnessCsv(rows, csv);
  CHECK(csv.str().rfind("algorithm,fairness,cumulative,failure\npr4a,8,296,\n",
                        0) == 0);
}

SweepConfig SmallSweep() {
  SweepConfig c;
  c.label = "C1";
  c.deltas = {0.5, 1.0, 2.0};
  c.trials = 200;
  c.k = 4;
  c.tolerances = {0, 1, 2};
  c.seed = 17;
  return c;
}

TEST_CASE("recovery sweep layout and determinism") {
  const auto s = GenerateCase({CaseId::kC1, 20, 20}, 0);
  auto config = SmallSweep();
  config.algorithms = {Algorithm::kPr4a, Algorithm::kTpms, Algorithm::kOracle};
  const auto records = RunRecoverySweep(config, s);
  REQUIRE(records.size() == 3 * 3 * 3);
  CHECK(records[0].algorithm == "pr4a");
  CHECK(records[0].delta == 0.5);
  CHECK(records[1].tolerance == 1);
  CHECK(records[3].delta == 1.0);
  // Oracle cannot run at 20 x 20: recorded per cell.
  CHECK(records.back().algorithm == "oracle");
  CHECK_FALSE(records.back().failure.empty());
  CHECK(std::isnan(records.back().mean_error));

  std::ostringstream a, b;
  WriteSweepJsonl(records, a);
  WriteSweepJsonl(RunRecoverySweep(config, s), b);
  CHECK(a.str() == b.str());

  // Exceedance probability cannot grow with the tolerance.
  for (std::size_t r = 0; r + 2 < 18; r += 3) {
    CHECK(records[r].exceed >= records[r + 1].exceed);
    CHECK(records[r + 1].exceed >= records[r + 2].exceed);
    CHECK(records[r].mean_error == records[r + 1].mean_error);
  }

  config.deltas.clear();
  CHECK_THROWS_AS(RunRecoverySweep(config, s), ArgumentError);
  config.deltas = {0.0};
  CHECK_THROWS_AS(RunRecoverySweep(config, s), ArgumentError);
}

TEST_CASE("recovery sweep extremes") {
  const auto s = GenerateCase({CaseId::kC1, 20, 20}, 0);
  const auto lc = LoadConstraints::Uniform(20, 20, 4, 4);
  const auto pr4a = PeerReview4All(s, lc, kInverse).assignment;
  // The error fraction never exceeds the misrecovery probability, which the
  // bound caps at about 0.02 for delta = 2.
  const double bound = TopKErrorBound(pr4a, s, NoiseModel::OneMinusS(),
                                      Estimator::kMle, 4, 2.0);
  REQUIRE(bound < 0.03);

  auto config = SmallSweep();
  config.algorithms = {Algorithm::kPr4a};
  config.deltas = {1e-9, 2.0};
  config.tolerances = {0};
  const auto records = RunRecoverySweep(config, s);
  // Indistinguishable scores: a random k-subset misses 1 - k/m on average.
  CHECK(std::abs(records[0].mean_error - (1.0 - 4.0 / 20.0)) <=
        4 * records[0].stderr_error + 0.02);
  CHECK(records[1].exceed <= bound + 3 * records[1].stderr_exceed);
  CHECK(records[1].mean_error <= records[1].exceed);
  CHECK(records[1].mean_error < 0.01);
}

TEST_CASE("majority vote") {
  CHECK(MajorityVote({0, 0, 1}) == 0);
  CHECK(MajorityVote({0, 1, 2}) == std::nullopt);
  CHECK(MajorityVote({2, 2, 1, 1}) == std::nullopt);
  CHECK(MajorityVote({ResponseMatrix::kNoAnswer, 3}) == 3);
  CHECK(MajorityVote({}) == std::nullopt);
}

// Three questions per region; worker w answers question q with code
// answer(w, q).
ResponseMatrix TinyCrowd(int workers, int (*answer)(int, int)) {
  ResponseMatrix rm;
  rm.answer_labels = {"A", "B", "C"};
  for (int q = 0; q < 6; ++q) {
    rm.question_ids.push_back("q" + std::to_string(q));
    rm.region.push_back(q / 3);
    rm.correct.push_back(0);
  }
  for (int w = 0; w < workers; ++w) {
    rm.worker_ids.push_back("w" + std::to_string(w));
    std::vector<int> row(6);
    for (int q = 0; q < 6; ++q) row[q] = answer(w, q);
    rm.answers.push_back(row);
  }
  return rm;
}

TEST_CASE("crowd_eval") {
  CrowdConfig config;
  config.gold_per_region = 2;
  config.sample_workers = 6;
  config.lambda = 3;
  config.mu = 1;
  config.trials = 20;

  const auto unanimous = TinyCrowd(6, [](int, int) { return 0; });
  auto result = CrowdEval(unanimous, config);
  for (const auto& row : result.rows) {
    CHECK(row.failures == 0);
    CHECK(row.mean_error == 0.0);
  }

  // Three workers answering A, B and C everywhere: every unresolved question
  // is a three-way tie and counts as a mistake.
  ResponseMatrix three = TinyCrowd(3, [](int w, int) { return w; });
  config.sample_workers = 3;
  config.lambda = 3;
  config.mu = 2;
  config.algorithms = {Algorithm::kPr4a, Algorithm::kRandom};
  result = CrowdEval(three, config);
  for (const auto& row : result.rows) CHECK(row.mean_error == 1.0);

  config.sample_workers = 4;
  CHECK_THROWS_AS(CrowdEval(three, config), ArgumentError);
  config.sample_workers = 3;
  config.gold_per_region = 3;
  CHECK_THROWS_AS(CrowdEval(three, config), ArgumentError);
}

TEST_CASE("responses CSV round trip") {
  CrowdProfile profile;
  profile.worker_accuracy = {1.0, 0.0, 0.5};
  profile.regions = 2;
  profile.questions_per_region = 3;
  const auto rm = SyntheticResponses(profile, 1);
  CHECK(rm.num_workers() == 3);
  CHECK(rm.num_questions() == 6);
  for (int q = 0; q < 6; ++q) {
    CHECK(rm.answers[0][q] == rm.correct[q]);
    CHECK(rm.answers[1][q] != rm.correct[q]);
  }

  std::ostringstream responses, key;
  WriteResponses(rm, responses, key);
  std::istringstream rin(responses.str()), kin(key.str());
  const auto back = ReadResponses(rin, kin);
  CHECK(back.worker_ids == rm.worker_ids);
  CHECK(back.question_ids == rm.question_ids);
  CHECK(back.region == rm.region);
  for (int w = 0; w < 3; ++w) {
    for (int q = 0; q < 6; ++q) {
      CHECK(back.answer_labels[back.answers[w][q]] ==
            rm.answer_labels[rm.answers[w][q]]);
    }
  }

  std::istringstream bad_r("worker_id,question_id,answer\nw0,q9,a1\n");
  std::istringstream bad_k("question_id,region,correct_answer\nq0,r0,a1\n");
  CHECK_THROWS_AS(ReadResponses(bad_r, bad_k), ParseError);
}

TEST_CASE("crowd ordering on a strong/weak corpus") {
  CrowdProfile profile;
  profile.worker_accuracy.assign(25, 0.95);
  profile.worker_accuracy.resize(80, 0.25);
  const auto rm = SyntheticResponses(profile, 8);
  CrowdConfig config;
  config.trials = 150;
  config.seed = 2;
  config.algorithms = {Algorithm::kPr4a, Algorithm::kRandom};
  const auto result = CrowdEval(rm, config);
  const auto& pr4a = result.rows[0];
  const auto& random = result.rows[1];
  CHECK(pr4a.trials == 150);
  CHECK(random.mean_error - pr4a.mean_error >=
        3 * std::hypot(pr4a.stderr_error, random.stderr_error));
  CHECK(pr4a.mean_fairness > random.mean_fairness);
}

}  // namespace
}  // namespace pr4a
