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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "pr4a/core.h"

namespace pr4a {
namespace {

Assignment FromPairs(int n, int m, std::vector<std::pair<int, int>> pairs) {
  Assignment a(n, m);
  for (auto [i, j] : pairs) a.Assign(i, j);
  return a;
}

TEST_CASE("similarity matrix validates shape and range") {
  CHECK_THROWS_AS(SimilarityMatrix::FromRows({{0.5, 0.5}}), ArgumentError);
  CHECK_THROWS_AS(SimilarityMatrix::FromRows({{0.5}, {0.5}}), ArgumentError);
  CHECK_THROWS_AS(SimilarityMatrix::FromRows({{0.5, 0.5}, {0.5}}),
                  DimensionError);
  CHECK_THROWS_AS(SimilarityMatrix::FromRows({{0.5, 1.2}, {0.5, 0.5}}),
                  ArgumentError);
  CHECK_THROWS_AS(SimilarityMatrix::FromRows({{0.5, -0.1}, {0.5, 0.5}}),
                  ArgumentError);
  CHECK_THROWS_AS(SimilarityMatrix::FromRows({{0.5, NAN}, {0.5, 0.5}}),
                  ArgumentError);

  const auto s = SimilarityMatrix::FromRows({{0.1, 0.9}, {0.4, 0.3}}, {{0, 1}});
  CHECK(s.is_conflict(0, 1));
  CHECK_FALSE(s.is_conflict(0, 0));
  CHECK(s.MaxEntry() == 0.4);
  CHECK(s.MinEntry() == 0.1);
  const auto masked = s.WithConflicts(std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(masked.NumConflicts() == 2);
  CHECK(s.NumConflicts() == 1);
}

TEST_CASE("validate_assignment reports each violated constraint") {
  const auto s = fixtures::ThreeByThree();
  const auto lc = LoadConstraints::Uniform(3, 3, 1, 1);
  CHECK(ValidateAssignment(FromPairs(3, 3, {{0, 0}, {1, 1}, {2, 2}}), s, lc)
            .ok());

  const auto unmet =
      ValidateAssignment(FromPairs(3, 3, {{1, 1}, {2, 2}}), s, lc);
  REQUIRE(unmet.violations.size() == 1);
  CHECK(unmet.violations[0].kind == Violation::Kind::kDemandUnmet);
  CHECK(unmet.violations[0].paper == 0);
  CHECK(unmet.Summary().find("paper 0 demand unmet") != std::string::npos);

  const auto over =
      ValidateAssignment(FromPairs(3, 3, {{0, 0}, {0, 1}, {2, 2}}), s, lc);
  CHECK(std::any_of(over.violations.begin(), over.violations.end(),
                    [](const Violation& v) {
                      return v.kind == Violation::Kind::kCapacityExceeded &&
                             v.reviewer == 0;
                    }));

  const auto conflicted = s.WithConflicts(
      std::vector<std::pair<int, int>>{{0, 0}});
  const auto bad = ValidateAssignment(
      FromPairs(3, 3, {{0, 0}, {1, 1}, {2, 2}}), conflicted, lc);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == Violation::Kind::kConflictAssigned);
  CHECK(bad.Summary().find("conflict assigned") != std::string::npos);

  CHECK_THROWS_AS(ValidateAssignment(Assignment(2, 3), s, lc), DimensionError);
  CHECK_THROWS_AS(
      ValidateAssignment(Assignment(3, 3), s,
                         LoadConstraints::Uniform(3, 2, 1, 1)),
      DimensionError);
}

TEST_CASE("fairness and cumulative quality on the three-paper example") {
  const auto s = fixtures::ThreeByThree();
  const auto fair = FromPairs(3, 3, {{0, 0}, {1, 2}, {2, 1}});
  const auto greedy = FromPairs(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  const auto id = Transform::Identity();
  CHECK(Fairness(fair, s, id) == 0.2);
  CHECK(Fairness(greedy, s, id) == 0.0);
  CHECK(CumulativeQuality(greedy, s) == doctest::Approx(1.5));
  CHECK(CumulativeQuality(fair, s) == doctest::Approx(1.45));
  CHECK(PaperSumProfile(fair, s, id) == std::vector<double>{0.2, 0.25, 1.0});
  CHECK(PaperSumProfile(greedy, s, id) == std::vector<double>{0.0, 0.5, 1.0});

  const auto conflicted = s.WithConflicts(
      std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(Fairness(fair, conflicted, id), InvalidAssignmentError);
  CHECK_THROWS_AS(CumulativeQuality(fair, conflicted), InvalidAssignmentError);
}

TEST_CASE("uniform matrix gives lambda * c everywhere") {
  const auto s = SimilarityMatrix::Constant(4, 4, 0.35);
  const auto a = FromPairs(4, 4, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2},
                                  {3, 2}, {3, 3}, {0, 3}});
  CHECK(Fairness(a, s, Transform::Identity()) == doctest::Approx(0.7));
  for (double v : PaperSumProfile(a, s, Transform::Identity())) {
    CHECK(v == doctest::Approx(0.7));
  }
  CHECK(CumulativeQuality(a, SimilarityMatrix::Constant(4, 4, 0.0)) == 0.0);
}

TEST_CASE("transforms") {
  const auto inv = Transform::Parse("inverse-one-minus-s");
  CHECK(inv(0.5) == 2.0);
  CHECK(inv(1.0) == kInfinity);
  CHECK(inv(0.85) == doctest::Approx(1.0 / 0.15));
  const auto thr = Transform::Parse("threshold:0.5");
  CHECK(thr(0.5) == 0.0);
  CHECK(thr(0.51) == 1.0);
  const auto omh = Transform::Parse("one-minus-h", NoiseModel::Constant(0.3));
  CHECK(omh(0.0) == doctest::Approx(0.7));
  CHECK(Transform::Parse("one-minus-h")(0.4) == doctest::Approx(0.4));
  CHECK(Transform::Parse("identity")(0.37) == 0.37);
  CHECK_THROWS_AS(Transform::Parse("square"), ParseError);
  CHECK_THROWS_AS(Transform::Parse("threshold:abc"), ParseError);
  CHECK(Transform::Parse("threshold:0.25").Name() == "threshold:0.25");

  // Monotone non-decreasing and non-negative on a grid.
  for (const auto& f : {Transform::Identity(), inv, thr, omh}) {
    double prev = -1.0;
    for (int k = 0; k <= 100; ++k) {
      const double v = f(k / 100.0);
      CHECK(v >= 0.0);
      CHECK(v >= prev);
      prev = v;
    }
  }

  // +inf propagates through sums.
  const auto s = SimilarityMatrix::FromRows({{1.0, 0.5}, {0.5, 1.0}});
  const auto a = FromPairs(2, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(Fairness(a, s, inv) == kInfinity);
}

TEST_CASE("noise model") {
  const auto h = NoiseModel::OneMinusS();
  CHECK(h.h(0.25) == 0.75);
  CHECK(h.h(1.0) == 0.0);
  CHECK(h.EffectiveVariance(1.0) == NoiseModel::kDefaultVarianceFloor);
  CHECK(NoiseModel::Parse("constant:0.5").h(0.9) == 0.5);
  CHECK(NoiseModel::Parse("scaled-one-minus-s:2").h(0.75) == 0.5);
  CHECK(NoiseModel::Parse("scaled-one-minus-s:2").Name() ==
        "scaled-one-minus-s:2");
  CHECK_THROWS_AS(NoiseModel::Parse("cubic"), ParseError);
  CHECK_THROWS_AS(NoiseModel::Constant(-1.0), ArgumentError);
  CHECK(h.WithVarianceFloor(1e-3).EffectiveVariance(0.9999) == 1e-3);
}

TEST_CASE("load constraints") {
  auto lc = LoadConstraints::Uniform(3, 4, 2, 3);
  CHECK(lc.TotalDemand() == 8);
  CHECK(lc.IsUniformDemand());
  lc.Validate(3, 4);
  CHECK_THROWS_AS(lc.Validate(3, 3), DimensionError);
  CHECK_THROWS_AS(LoadConstraints::Uniform(3, 4, 4, 9).Validate(3, 4),
                  ArgumentError);
  CHECK_THROWS_AS(LoadConstraints::Uniform(3, 4, 2, 2).Validate(3, 4),
                  ArgumentError);
  lc.paper_demand[1] = 1;
  CHECK_FALSE(lc.IsUniformDemand());
  CHECK(lc.MaxDemand() == 2);
}

TEST_CASE("hamming distance") {
  CHECK(HammingDistance(std::vector{1, 2, 3}, std::vector{1, 2, 3}) == 0);
  CHECK(HammingDistance(std::vector{1, 2}, std::vector{2, 3}) == 2);
  CHECK(HammingDistance(std::vector{0, 1, 2}, std::vector{3, 4, 5}) == 6);
  CHECK(HammingDistance(std::vector<int>{}, std::vector<int>{}) == 0);

  // Metric axioms on random subsets of [8].
  std::mt19937_64 rng(7);
  auto subset = [&] {
    std::vector<int> out;
    for (int k = 0; k < 8; ++k) {
      if (rng() & 1) out.push_back(k);
    }
    return out;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = subset(), b = subset(), c = subset();
    CHECK(HammingDistance(a, a) == 0);
    CHECK(HammingDistance(a, b) == HammingDistance(b, a));
    CHECK(HammingDistance(a, c) <=
          HammingDistance(a, b) + HammingDistance(b, c));
    if (a != b) CHECK(HammingDistance(a, b) > 0);
  }
}

TEST_CASE("fairness properties on random assignments") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5, m = 4;
    std::vector<std::vector<double>> rows(n, std::vector<double>(m));
    for (auto& row : rows) {
      for (double& v : row) v = unit(rng);
    }
    const auto s = SimilarityMatrix::FromRows(rows);
    Assignment a(n, m);
    for (int j = 0; j < m; ++j) {
      std::vector<int> order{0, 1, 2, 3, 4};
      std::shuffle(order.begin(), order.end(), rng);
      a.Assign(order[0], j);
      a.Assign(order[1], j);
    }
    for (const auto& f :
         {Transform::Identity(), Transform::Parse("inverse-one-minus-s")}) {
      const auto profile = PaperSumProfile(a, s, f);
      CHECK(profile.front() == Fairness(a, s, f));
      CHECK(std::is_sorted(profile.begin(), profile.end()));
      double mean = 0.0;
      for (double v : profile) mean += v / m;
      CHECK(profile.front() <= mean + 1e-12);
    }
    // Pointwise f1 = s <= f2 = 1/(1-s) for s in [0,1].
    CHECK(Fairness(a, s, Transform::Identity()) <=
          Fairness(a, s, Transform::Parse("inverse-one-minus-s")));
  }
}

}  // namespace
}  // namespace pr4a
