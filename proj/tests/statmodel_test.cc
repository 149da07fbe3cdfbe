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
#include <vector>

#include "doctest.h"
#include "pr4a/statmodel.h"

namespace pr4a {
namespace {

// Every paper j gets reviewers j, j+1, ..., j+lambda-1 (mod n).
Assignment Cyclic(int n, int m, int lambda) {
  Assignment a(n, m);
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < lambda; ++r) a.Assign((j + r) % n, j);
  }
  return a;
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

template <typename Draw>
Moments Estimate(int count, Draw draw) {
  double sum = 0.0, sq = 0.0;
  for (int t = 0; t < count; ++t) {
    const double x = draw(t);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / count;
  return {mean, (sq - count * mean * mean) / (count - 1)};
}

TEST_CASE("engine streams are reproducible and distinct") {
  auto a = SeededEngine(7, 0);
  auto b = SeededEngine(7, 0);
  auto c = SeededEngine(7, 1);
  const auto first = a();
  CHECK(first == b());
  CHECK(first != c());
}

TEST_CASE("sample_objective") {
  const auto s = SimilarityMatrix::FromRows({{1.0, 0.5}, {0.2, 0.9}});
  Assignment a(2, 2);
  a.Assign(0, 0);
  a.Assign(1, 1);
  ObjectiveWorld world{{3.0, -1.0}, NoiseModel::OneMinusS(), 1};

  const auto y = SampleObjective(world, a, s, 11);
  REQUIRE(y.by_paper.size() == 2);
  REQUIRE(y.by_paper[0].size() == 1);
  CHECK(y.by_paper[0][0].first == 0);
  // h(1) = 0 is floored at 1e-12: the draw sits on the true quality.
  CHECK(std::abs(y.by_paper[0][0].second - 3.0) < 1e-5);
  CHECK(y.by_paper[1][0].first == 1);

  const auto again = SampleObjective(world, a, s, 11);
  CHECK(again.by_paper == y.by_paper);
  CHECK(SampleObjective(world, a, s, 12).by_paper != y.by_paper);

  CHECK_THROWS_AS(SampleObjective(world, Assignment(3, 2), s, 1),
                  DimensionError);
  ObjectiveWorld bad_k{{1.0, 0.0}, NoiseModel::OneMinusS(), 2};
  CHECK_THROWS_AS(SampleObjective(bad_k, a, s, 1), ArgumentError);
}

TEST_CASE("sample moments match the noise model") {
  const auto s = SimilarityMatrix::FromRows({{0.3, 0.0}, {0.0, 0.3}});
  Assignment a(2, 2);
  a.Assign(0, 0);
  a.Assign(1, 1);
  const double theta = 0.25;
  const double h = 0.7;
  constexpr int kDraws = 100000;
  for (auto shape : {NoiseShape::kGaussian, NoiseShape::kBoundedUniform}) {
    ObjectiveWorld world{{theta, 0.0}, NoiseModel::OneMinusS(), 1};
    const auto m = Estimate(kDraws, [&](int t) {
      return SampleObjective(world, a, s, 5, t, shape).by_paper[0][0].second;
    });
    CHECK(std::abs(m.mean - theta) <= 4.0 * std::sqrt(h / kDraws));
    CHECK(std::abs(m.variance / h - 1.0) <= 0.05);
  }
  // Bounded noise stays inside +-sqrt(3 h).
  ObjectiveWorld world{{theta, 0.0}, NoiseModel::OneMinusS(), 1};
  for (int t = 0; t < 1000; ++t) {
    const double y =
        SampleObjective(world, a, s, 9, t, NoiseShape::kBoundedUniform)
            .by_paper[0][0]
            .second;
    CHECK(std::abs(y - theta) <= std::sqrt(3.0 * h));
  }
}

TEST_CASE("subjective model with constant columns is the objective model") {
  const int n = 4, m = 3;
  const auto s = SimilarityMatrix::FromRows(
      {{0.1, 0.5, 0.9}, {0.4, 0.2, 0.6}, {0.7, 0.8, 0.3}, {0.5, 0.5, 0.5}});
  const Assignment a = Cyclic(n, m, 2);
  const std::vector<double> theta = {0.3, -1.2, 2.5};
  ObjectiveWorld objective{theta, NoiseModel::OneMinusS(), 1};
  SubjectiveWorld subjective{std::vector<std::vector<double>>(n, theta),
                             NoiseModel::OneMinusS(), 1};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto yo = SampleObjective(objective, a, s, seed);
    const auto ys = SampleSubjective(subjective, a, s, seed);
    CHECK(yo.by_paper == ys.by_paper);
    CHECK(MleEstimate(yo, s, objective.noise) ==
          MleEstimate(ys, s, subjective.noise));
    CHECK(TopkSelect(MeanEstimate(yo), 1) == TopkSelect(MeanEstimate(ys), 1));
  }

  // Zero noise: scores equal the reviewer's own opinion.
  SubjectiveWorld quiet{{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {0, 0, 0}},
                        NoiseModel::Constant(0.0), 1};
  const auto y = SampleSubjective(quiet, a, s, 3);
  for (int j = 0; j < m; ++j) {
    for (auto [i, score] : y.by_paper[j]) {
      CHECK(std::abs(score - quiet.scores[i][j]) < 1e-5);
    }
  }
}

TEST_CASE("induced_scores") {
  SubjectiveWorld constant{std::vector<std::vector<double>>(3, {2.0, 2.0}),
                           NoiseModel::OneMinusS(), 1};
  Assignment a(3, 2);
  a.Assign(0, 0);
  a.Assign(1, 0);
  a.Assign(2, 1);
  CHECK(InducedScores(a, constant) == std::vector<double>{2.0, 2.0});

  SubjectiveWorld w{{{1.0, 5.0}, {3.0, 6.0}, {0.0, 7.0}},
                    NoiseModel::OneMinusS(), 1};
  // Paper 0: mean of {1, 3}; paper 1: its single reviewer.
  CHECK(InducedScores(a, w) == std::vector<double>{2.0, 7.0});

  a.Unassign(2, 1);
  CHECK_THROWS_AS(InducedScores(a, w), ArgumentError);
}

TEST_CASE("estimators") {
  const auto s = SimilarityMatrix::FromRows({{0.0, 0.5}, {0.5, 0.0}});
  const auto noise = NoiseModel::OneMinusS();

  ScoreSample y;
  y.by_paper = {{{0, 0.0}, {1, 3.0}}, {{0, 4.0}}};
  // Variances {1, 0.5}: weights {1, 2}.
  const auto mle = MleEstimate(y, s, noise);
  CHECK(mle[0] == doctest::Approx(2.0));
  CHECK(mle[1] == 4.0);
  CHECK(MeanEstimate(y) == std::vector<double>{1.5, 4.0});

  const auto sharp = SimilarityMatrix::FromRows({{1.0, 0.0}, {0.0, 0.0}});
  ScoreSample z;
  z.by_paper = {{{0, 5.0}, {1, 0.0}}, {{0, 1.0}, {1, 2.0}, }};
  CHECK(MleEstimate(z, sharp, noise)[0] == doctest::Approx(5.0).epsilon(1e-9));
  // Equal variances: both estimators are the arithmetic mean.
  CHECK(MleEstimate(z, sharp, noise)[1] == doctest::Approx(1.5));
  CHECK(MeanEstimate(z)[1] == 1.5);

  ScoreSample three;
  three.by_paper = {{{0, 1.0}, {1, 2.0}, {2, 3.0}}, {{0, 4.0}}};
  CHECK(MeanEstimate(three) == std::vector<double>{2.0, 4.0});

  ScoreSample empty;
  empty.by_paper = {{}, {{0, 1.0}}};
  CHECK_THROWS_AS(MeanEstimate(empty), ArgumentError);
}

TEST_CASE("topk_select") {
  CHECK(TopkSelect({3, 1, 2}, 2) == std::vector<int>{0, 2});
  CHECK(TopkSelect({1, 1, 1, 1}, 2) == std::vector<int>{0, 1});
  CHECK(TopkSelect({5, 0, 7, 3}, 3) == std::vector<int>{0, 2, 3});
  CHECK_THROWS_AS(TopkSelect({1, 2}, 0), ArgumentError);
  CHECK_THROWS_AS(TopkSelect({1, 2}, 2), ArgumentError);
}

TEST_CASE("estimator variances match their closed forms") {
  const int n = 6, m = 5, lambda = 3;
  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) rows[i][j] = 0.1 * ((i * 3 + j * 7) % 9);
  }
  const auto s = SimilarityMatrix::FromRows(rows);
  const Assignment a = Cyclic(n, m, lambda);
  const auto noise = NoiseModel::OneMinusS();
  ObjectiveWorld world{{0, 1, 2, 3, 4}, noise, 2};

  constexpr int kDraws = 100000;
  std::vector<double> mle_sum(m), mle_sq(m), mean_sum(m), mean_sq(m);
  for (int t = 0; t < kDraws; ++t) {
    const auto y = SampleObjective(world, a, s, 21, t);
    const auto mle = MleEstimate(y, s, noise);
    const auto mean = MeanEstimate(y);
    for (int j = 0; j < m; ++j) {
      mle_sum[j] += mle[j];
      mle_sq[j] += mle[j] * mle[j];
      mean_sum[j] += mean[j];
      mean_sq[j] += mean[j] * mean[j];
    }
  }
  for (int j = 0; j < m; ++j) {
    double precision = 0.0, total = 0.0;
    for (int i : a.ReviewersOf(j)) {
      const double v = noise.EffectiveVariance(s.at(i, j));
      precision += 1.0 / v;
      total += v;
    }
    auto var = [&](double sum, double sq) {
      const double mu = sum / kDraws;
      return (sq - kDraws * mu * mu) / (kDraws - 1);
    };
    CHECK(std::abs(var(mle_sum[j], mle_sq[j]) * precision - 1.0) <= 0.05);
    CHECK(std::abs(var(mean_sum[j], mean_sq[j]) /
                       (total / (lambda * lambda)) -
                   1.0) <= 0.05);
  }
}

TEST_CASE("top-k error bound") {
  const auto s = SimilarityMatrix::Constant(2, 2, 0.0);  // h = 1
  Assignment a(2, 2);
  a.Assign(0, 0);
  a.Assign(1, 1);
  const auto noise = NoiseModel::OneMinusS();
  // k = 1, m = 2, sigma = 1, delta = 2: exp(-1).
  CHECK(TopKErrorBound(a, s, noise, Estimator::kMle, 1, 2.0) ==
        doctest::Approx(std::exp(-1.0)));
  CHECK(TopKErrorBound(a, s, noise, Estimator::kMean, 1, 0.0) == 1.0);
  CHECK(TopKErrorBound(a, s, noise, Estimator::kMle, 1, kInfinity) == 0.0);
  CHECK(TopKErrorBound(a, s, noise, Estimator::kMle, 1, 1e3) < 1e-100);
  CHECK_THROWS_AS(TopKErrorBound(a, s, noise, Estimator::kMle, 1, -1.0),
                  ArgumentError);
  CHECK_THROWS_AS(TopKErrorBound(a, s, noise, Estimator::kMle, 2, 1.0),
                  ArgumentError);

  // Two reviewers with variances {1, 0.5}: MLE 1/3, MEAN 1.5/4.
  const auto two = SimilarityMatrix::FromRows({{0.0, 0.9}, {0.5, 0.9}});
  Assignment b(2, 2);
  b.Assign(0, 0);
  b.Assign(1, 0);
  b.Assign(0, 1);
  b.Assign(1, 1);
  CHECK(WorstEstimatorVariance(b, two, noise, Estimator::kMle) ==
        doctest::Approx(1.0 / 3.0));
  CHECK(WorstEstimatorVariance(b, two, noise, Estimator::kMean) ==
        doctest::Approx(1.5 / 4.0));
}

// Monte Carlo check that the bound dominates the empirical misrecovery rate
// on a world whose k-th gap equals delta, for both noise shapes.
TEST_CASE("error bound dominates empirical misrecovery") {
  const int n = 6, m = 6, k = 2, lambda = 2;
  std::vector<std::vector<double>> rows(n, std::vector<double>(m, 0.2));
  const auto s = SimilarityMatrix::FromRows(rows);
  const Assignment a = Cyclic(n, m, lambda);
  const auto noise = NoiseModel::OneMinusS();
  const double delta = 1.5;
  ObjectiveWorld world{{1, 1, 1 - delta, 1 - delta, 1 - delta, 1 - delta},
                       noise, k};
  REQUIRE(world.Gap() == delta);
  const std::vector<int> truth = {0, 1};
  constexpr int kTrials = 20000;
  for (auto shape : {NoiseShape::kGaussian, NoiseShape::kBoundedUniform}) {
    for (auto est : {Estimator::kMle, Estimator::kMean}) {
      int wrong = 0;
      for (int t = 0; t < kTrials; ++t) {
        const auto y = SampleObjective(world, a, s, 77, t, shape);
        const auto theta = est == Estimator::kMle ? MleEstimate(y, s, noise)
                                                  : MeanEstimate(y);
        if (TopkSelect(theta, k) != truth) ++wrong;
      }
      const double p = static_cast<double>(wrong) / kTrials;
      const double se = std::sqrt(p * (1 - p) / kTrials);
      CHECK(p <= TopKErrorBound(a, s, noise, est, k, delta) + 3 * se);
    }
  }
}

}  // namespace
}  // namespace pr4a
