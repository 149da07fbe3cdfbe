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

#include "pr4a/statmodel.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pr4a {
namespace {

void CheckShapes(const Assignment& a, const SimilarityMatrix& s) {
  if (a.num_reviewers() != s.num_reviewers() ||
      a.num_papers() != s.num_papers()) {
    throw DimensionError("assignment and similarity shapes differ");
  }
}

// Shared by both models so that a subjective world with constant columns
// reproduces the objective model draw for draw.
template <typename Centre>
ScoreSample Sample(const Assignment& a, const SimilarityMatrix& s,
                   const NoiseModel& noise, Centre centre, std::uint64_t seed,
                   std::uint64_t stream, NoiseShape shape) {
  CheckShapes(a, s);
  std::mt19937_64 rng = SeededEngine(seed, stream);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  ScoreSample y;
  y.by_paper.resize(a.num_papers());
  for (int j = 0; j < a.num_papers(); ++j) {
    for (int i : a.ReviewersOf(j)) {
      const double variance = noise.EffectiveVariance(s.at(i, j));
      const double z = shape == NoiseShape::kGaussian
                           ? gaussian(rng)
                           : std::sqrt(3.0) * uniform(rng);
      y.by_paper[j].emplace_back(i, centre(i, j) + std::sqrt(variance) * z);
    }
  }
  return y;
}

void CheckK(int k, int m) {
  if (k < 1 || k >= m) throw ArgumentError("k must satisfy 1 <= k < m");
}

}  // namespace

std::mt19937_64 SeededEngine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double ObjectiveWorld::Gap() const {
  Validate();
  std::vector<double> sorted = true_quality;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted[k - 1] - sorted[k];
}

void ObjectiveWorld::Validate() const {
  CheckK(k, num_papers());
  for (double q : true_quality) {
    if (!std::isfinite(q)) throw ArgumentError("true quality must be finite");
  }
}

void SubjectiveWorld::Validate() const {
  CheckK(k, num_papers());
  for (const auto& row : scores) {
    if (static_cast<int>(row.size()) != num_papers()) {
      throw DimensionError("ragged subjective score matrix");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw ArgumentError("scores must be finite");
    }
  }
}

ScoreSample SampleObjective(const ObjectiveWorld& world, const Assignment& a,
                            const SimilarityMatrix& s, std::uint64_t seed,
                            std::uint64_t stream, NoiseShape shape) {
  world.Validate();
  if (world.num_papers() != a.num_papers()) {
    throw DimensionError("world and assignment disagree on m");
  }
  return Sample(
      a, s, world.noise,
      [&](int, int j) { return world.true_quality[j]; }, seed, stream, shape);
}

ScoreSample SampleSubjective(const SubjectiveWorld& world, const Assignment& a,
                             const SimilarityMatrix& s, std::uint64_t seed,
                             std::uint64_t stream, NoiseShape shape) {
  world.Validate();
  if (world.num_papers() != a.num_papers() ||
      world.num_reviewers() != a.num_reviewers()) {
    throw DimensionError("world and assignment shapes differ");
  }
  return Sample(
      a, s, world.noise, [&](int i, int j) { return world.scores[i][j]; },
      seed, stream, shape);
}

std::vector<double> InducedScores(const Assignment& a,
                                  const SubjectiveWorld& world) {
  world.Validate();
  if (world.num_papers() != a.num_papers() ||
      world.num_reviewers() != a.num_reviewers()) {
    throw DimensionError("world and assignment shapes differ");
  }
  std::vector<double> induced(a.num_papers());
  for (int j = 0; j < a.num_papers(); ++j) {
    const auto reviewers = a.ReviewersOf(j);
    if (reviewers.empty()) throw ArgumentError("paper without reviewers");
    double sum = 0.0;
    for (int i : reviewers) sum += world.scores[i][j];
    induced[j] = sum / static_cast<double>(reviewers.size());
  }
  return induced;
}

std::vector<double> MleEstimate(const ScoreSample& y, const SimilarityMatrix& s,
                                const NoiseModel& noise) {
  std::vector<double> estimate(y.num_papers());
  for (int j = 0; j < y.num_papers(); ++j) {
    if (y.by_paper[j].empty()) throw ArgumentError("paper without scores");
    double weighted = 0.0;
    double precision = 0.0;
    for (auto [i, score] : y.by_paper[j]) {
      const double w = 1.0 / noise.EffectiveVariance(s.at(i, j));
      weighted += w * score;
      precision += w;
    }
    estimate[j] = weighted / precision;
  }
  return estimate;
}

std::vector<double> MeanEstimate(const ScoreSample& y) {
  std::vector<double> estimate(y.num_papers());
  for (int j = 0; j < y.num_papers(); ++j) {
    if (y.by_paper[j].empty()) throw ArgumentError("paper without scores");
    double sum = 0.0;
    for (auto [i, score] : y.by_paper[j]) sum += score;
    estimate[j] = sum / static_cast<double>(y.by_paper[j].size());
  }
  return estimate;
}

std::vector<int> TopkSelect(const std::vector<double>& estimates, int k) {
  const int m = static_cast<int>(estimates.size());
  CheckK(k, m);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return estimates[x] > estimates[y];
  });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

double WorstEstimatorVariance(const Assignment& a, const SimilarityMatrix& s,
                              const NoiseModel& noise, Estimator estimator) {
  CheckShapes(a, s);
  double worst = 0.0;
  for (int j = 0; j < a.num_papers(); ++j) {
    const auto reviewers = a.ReviewersOf(j);
    if (reviewers.empty()) throw ArgumentError("paper without reviewers");
    double acc = 0.0;
    for (int i : reviewers) {
      const double v = noise.EffectiveVariance(s.at(i, j));
      acc += estimator == Estimator::kMle ? 1.0 / v : v;
    }
    const double lambda = static_cast<double>(reviewers.size());
    worst = std::max(worst, estimator == Estimator::kMle
                                ? 1.0 / acc
                                : acc / (lambda * lambda));
  }
  return worst;
}

double TopKErrorBound(const Assignment& a, const SimilarityMatrix& s,
                      const NoiseModel& noise, Estimator estimator, int k,
                      double delta) {
  CheckK(k, a.num_papers());
  if (!(delta >= 0.0)) throw ArgumentError("delta must be non-negative");
  const double pairs = static_cast<double>(k) * (a.num_papers() - k);
  if (std::isinf(delta)) return 0.0;
  const double variance = WorstEstimatorVariance(a, s, noise, estimator);
  const double scaled = delta / (2.0 * std::sqrt(variance));
  return pairs * std::exp(-scaled * scaled);
}

}  // namespace pr4a
