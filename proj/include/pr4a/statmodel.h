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

// Reviewer score models. In the objective model every reviewer of paper j
// reports the paper's true quality plus noise of variance h(s_ij); in the
// subjective model the centre is the reviewer's own full-competence score.
// Estimators turn observed scores into per-paper estimates and the top-k set.

#ifndef PR4A_STATMODEL_H_
#define PR4A_STATMODEL_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pr4a/core.h"

namespace pr4a {

// mt19937_64 seeded with seed_seq over the 32-bit halves of (seed, stream).
// Every sampler and Monte Carlo trial draws from one of these.
std::mt19937_64 SeededEngine(std::uint64_t seed, std::uint64_t stream = 0);

struct ObjectiveWorld {
  std::vector<double> true_quality;
  NoiseModel noise;
  int k = 1;

  int num_papers() const { return static_cast<int>(true_quality.size()); }
  // Gap between the k-th and (k+1)-th largest true quality.
  double Gap() const;
  // Throws ArgumentError unless 1 <= k < m and every quality is finite.
  void Validate() const;
};

struct SubjectiveWorld {
  // n x m full-competence scores, row = reviewer.
  std::vector<std::vector<double>> scores;
  NoiseModel noise;
  int k = 1;

  int num_reviewers() const { return static_cast<int>(scores.size()); }
  int num_papers() const {
    return scores.empty() ? 0 : static_cast<int>(scores.front().size());
  }
  void Validate() const;
};

// Observed scores, present exactly on the assigned pairs.
struct ScoreSample {
  // by_paper[j] holds (reviewer, score) with reviewers ascending.
  std::vector<std::vector<std::pair<int, double>>> by_paper;

  int num_papers() const { return static_cast<int>(by_paper.size()); }
};

enum class NoiseShape {
  kGaussian,
  // Uniform on [-sqrt(3 v), sqrt(3 v)]: bounded, mean zero, variance v, and
  // sub-Gaussian with the same variance proxy.
  kBoundedUniform,
};

// Draws y_ij for every assigned pair, papers ascending then reviewers
// ascending, from SeededEngine(seed, stream). The noise variance is the
// noise model's effective variance at s_ij.
ScoreSample SampleObjective(const ObjectiveWorld& world, const Assignment& a,
                            const SimilarityMatrix& s, std::uint64_t seed,
                            std::uint64_t stream = 0,
                            NoiseShape shape = NoiseShape::kGaussian);
ScoreSample SampleSubjective(const SubjectiveWorld& world, const Assignment& a,
                             const SimilarityMatrix& s, std::uint64_t seed,
                             std::uint64_t stream = 0,
                             NoiseShape shape = NoiseShape::kGaussian);

// Mean full-competence score of each paper's assigned reviewers. Throws
// ArgumentError if a paper has no reviewer.
std::vector<double> InducedScores(const Assignment& a,
                                  const SubjectiveWorld& world);

// Precision-weighted mean of each paper's scores.
std::vector<double> MleEstimate(const ScoreSample& y, const SimilarityMatrix& s,
                                const NoiseModel& noise);
// Plain mean of each paper's scores.
std::vector<double> MeanEstimate(const ScoreSample& y);

// Indices of the k largest estimates, ascending; ties go to the lower index.
// Throws ArgumentError unless 1 <= k < m.
std::vector<int> TopkSelect(const std::vector<double>& estimates, int k);

enum class Estimator { kMle, kMean };

// Largest per-paper estimator variance under `a`: 1 / sum(1/sigma^2) for the
// precision-weighted mean, sum(sigma^2) / lambda_j^2 for the plain mean.
double WorstEstimatorVariance(const Assignment& a, const SimilarityMatrix& s,
                              const NoiseModel& noise, Estimator estimator);

// Upper bound k (m - k) exp(-(delta / (2 sigma))^2) on the probability that
// the estimated top-k set differs from the true one when the true qualities
// are separated by `delta` at position k; sigma^2 is WorstEstimatorVariance.
// Throws ArgumentError on negative delta or k outside [1, m).
double TopKErrorBound(const Assignment& a, const SimilarityMatrix& s,
                      const NoiseModel& noise, Estimator estimator, int k,
                      double delta);

}  // namespace pr4a

#endif  // PR4A_STATMODEL_H_
