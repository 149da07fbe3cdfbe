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

// The PeerReview4All assignment: a flow-based subroutine that gives every
// paper kappa reviewers while maximizing the weakest assigned similarity, and
// the outer loop that builds one candidate per kappa, keeps the fairest, fixes
// the worst-off papers and repeats on the rest.

#ifndef PR4A_ASSIGN_H_
#define PR4A_ASSIGN_H_

#include <optional>
#include <utility>
#include <vector>

#include "pr4a/core.h"

namespace pr4a {

struct TopicProfile;

// How a maximum flow is picked once the stopping rule fires.
enum class Heuristic {
  kMaxCost,   // maximum total similarity
  kCoverage,  // greedy topic coverage, then a maximum flow favouring it
};

struct SubroutineOptions {
  // Find the stopping prefix by bisection instead of one edge at a time.
  // Both give the same edge set.
  bool binary_search = true;
  Heuristic heuristic = Heuristic::kMaxCost;
  // Required when heuristic == kCoverage; not owned.
  const TopicProfile* topics = nullptr;
};

struct SubroutineResult {
  // Full n x m matrix; only columns of the requested papers are populated.
  Assignment assignment;
  // Smallest similarity among assigned pairs (the last inserted edge).
  double min_similarity = 0.0;
  // Number of reviewer -> paper edges inserted before the flow target was met.
  int edges_inserted = 0;
};

// Assigns demand[k] reviewers to papers[k] for each k, using only
// non-conflict pairs and at most capacity[i] papers per reviewer. Papers with
// zero demand are skipped. Throws InfeasibleError if the demands cannot be
// met even with every non-conflict pair available.
SubroutineResult RunSubroutine(const std::vector<int>& papers,
                               const std::vector<int>& demand,
                               const SimilarityMatrix& s,
                               const std::vector<int>& capacity,
                               const SubroutineOptions& options = {});

// Uniform form: every paper in `papers` gets kappa reviewers.
SubroutineResult RunSubroutine(int kappa, const std::vector<int>& papers,
                               const SimilarityMatrix& s,
                               const std::vector<int>& capacity,
                               const SubroutineOptions& options = {});

// Marker for the kappa = infinity end point (smallest entry).
inline constexpr int kKappaInfinity = -1;

// s*_kappa: 0 gives the largest entry, kKappaInfinity the smallest, and
// kappa in [1, lambda] the weakest similarity of the best kappa-reviewer
// assignment (each paper j gets min(kappa, lambda_j) reviewers).
double CriticalSimilarity(int kappa, const SimilarityMatrix& s,
                          const LoadConstraints& lc);

// Builds the candidate for one kappa: kappa strongest reviewers per paper,
// then the remaining demand from the pairs not yet used. Returns nullopt if
// either call is infeasible under `capacity`.
std::optional<Assignment> BuildCandidate(int kappa,
                                         const std::vector<int>& papers,
                                         const std::vector<int>& paper_demand,
                                         const SimilarityMatrix& s,
                                         const std::vector<int>& capacity,
                                         const SubroutineOptions& options = {});

enum class Pr4aMode { kFull, kEarlyStop };

struct Pr4aIteration {
  std::vector<int> remaining_papers;     // the set M at the start
  std::vector<int> remaining_capacity;   // reviewer capacities at the start
  // Fairness over M of each candidate, index = kappa; index 0 is the
  // previous selection restricted to M (empty in the first iteration).
  // nullopt marks an infeasible candidate.
  std::vector<std::optional<double>> candidate_fairness;
  int chosen_kappa = 0;
  double fairness = 0.0;                 // of the selected candidate over M
  std::vector<int> fixed_papers;         // worst-off papers fixed this round
};

struct Pr4aTrace {
  std::vector<Pr4aIteration> iterations;
};

struct Pr4aOptions {
  Pr4aMode mode = Pr4aMode::kFull;
  SubroutineOptions subroutine;
};

struct Pr4aResult {
  Assignment assignment;
  Pr4aTrace trace;
};

// Throws InfeasibleError if no candidate is feasible and ArgumentError when
// the loads are inconsistent with the matrix.
Pr4aResult PeerReview4All(const SimilarityMatrix& s, const LoadConstraints& lc,
                          const Transform& f, const Pr4aOptions& options = {});

struct ApproximationBound {
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 1.0;
  // s*_0, s*_1, ..., s*_lambda, then s*_inf.
  std::vector<double> critical;
};

// Lower bound on the fairness of PeerReview4All (numerator) and on its ratio
// to the optimum. Requires equal demand across papers.
ApproximationBound FairnessLowerBound(const SimilarityMatrix& s,
                                      const LoadConstraints& lc,
                                      const Transform& f);

}  // namespace pr4a

#endif  // PR4A_ASSIGN_H_
