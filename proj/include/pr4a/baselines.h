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

// Reference assignments: total-similarity maximization, the single strong
// reviewer variant, a random feasible assignment, and an exact max-min
// oracle for small instances.

#ifndef PR4A_BASELINES_H_
#define PR4A_BASELINES_H_

#include <cstdint>

#include "pr4a/core.h"

namespace pr4a {

// Maximizes total similarity (max-cost max-flow over every non-conflict
// pair). Among maximizers, reviewer swaps between two papers that keep the
// total and lift the weaker of the two are applied until none is left, so
// low-similarity slots are spread across papers rather than stacked.
// Throws InfeasibleError when the demands cannot be met.
Assignment TpmsAssign(const SimilarityMatrix& s, const LoadConstraints& lc);

// One most-similar reviewer per paper first, then the rest of the demand:
// the kappa = 1 candidate of the first PeerReview4All round.
Assignment HartvigsenAssign(const SimilarityMatrix& s,
                            const LoadConstraints& lc);

// A feasible assignment chosen by a max-cost flow over costs drawn uniformly
// from [0, 1). Reproducible for a given seed.
Assignment RandomAssign(const SimilarityMatrix& s, const LoadConstraints& lc,
                        std::uint64_t seed);

struct OracleBudget {
  std::int64_t max_search_nodes = 10'000'000;
  int max_reviewers = 8;
  int max_papers = 8;
};

struct OracleResult {
  Assignment assignment;
  double fairness = 0.0;
  std::int64_t nodes = 0;  // search nodes visited
};

// Exact maximizer of min_j sum f(s_ij). Bisects over the achievable
// per-paper sums and decides each threshold by depth-first search, most
// constrained paper first. Throws BudgetExceededError if the instance is
// larger than the caps or the search visits more nodes than allowed, and
// InfeasibleError if no feasible assignment exists.
OracleResult HardBruteforce(const SimilarityMatrix& s,
                            const LoadConstraints& lc, const Transform& f,
                            const OracleBudget& budget = {});

}  // namespace pr4a

#endif  // PR4A_BASELINES_H_
