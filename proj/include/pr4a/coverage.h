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

// Topic coverage: how many distinct paper topics the assigned reviewers
// share with their papers, and a greedy max-flow selector that favours it.

#ifndef PR4A_COVERAGE_H_
#define PR4A_COVERAGE_H_

#include <utility>
#include <vector>

#include "pr4a/core.h"
#include "pr4a/flow.h"

namespace pr4a {

// Topic ids are integers in [0, num_topics). Each list is sorted and
// duplicate free after Normalize().
struct TopicProfile {
  std::vector<std::vector<int>> topics_of_paper;
  std::vector<std::vector<int>> topics_of_reviewer;
  int num_topics = 0;

  // Sorts and deduplicates every list and sets num_topics to one past the
  // largest id. Throws ArgumentError on a negative id.
  void Normalize();
  // Throws DimensionError unless there is one list per reviewer and paper.
  void CheckShape(int num_reviewers, int num_papers) const;
};

// sum_j |union over reviewers i of j of (T(j) & T(i))|.
int CoverageObjective(const Assignment& a, const TopicProfile& tp);

// Greedy coverage over the pairs already inserted in `net`: repeatedly adds
// the feasible pair with the largest positive marginal gain (ties to the
// lowest (reviewer, paper)), gives chosen pairs cost 1 and the rest cost 0,
// and returns the maximum-cost maximum flow of the re-costed network.
// Topic lists must be sorted (see TopicProfile::Normalize).
std::vector<std::pair<int, int>> GreedyCoverageSelect(FlowNetwork& net,
                                                      const TopicProfile& tp);

}  // namespace pr4a

#endif  // PR4A_COVERAGE_H_
