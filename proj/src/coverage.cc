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

#include "pr4a/coverage.h"

#include <algorithm>
#include <iterator>
#include <queue>
#include <tuple>

namespace pr4a {
namespace {

// Topics of `paper` shared with `reviewer` and not yet in `covered`.
int MarginalGain(const std::vector<int>& paper_topics,
                 const std::vector<int>& reviewer_topics,
                 const std::vector<char>& covered) {
  int gain = 0;
  auto r = reviewer_topics.begin();
  for (int t : paper_topics) {
    r = std::lower_bound(r, reviewer_topics.end(), t);
    if (r == reviewer_topics.end()) break;
    if (*r == t && !covered[t]) ++gain;
  }
  return gain;
}

}  // namespace

void TopicProfile::Normalize() {
  int largest = -1;
  for (auto* lists : {&topics_of_paper, &topics_of_reviewer}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (!list.empty() && list.front() < 0) {
        throw ArgumentError("negative topic id");
      }
      if (!list.empty()) largest = std::max(largest, list.back());
    }
  }
  num_topics = largest + 1;
}

void TopicProfile::CheckShape(int num_reviewers, int num_papers) const {
  if (static_cast<int>(topics_of_paper.size()) != num_papers ||
      static_cast<int>(topics_of_reviewer.size()) != num_reviewers) {
    throw DimensionError("topic profile does not match the instance shape");
  }
}

int CoverageObjective(const Assignment& a, const TopicProfile& tp) {
  tp.CheckShape(a.num_reviewers(), a.num_papers());
  int total = 0;
  for (int j = 0; j < a.num_papers(); ++j) {
    std::vector<int> covered;
    for (int i : a.ReviewersOf(j)) {
      std::set_intersection(tp.topics_of_paper[j].begin(),
                            tp.topics_of_paper[j].end(),
                            tp.topics_of_reviewer[i].begin(),
                            tp.topics_of_reviewer[i].end(),
                            std::back_inserter(covered));
    }
    std::sort(covered.begin(), covered.end());
    total += static_cast<int>(
        std::unique(covered.begin(), covered.end()) - covered.begin());
  }
  return total;
}

std::vector<std::pair<int, int>> GreedyCoverageSelect(FlowNetwork& net,
                                                      const TopicProfile& tp) {
  const auto& pairs = net.InsertedPairs();
  int max_paper = 0;
  for (int j : net.papers()) max_paper = std::max(max_paper, j);
  if (static_cast<int>(tp.topics_of_paper.size()) <= max_paper ||
      static_cast<int>(tp.topics_of_reviewer.size()) < net.num_reviewers()) {
    throw DimensionError("topic profile does not cover the network");
  }

  int universe = tp.num_topics;
  for (const auto& list : tp.topics_of_paper) {
    if (!list.empty()) universe = std::max(universe, list.back() + 1);
  }
  std::vector<std::vector<char>> covered(max_paper + 1,
                                         std::vector<char>(universe, 0));
  std::vector<int> reviewer_load(net.num_reviewers(), 0);
  std::vector<int> paper_load(max_paper + 1, 0);

  // Lazy greedy: keys are upper bounds on the current gain because coverage
  // is submodular. Order by gain descending, then (reviewer, paper).
  using Key = std::tuple<int, int, int>;  // (-gain, reviewer, paper)
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
  for (auto [i, j] : pairs) {
    const int gain = MarginalGain(tp.topics_of_paper[j],
                                  tp.topics_of_reviewer[i], covered[j]);
    if (gain > 0) heap.emplace(-gain, i, j);
  }
  std::vector<std::pair<int, int>> chosen;
  while (!heap.empty()) {
    auto [neg_gain, i, j] = heap.top();
    heap.pop();
    if (reviewer_load[i] >= net.ReviewerCapacity(i) ||
        paper_load[j] >= net.PaperCapacity(j)) {
      continue;  // loads only grow, so the pair stays infeasible
    }
    const int gain = MarginalGain(tp.topics_of_paper[j],
                                  tp.topics_of_reviewer[i], covered[j]);
    if (gain <= 0) continue;
    if (gain != -neg_gain) {
      heap.emplace(-gain, i, j);
      continue;
    }
    chosen.emplace_back(i, j);
    ++reviewer_load[i];
    ++paper_load[j];
    for (int t : tp.topics_of_reviewer[i]) {
      if (std::binary_search(tp.topics_of_paper[j].begin(),
                             tp.topics_of_paper[j].end(), t)) {
        covered[j][t] = 1;
      }
    }
  }

  for (auto [i, j] : pairs) net.SetEdgeCost(i, j, 0.0);
  for (auto [i, j] : chosen) net.SetEdgeCost(i, j, 1.0);
  return net.SelectMaxCostMaxFlow();
}

}  // namespace pr4a
