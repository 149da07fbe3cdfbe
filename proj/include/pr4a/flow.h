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

// Four-layer network source -> reviewers -> papers -> sink used by the
// assignment subroutine. Reviewer->paper edges have capacity 1 and are added
// one at a time; the flow computed so far is kept in the residual graph so
// later max-flow calls only augment.

#ifndef PR4A_FLOW_H_
#define PR4A_FLOW_H_

#include <string>
#include <utility>
#include <vector>

#include "pr4a/core.h"

namespace pr4a {

class FlowNetwork {
 public:
  // `papers` lists the paper ids present (the set M), `paper_capacity[k]` is
  // the sink capacity of papers[k], and `reviewer_capacity[i]` the source
  // capacity of reviewer i. Throws ArgumentError on an empty paper set or
  // negative capacity, DimensionError on length mismatch.
  FlowNetwork(int num_reviewers, std::vector<int> papers,
              std::vector<int> paper_capacity,
              std::vector<int> reviewer_capacity);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  // Forward edges only (residual twins are not counted).
  int num_edges() const { return static_cast<int>(head_.size()) / 2; }
  int num_reviewers() const { return num_reviewers_; }
  const std::vector<int>& papers() const { return papers_; }
  int ReviewerCapacity(int reviewer) const { return capacity_[2 * reviewer]; }
  int PaperCapacity(int paper) const;

  static constexpr double kCostTolerance = 1e-9;

  // Adds reviewer -> paper with capacity 1. Throws ArgumentError if the pair
  // is already present or the paper is not in M.
  void InsertEdge(int reviewer, int paper, double cost);
  bool HasEdge(int reviewer, int paper) const;
  void SetEdgeCost(int reviewer, int paper, double cost);
  // Reviewer -> paper pairs in insertion order.
  const std::vector<std::pair<int, int>>& InsertedPairs() const {
    return inserted_;
  }

  // Augments the stored flow to a maximum one (Dinic) and returns its value.
  int MaxFlowValue();
  int CurrentFlowValue() const { return flow_value_; }

  // Discards the stored flow and recomputes a maximum flow of maximum total
  // cost over the inserted edges (successive shortest paths on negated
  // costs). Among maximum-cost flows the one whose pair set is
  // lexicographically smallest in (reviewer, paper) order wins; costs within
  // kCostTolerance count as equal. Returns the pairs carrying flow,
  // row-major.
  std::vector<std::pair<int, int>> SelectMaxCostMaxFlow();

  // Pairs carrying flow in the current state, row-major.
  std::vector<std::pair<int, int>> FlowPairs() const;

  // One line per forward edge: "<from> <to> cap=<c> flow=<f> cost=<w>".
  std::string DebugString() const;

 private:
  int AddArc(int from, int to, int capacity, double cost);
  int ReviewerNode(int reviewer) const { return 1 + reviewer; }
  int PaperNode(int local) const { return 1 + num_reviewers_ + local; }
  int source() const { return 0; }
  int sink() const { return num_nodes() - 1; }
  int PairArc(int reviewer, int paper) const;
  int LocalPaper(int paper) const;

  bool BuildLevels(std::vector<int>& level) const;
  void PreferLowestPairs();
  int Push(int node, int limit, const std::vector<int>& level,
           std::vector<std::size_t>& cursor);

  int num_reviewers_;
  std::vector<int> papers_;
  std::vector<int> local_of_paper_;  // paper id -> index in papers_, or -1
  std::vector<int> pair_arc_;        // reviewer * |M| + local -> arc, or -1
  std::vector<std::pair<int, int>> inserted_;

  // Arc arrays; arc a and a ^ 1 are residual twins.
  std::vector<int> head_;
  std::vector<int> residual_;
  std::vector<int> capacity_;
  std::vector<double> cost_;
  std::vector<std::vector<int>> adjacency_;
  int flow_value_ = 0;
};

// Convenience constructor for the uniform case: every paper in `papers` gets
// sink capacity `kappa`.
FlowNetwork BuildNetwork(int kappa, const std::vector<int>& papers,
                         const SimilarityMatrix& s,
                         const std::vector<int>& reviewer_capacity);

}  // namespace pr4a

#endif  // PR4A_FLOW_H_
