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

#include "pr4a/flow.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

namespace pr4a {

FlowNetwork::FlowNetwork(int num_reviewers, std::vector<int> papers,
                         std::vector<int> paper_capacity,
                         std::vector<int> reviewer_capacity)
    : num_reviewers_(num_reviewers), papers_(std::move(papers)) {
  if (papers_.empty()) throw ArgumentError("flow network needs a paper");
  if (paper_capacity.size() != papers_.size()) {
    throw DimensionError("one sink capacity per paper expected");
  }
  if (static_cast<int>(reviewer_capacity.size()) != num_reviewers_) {
    throw DimensionError("one source capacity per reviewer expected");
  }
  const int max_paper = *std::max_element(papers_.begin(), papers_.end());
  local_of_paper_.assign(max_paper + 1, -1);
  for (std::size_t k = 0; k < papers_.size(); ++k) {
    if (papers_[k] < 0) throw ArgumentError("negative paper id");
    if (local_of_paper_[papers_[k]] != -1) {
      throw ArgumentError("paper listed twice in flow network");
    }
    local_of_paper_[papers_[k]] = static_cast<int>(k);
  }
  const int m = static_cast<int>(papers_.size());
  adjacency_.resize(num_reviewers_ + m + 2);
  pair_arc_.assign(static_cast<std::size_t>(num_reviewers_) * m, -1);
  for (int i = 0; i < num_reviewers_; ++i) {
    if (reviewer_capacity[i] < 0) throw ArgumentError("negative capacity");
    AddArc(source(), ReviewerNode(i), reviewer_capacity[i], 0.0);
  }
  for (int k = 0; k < m; ++k) {
    if (paper_capacity[k] < 0) throw ArgumentError("negative capacity");
    AddArc(PaperNode(k), sink(), paper_capacity[k], 0.0);
  }
}

int FlowNetwork::AddArc(int from, int to, int capacity, double cost) {
  const int arc = static_cast<int>(head_.size());
  head_.push_back(to);
  residual_.push_back(capacity);
  capacity_.push_back(capacity);
  cost_.push_back(cost);
  head_.push_back(from);
  residual_.push_back(0);
  capacity_.push_back(0);
  cost_.push_back(-cost);
  adjacency_[from].push_back(arc);
  adjacency_[to].push_back(arc + 1);
  return arc;
}

int FlowNetwork::LocalPaper(int paper) const {
  if (paper < 0 || paper >= static_cast<int>(local_of_paper_.size()) ||
      local_of_paper_[paper] < 0) {
    throw ArgumentError("paper " + std::to_string(paper) +
                        " is not in the network");
  }
  return local_of_paper_[paper];
}

int FlowNetwork::PaperCapacity(int paper) const {
  return capacity_[2 * (num_reviewers_ + LocalPaper(paper))];
}

int FlowNetwork::PairArc(int reviewer, int paper) const {
  if (reviewer < 0 || reviewer >= num_reviewers_) {
    throw ArgumentError("reviewer " + std::to_string(reviewer) +
                        " out of range");
  }
  return pair_arc_[static_cast<std::size_t>(reviewer) * papers_.size() +
                   LocalPaper(paper)];
}

void FlowNetwork::InsertEdge(int reviewer, int paper, double cost) {
  if (PairArc(reviewer, paper) != -1) {
    throw ArgumentError("edge (" + std::to_string(reviewer) + ", " +
                        std::to_string(paper) + ") already inserted");
  }
  const int local = LocalPaper(paper);
  pair_arc_[static_cast<std::size_t>(reviewer) * papers_.size() + local] =
      AddArc(ReviewerNode(reviewer), PaperNode(local), 1, cost);
  inserted_.emplace_back(reviewer, paper);
}

bool FlowNetwork::HasEdge(int reviewer, int paper) const {
  return PairArc(reviewer, paper) != -1;
}

void FlowNetwork::SetEdgeCost(int reviewer, int paper, double cost) {
  const int arc = PairArc(reviewer, paper);
  if (arc == -1) throw ArgumentError("edge not present");
  cost_[arc] = cost;
  cost_[arc + 1] = -cost;
}

bool FlowNetwork::BuildLevels(std::vector<int>& level) const {
  level.assign(num_nodes(), -1);
  std::queue<int> frontier;
  level[source()] = 0;
  frontier.push(source());
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int arc : adjacency_[u]) {
      const int v = head_[arc];
      if (residual_[arc] > 0 && level[v] < 0) {
        level[v] = level[u] + 1;
        frontier.push(v);
      }
    }
  }
  return level[sink()] >= 0;
}

int FlowNetwork::Push(int node, int limit, const std::vector<int>& level,
                      std::vector<std::size_t>& cursor) {
  if (node == sink()) return limit;
  for (std::size_t& k = cursor[node]; k < adjacency_[node].size(); ++k) {
    const int arc = adjacency_[node][k];
    const int v = head_[arc];
    if (residual_[arc] <= 0 || level[v] != level[node] + 1) continue;
    const int pushed =
        Push(v, std::min(limit, residual_[arc]), level, cursor);
    if (pushed > 0) {
      residual_[arc] -= pushed;
      residual_[arc ^ 1] += pushed;
      return pushed;
    }
  }
  return 0;
}

int FlowNetwork::MaxFlowValue() {
  std::vector<int> level;
  std::vector<std::size_t> cursor;
  while (BuildLevels(level)) {
    cursor.assign(num_nodes(), 0);
    while (int pushed = Push(source(), std::numeric_limits<int>::max(), level,
                             cursor)) {
      flow_value_ += pushed;
    }
  }
  return flow_value_;
}

std::vector<std::pair<int, int>> FlowNetwork::SelectMaxCostMaxFlow() {
  // Min-cost flow on costs -c. Node ids are already a topological order of
  // the zero-flow graph, so one relaxation pass yields exact potentials.
  residual_ = capacity_;
  flow_value_ = 0;
  const int nodes = num_nodes();
  constexpr double kUnreached = std::numeric_limits<double>::infinity();
  std::vector<double> potential(nodes, kUnreached);
  potential[source()] = 0.0;
  for (int u = 0; u < nodes; ++u) {
    if (potential[u] == kUnreached) continue;
    for (int arc : adjacency_[u]) {
      if (residual_[arc] <= 0) continue;
      const double d = potential[u] - cost_[arc];
      if (d < potential[head_[arc]]) potential[head_[arc]] = d;
    }
  }
  for (double& p : potential) {
    if (p == kUnreached) p = 0.0;
  }

  std::vector<double> dist(nodes);
  std::vector<int> parent(nodes);
  std::vector<char> done(nodes);
  using Entry = std::pair<double, int>;
  while (true) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    dist[source()] = 0.0;
    heap.emplace(0.0, source());
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (int arc : adjacency_[u]) {
        if (residual_[arc] <= 0) continue;
        const int v = head_[arc];
        if (done[v]) continue;
        const double reduced =
            std::max(0.0, -cost_[arc] + potential[u] - potential[v]);
        if (d + reduced < dist[v]) {
          dist[v] = d + reduced;
          parent[v] = arc;
          heap.emplace(dist[v], v);
        }
      }
    }
    if (dist[sink()] == kUnreached) break;
    for (int u = 0; u < nodes; ++u) {
      if (dist[u] != kUnreached) potential[u] += dist[u];
    }
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = sink(); v != source(); v = head_[parent[v] ^ 1]) {
      bottleneck = std::min(bottleneck, residual_[parent[v]]);
    }
    for (int v = sink(); v != source(); v = head_[parent[v] ^ 1]) {
      residual_[parent[v]] -= bottleneck;
      residual_[parent[v] ^ 1] += bottleneck;
    }
    flow_value_ += bottleneck;
  }
  PreferLowestPairs();
  return FlowPairs();
}

void FlowNetwork::PreferLowestPairs() {
  // Exact node potentials for the optimal residual graph (Bellman-Ford from
  // a virtual root). An optimal flow must leave every arc with reduced cost
  // away from zero as it is; only zero-reduced-cost arcs may change.
  const int nodes = num_nodes();
  const std::size_t arcs = head_.size();
  std::vector<double> potential(nodes, 0.0);
  for (int round = 0; round < nodes; ++round) {
    bool changed = false;
    for (std::size_t arc = 0; arc < arcs; ++arc) {
      if (residual_[arc] <= 0) continue;
      const int u = head_[arc ^ 1];
      const double d = potential[u] - cost_[arc];
      if (d < potential[head_[arc]] - kCostTolerance) {
        potential[head_[arc]] = d;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<char> blocked(arcs, 0);
  for (std::size_t arc = 0; arc < arcs; arc += 2) {
    const double reduced =
        -cost_[arc] + potential[head_[arc + 1]] - potential[head_[arc]];
    if (std::abs(reduced) > kCostTolerance) blocked[arc] = blocked[arc + 1] = 1;
  }

  // Reverse breadth-first search: toward[u] is the arc leaving u on a
  // shortest usable path to `target`, or -1.
  std::vector<int> toward(nodes);
  auto search = [&](int target) {
    std::fill(toward.begin(), toward.end(), -1);
    std::vector<int> queue{target};
    toward[target] = -2;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int v = queue[k];
      for (int out : adjacency_[v]) {
        const int in = out ^ 1;  // arc head_[out] -> v
        const int u = head_[out];
        if (toward[u] != -1 || residual_[in] <= 0 || blocked[in]) continue;
        toward[u] = in;
        queue.push_back(u);
      }
    }
  };

  std::vector<std::pair<int, int>> by_id;  // (paper id, local index)
  for (std::size_t k = 0; k < papers_.size(); ++k) {
    by_id.emplace_back(papers_[k], static_cast<int>(k));
  }
  std::sort(by_id.begin(), by_id.end());
  for (int i = 0; i < num_reviewers_; ++i) {
    const int from = ReviewerNode(i);
    bool stale = true;
    for (auto [paper, local] : by_id) {
      const int arc =
          pair_arc_[static_cast<std::size_t>(i) * papers_.size() + local];
      if (arc < 0 || blocked[arc]) continue;
      if (residual_[arc] == 0) {
        blocked[arc + 1] = 1;  // keep it
        stale = true;
        continue;
      }
      if (stale) {
        search(from);
        stale = false;
      }
      const int to = PaperNode(local);
      if (toward[to] == -1) {
        blocked[arc] = 1;  // cannot be added without dropping a kept pair
        continue;
      }
      --residual_[arc];
      ++residual_[arc + 1];
      for (int v = to; v != from; v = head_[toward[v]]) {
        --residual_[toward[v]];
        ++residual_[toward[v] ^ 1];
      }
      blocked[arc + 1] = 1;
      stale = true;
    }
  }
}

std::vector<std::pair<int, int>> FlowNetwork::FlowPairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : inserted_) {
    const int arc = PairArc(i, j);
    if (residual_[arc] == 0) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FlowNetwork::DebugString() const {
  std::ostringstream out;
  for (std::size_t arc = 0; arc < head_.size(); arc += 2) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d %d cap=%d flow=%d cost=%.10g\n",
                  head_[arc + 1], head_[arc], capacity_[arc],
                  capacity_[arc] - residual_[arc], cost_[arc]);
    out << buf;
  }
  return out.str();
}

FlowNetwork BuildNetwork(int kappa, const std::vector<int>& papers,
                         const SimilarityMatrix& s,
                         const std::vector<int>& reviewer_capacity) {
  if (kappa < 1) throw ArgumentError("kappa must be at least 1");
  if (static_cast<int>(reviewer_capacity.size()) != s.num_reviewers()) {
    throw DimensionError("capacity vector length differs from reviewer count");
  }
  for (int j : papers) {
    if (j < 0 || j >= s.num_papers()) {
      throw DimensionError("paper id out of range");
    }
  }
  return FlowNetwork(s.num_reviewers(), papers,
                     std::vector<int>(papers.size(), kappa), reviewer_capacity);
}

}  // namespace pr4a
