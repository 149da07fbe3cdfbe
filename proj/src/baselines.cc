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

#include "pr4a/baselines.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pr4a/assign.h"
#include "pr4a/flow.h"

namespace pr4a {
namespace {

std::vector<int> AllPapers(int m) {
  std::vector<int> papers(m);
  std::iota(papers.begin(), papers.end(), 0);
  return papers;
}

// Max-cost max-flow over every non-conflict pair with the given costs.
Assignment FullFlow(const SimilarityMatrix& s, const LoadConstraints& lc,
                    const std::vector<double>& cost) {
  const int n = s.num_reviewers();
  const int m = s.num_papers();
  lc.Validate(n, m);
  FlowNetwork net(n, AllPapers(m), lc.paper_demand, lc.reviewer_capacity);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!s.is_conflict(i, j)) {
        net.InsertEdge(i, j, cost[static_cast<std::size_t>(i) * m + j]);
      }
    }
  }
  const auto chosen = net.SelectMaxCostMaxFlow();
  const int target = lc.TotalDemand();
  if (static_cast<int>(chosen.size()) < target) {
    throw InfeasibleError("only " + std::to_string(chosen.size()) + " of " +
                              std::to_string(target) +
                              " review slots can be filled",
                          static_cast<int>(chosen.size()), target);
  }
  Assignment a(n, m);
  for (auto [i, j] : chosen) a.Assign(i, j);
  return a;
}

// Swaps reviewers between two papers when the swap leaves the total
// similarity unchanged and raises the smaller of the two paper sums. Each
// accepted swap lifts the sorted profile, so the loop terminates.
void BalanceEqualTotalSwaps(Assignment& a, const SimilarityMatrix& s) {
  constexpr double kTolerance = 1e-9;
  const int m = s.num_papers();
  std::vector<double> sums(m);
  for (int j = 0; j < m; ++j) sums[j] = PaperSum(a, s, Transform::Identity(), j);
  auto usable = [&](int i, int j) {
    return !s.is_conflict(i, j) && !a.is_assigned(i, j);
  };
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return sums[x] < sums[y]; });
    for (int w : order) {
      for (int p = 0; p < m && !improved; ++p) {
        if (p == w) continue;
        const double floor = std::min(sums[w], sums[p]);
        for (int x : a.ReviewersOf(w)) {
          for (int y : a.ReviewersOf(p)) {
            if (!usable(y, w) || !usable(x, p)) continue;
            const double new_w = sums[w] - s.at(x, w) + s.at(y, w);
            const double new_p = sums[p] - s.at(y, p) + s.at(x, p);
            if (std::abs(new_w + new_p - sums[w] - sums[p]) > kTolerance) continue;
            if (std::min(new_w, new_p) <= floor + kTolerance) continue;
            a.Unassign(x, w);
            a.Unassign(y, p);
            a.Assign(y, w);
            a.Assign(x, p);
            sums[w] = PaperSum(a, s, Transform::Identity(), w);
            sums[p] = PaperSum(a, s, Transform::Identity(), p);
            improved = true;
            break;
          }
          if (improved) break;
        }
      }
      if (improved) break;
    }
  }
}

struct Option {
  std::uint32_t reviewers;  // bit mask
  double sum;
};

class ThresholdSearch {
 public:
  ThresholdSearch(const std::vector<std::vector<Option>>& options,
                  const std::vector<int>& capacity, std::int64_t& nodes,
                  std::int64_t max_nodes)
      : options_(options),
        left_(capacity),
        nodes_(nodes),
        max_nodes_(max_nodes),
        choice_(options.size(), -1) {}

  // Picks, for every paper, an option with sum >= t so that no reviewer
  // exceeds capacity. Returns the option index per paper.
  std::optional<std::vector<int>> Solve(double t) {
    t_ = t;
    std::fill(choice_.begin(), choice_.end(), -1);
    if (Search(0)) return choice_;
    return std::nullopt;
  }

 private:
  bool Fits(std::uint32_t mask) const {
    for (std::size_t i = 0; i < left_.size(); ++i) {
      if ((mask >> i & 1u) && left_[i] == 0) return false;
    }
    return true;
  }

  void Take(std::uint32_t mask, int delta) {
    for (std::size_t i = 0; i < left_.size(); ++i) {
      if (mask >> i & 1u) left_[i] -= delta;
    }
  }

  bool Search(std::size_t placed) {
    if (++nodes_ > max_nodes_) {
      throw BudgetExceededError("oracle search exceeded " +
                                std::to_string(max_nodes_) + " nodes");
    }
    if (placed == options_.size()) return true;
    // Most constrained open paper first; ties to the lowest paper id.
    int best_paper = -1;
    int best_count = 0;
    for (std::size_t j = 0; j < options_.size(); ++j) {
      if (choice_[j] != -1) continue;
      int count = 0;
      for (const Option& o : options_[j]) {
        if (o.sum >= t_ && Fits(o.reviewers)) ++count;
      }
      if (count == 0) return false;
      if (best_paper < 0 || count < best_count) {
        best_paper = static_cast<int>(j);
        best_count = count;
      }
    }
    const auto& list = options_[best_paper];
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k].sum < t_ || !Fits(list[k].reviewers)) continue;
      choice_[best_paper] = static_cast<int>(k);
      Take(list[k].reviewers, 1);
      const bool ok = Search(placed + 1);
      Take(list[k].reviewers, -1);
      if (ok) return true;
      choice_[best_paper] = -1;
    }
    return false;
  }

  const std::vector<std::vector<Option>>& options_;
  std::vector<int> left_;
  std::int64_t& nodes_;
  std::int64_t max_nodes_;
  std::vector<int> choice_;
  double t_ = 0.0;
};

// Every reviewer subset of size `need` for `paper`, without conflicts, with
// its sum of f in ascending reviewer order. Sorted by decreasing sum, then
// mask.
std::vector<Option> PaperOptions(const SimilarityMatrix& s, const Transform& f,
                                 int paper, int need) {
  std::vector<Option> out;
  const int n = s.num_reviewers();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != need) continue;
    double sum = 0.0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (s.is_conflict(i, paper)) ok = false;
      else sum += f(s.at(i, paper));
    }
    if (ok) out.push_back({mask, sum});
  }
  std::stable_sort(out.begin(), out.end(), [](const Option& a, const Option& b) {
    return a.sum > b.sum;
  });
  return out;
}

}  // namespace

Assignment TpmsAssign(const SimilarityMatrix& s, const LoadConstraints& lc) {
  std::vector<double> cost(static_cast<std::size_t>(s.num_reviewers()) *
                           s.num_papers());
  for (int i = 0; i < s.num_reviewers(); ++i) {
    for (int j = 0; j < s.num_papers(); ++j) {
      cost[static_cast<std::size_t>(i) * s.num_papers() + j] = s.at(i, j);
    }
  }
  Assignment a = FullFlow(s, lc, cost);
  BalanceEqualTotalSwaps(a, s);
  return a;
}

Assignment HartvigsenAssign(const SimilarityMatrix& s,
                            const LoadConstraints& lc) {
  lc.Validate(s.num_reviewers(), s.num_papers());
  auto a = BuildCandidate(1, AllPapers(s.num_papers()), lc.paper_demand, s,
                          lc.reviewer_capacity);
  if (!a) {
    throw InfeasibleError("single-strong-reviewer assignment is infeasible", 0,
                          lc.TotalDemand());
  }
  return *a;
}

Assignment RandomAssign(const SimilarityMatrix& s, const LoadConstraints& lc,
                        std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x52414e44u};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> cost(static_cast<std::size_t>(s.num_reviewers()) *
                           s.num_papers());
  for (double& c : cost) c = unit(rng);
  return FullFlow(s, lc, cost);
}

OracleResult HardBruteforce(const SimilarityMatrix& s,
                            const LoadConstraints& lc, const Transform& f,
                            const OracleBudget& budget) {
  const int n = s.num_reviewers();
  const int m = s.num_papers();
  if (n > budget.max_reviewers || m > budget.max_papers || n > 30) {
    throw BudgetExceededError(
        "oracle too large: " + std::to_string(n) + "x" + std::to_string(m) +
        " exceeds the " + std::to_string(budget.max_reviewers) + "x" +
        std::to_string(budget.max_papers) + " cap");
  }
  lc.Validate(n, m);

  std::vector<std::vector<Option>> options(m);
  std::vector<double> thresholds;
  for (int j = 0; j < m; ++j) {
    options[j] = PaperOptions(s, f, j, lc.paper_demand[j]);
    for (const Option& o : options[j]) thresholds.push_back(o.sum);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  OracleResult result;
  ThresholdSearch search(options, lc.reviewer_capacity, result.nodes,
                         budget.max_search_nodes);
  if (thresholds.empty()) {
    throw InfeasibleError("no feasible assignment", 0, lc.TotalDemand());
  }
  auto best = search.Solve(thresholds.front());
  if (!best) throw InfeasibleError("no feasible assignment", 0, lc.TotalDemand());
  // thresholds[lo] is feasible; thresholds[hi] (if < size) is not.
  std::size_t lo = 0;
  std::size_t hi = thresholds.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto found = search.Solve(thresholds[mid])) {
      best = std::move(found);
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.assignment = Assignment(n, m);
  for (int j = 0; j < m; ++j) {
    const std::uint32_t mask = options[j][(*best)[j]].reviewers;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) result.assignment.Assign(i, j);
    }
  }
  result.fairness = Fairness(result.assignment, s, f);
  return result;
}

}  // namespace pr4a
