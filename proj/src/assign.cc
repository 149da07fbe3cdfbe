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

#include "pr4a/assign.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "pr4a/coverage.h"
#include "pr4a/flow.h"

namespace pr4a {
namespace {

struct Candidate {
  double similarity;
  int reviewer;
  int paper;
};

// Non-conflict pairs on `papers`, by decreasing similarity then (reviewer,
// paper).
std::vector<Candidate> SortedPairs(const std::vector<int>& papers,
                                   const SimilarityMatrix& s) {
  std::vector<Candidate> out;
  for (int i = 0; i < s.num_reviewers(); ++i) {
    for (int j : papers) {
      if (!s.is_conflict(i, j)) out.push_back({s.at(i, j), i, j});
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return std::tie(a.reviewer, a.paper) < std::tie(b.reviewer, b.paper);
  });
  return out;
}

void InsertRange(FlowNetwork& net, const std::vector<Candidate>& pairs,
                 std::size_t begin, std::size_t end) {
  for (std::size_t k = begin; k < end; ++k) {
    net.InsertEdge(pairs[k].reviewer, pairs[k].paper, pairs[k].similarity);
  }
}

std::vector<int> Loads(const Assignment& a) {
  std::vector<int> loads(a.num_reviewers());
  for (int i = 0; i < a.num_reviewers(); ++i) loads[i] = a.ReviewerLoad(i);
  return loads;
}

// Sorted per-paper sums of raw similarity over `papers`.
std::vector<double> SimilarityProfile(const Assignment& a,
                                      const SimilarityMatrix& s,
                                      const std::vector<int>& papers) {
  std::vector<double> sums;
  for (int j : papers) sums.push_back(PaperSum(a, s, Transform::Identity(), j));
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace

SubroutineResult RunSubroutine(const std::vector<int>& papers,
                               const std::vector<int>& demand,
                               const SimilarityMatrix& s,
                               const std::vector<int>& capacity,
                               const SubroutineOptions& options) {
  const int n = s.num_reviewers();
  if (papers.size() != demand.size()) {
    throw DimensionError("one demand per paper expected");
  }
  if (static_cast<int>(capacity.size()) != n) {
    throw DimensionError("capacity vector length differs from reviewer count");
  }
  std::vector<int> active;
  std::vector<int> active_demand;
  for (std::size_t k = 0; k < papers.size(); ++k) {
    if (papers[k] < 0 || papers[k] >= s.num_papers()) {
      throw DimensionError("paper id out of range");
    }
    if (demand[k] < 0) throw ArgumentError("negative demand");
    if (demand[k] > 0) {
      active.push_back(papers[k]);
      active_demand.push_back(demand[k]);
    }
  }
  SubroutineResult result;
  result.assignment = Assignment(n, s.num_papers());
  result.min_similarity = kInfinity;
  if (active.empty()) return result;
  if (options.heuristic == Heuristic::kCoverage && options.topics == nullptr) {
    throw ArgumentError("coverage heuristic needs a topic profile");
  }

  const int target =
      std::accumulate(active_demand.begin(), active_demand.end(), 0);
  const std::vector<Candidate> pairs = SortedPairs(active, s);
  const FlowNetwork base(n, active, active_demand, capacity);

  FlowNetwork net = base;
  std::size_t prefix = 0;
  if (options.binary_search) {
    FlowNetwork full = base;
    InsertRange(full, pairs, 0, pairs.size());
    const int best = full.MaxFlowValue();
    if (best < target) {
      throw InfeasibleError("only " + std::to_string(best) + " of " +
                                std::to_string(target) +
                                " review slots can be filled",
                            best, target);
    }
    // net holds the longest prefix known to fall short; hi is the shortest
    // prefix known to reach the target.
    std::size_t lo = 0;
    std::size_t hi = pairs.size();
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      FlowNetwork probe = net;
      InsertRange(probe, pairs, lo, mid);
      if (probe.MaxFlowValue() >= target) {
        hi = mid;
      } else {
        net = std::move(probe);
        lo = mid;
      }
    }
    InsertRange(net, pairs, lo, hi);
    net.MaxFlowValue();
    prefix = hi;
  } else {
    while (prefix < pairs.size() && net.CurrentFlowValue() < target) {
      InsertRange(net, pairs, prefix, prefix + 1);
      ++prefix;
      net.MaxFlowValue();
    }
    if (net.CurrentFlowValue() < target) {
      throw InfeasibleError("only " + std::to_string(net.CurrentFlowValue()) +
                                " of " + std::to_string(target) +
                                " review slots can be filled",
                            net.CurrentFlowValue(), target);
    }
  }

  const std::vector<std::pair<int, int>> chosen =
      options.heuristic == Heuristic::kCoverage
          ? GreedyCoverageSelect(net, *options.topics)
          : net.SelectMaxCostMaxFlow();
  if (static_cast<int>(chosen.size()) != target) {
    throw Error("internal: selected flow lost value");
  }
  for (auto [i, j] : chosen) result.assignment.Assign(i, j);
  result.min_similarity = pairs[prefix - 1].similarity;
  result.edges_inserted = static_cast<int>(prefix);
  return result;
}

SubroutineResult RunSubroutine(int kappa, const std::vector<int>& papers,
                               const SimilarityMatrix& s,
                               const std::vector<int>& capacity,
                               const SubroutineOptions& options) {
  if (kappa < 1) throw ArgumentError("kappa must be at least 1");
  if (papers.empty()) throw ArgumentError("empty paper set");
  return RunSubroutine(papers, std::vector<int>(papers.size(), kappa), s,
                       capacity, options);
}

double CriticalSimilarity(int kappa, const SimilarityMatrix& s,
                          const LoadConstraints& lc) {
  lc.Validate(s.num_reviewers(), s.num_papers());
  if (kappa == 0) return s.MaxEntry();
  if (kappa == kKappaInfinity) return s.MinEntry();
  if (kappa < 0 || kappa > lc.MaxDemand()) {
    throw ArgumentError("kappa " + std::to_string(kappa) +
                        " outside [0, lambda]");
  }
  std::vector<int> papers(s.num_papers());
  std::iota(papers.begin(), papers.end(), 0);
  std::vector<int> demand(s.num_papers());
  for (int j = 0; j < s.num_papers(); ++j) {
    demand[j] = std::min(kappa, lc.paper_demand[j]);
  }
  return RunSubroutine(papers, demand, s, lc.reviewer_capacity).min_similarity;
}

std::optional<Assignment> BuildCandidate(int kappa,
                                         const std::vector<int>& papers,
                                         const std::vector<int>& paper_demand,
                                         const SimilarityMatrix& s,
                                         const std::vector<int>& capacity,
                                         const SubroutineOptions& options) {
  std::vector<int> core(papers.size());
  std::vector<int> rest(papers.size());
  for (std::size_t k = 0; k < papers.size(); ++k) {
    core[k] = std::min(kappa, paper_demand[k]);
    rest[k] = paper_demand[k] - core[k];
  }
  try {
    Assignment first = RunSubroutine(papers, core, s, capacity, options)
                           .assignment;
    const std::vector<std::pair<int, int>> used = first.Pairs();
    std::vector<int> left = capacity;
    const std::vector<int> loads = Loads(first);
    for (std::size_t i = 0; i < left.size(); ++i) left[i] -= loads[i];
    const SimilarityMatrix masked = s.WithConflicts(used);
    const Assignment second =
        RunSubroutine(papers, rest, masked, left, options).assignment;
    for (auto [i, j] : second.Pairs()) first.Assign(i, j);
    return first;
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

Pr4aResult PeerReview4All(const SimilarityMatrix& s, const LoadConstraints& lc,
                          const Transform& f, const Pr4aOptions& options) {
  const int n = s.num_reviewers();
  const int m = s.num_papers();
  lc.Validate(n, m);
  const int lambda = lc.MaxDemand();

  Pr4aResult result;
  result.assignment = Assignment(n, m);
  std::vector<int> capacity = lc.reviewer_capacity;
  std::vector<int> remaining(m);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::optional<Assignment> previous;  // A_0: last selection restricted to M

  while (!remaining.empty()) {
    Pr4aIteration iteration;
    iteration.remaining_papers = remaining;
    iteration.remaining_capacity = capacity;
    std::vector<int> demand;
    for (int j : remaining) demand.push_back(lc.paper_demand[j]);

    std::vector<std::optional<Assignment>> candidates(lambda + 1);
    candidates[0] = previous;
    for (int kappa = 1; kappa <= lambda; ++kappa) {
      candidates[kappa] = BuildCandidate(kappa, remaining, demand, s, capacity,
                                         options.subroutine);
    }

    int best = -1;
    double best_fairness = 0.0;
    std::vector<double> best_profile;
    iteration.candidate_fairness.resize(lambda + 1);
    // Visit kappa = 1..lambda, then the carried-over selection; later
    // entries win ties, so ties go to the larger kappa and the previous
    // selection is kept when nothing beats it. Among +inf ties the
    // similarity profile is compared first.
    for (int step = 1; step <= lambda + 1; ++step) {
      const int kappa = step % (lambda + 1);
      if (!candidates[kappa]) continue;
      const double value = Fairness(*candidates[kappa], s, f, remaining);
      iteration.candidate_fairness[kappa] = value;
      bool take = best < 0 || value > best_fairness;
      if (best >= 0 && value == best_fairness) {
        if (value == kInfinity) {
          std::vector<double> profile =
              SimilarityProfile(*candidates[kappa], s, remaining);
          take = profile >= best_profile;
        } else {
          take = true;
        }
      }
      if (take) {
        best = kappa;
        best_fairness = value;
        if (value == kInfinity) {
          best_profile = SimilarityProfile(*candidates[kappa], s, remaining);
        }
      }
    }
    if (best < 0) {
      throw InfeasibleError("no candidate assignment is feasible", 0,
                            std::accumulate(demand.begin(), demand.end(), 0));
    }
    const Assignment& selected = *candidates[best];
    iteration.chosen_kappa = best;
    iteration.fairness = best_fairness;

    if (options.mode == Pr4aMode::kEarlyStop) {
      for (auto [i, j] : selected.Pairs()) result.assignment.Assign(i, j);
      iteration.fixed_papers = remaining;
      result.trace.iterations.push_back(std::move(iteration));
      break;
    }

    std::vector<int> kept;
    Assignment carried = selected;
    for (int j : remaining) {
      if (PaperSum(selected, s, f, j) == best_fairness) {
        iteration.fixed_papers.push_back(j);
        for (int i : selected.ReviewersOf(j)) {
          result.assignment.Assign(i, j);
          --capacity[i];
          carried.Unassign(i, j);
        }
      } else {
        kept.push_back(j);
      }
    }
    remaining = std::move(kept);
    previous = std::move(carried);
    result.trace.iterations.push_back(std::move(iteration));
  }
  return result;
}

ApproximationBound FairnessLowerBound(const SimilarityMatrix& s,
                                      const LoadConstraints& lc,
                                      const Transform& f) {
  lc.Validate(s.num_reviewers(), s.num_papers());
  if (!lc.IsUniformDemand()) {
    throw ArgumentError("the fairness bound needs equal demand on every paper");
  }
  const int lambda = lc.MaxDemand();
  ApproximationBound bound;
  for (int kappa = 0; kappa <= lambda; ++kappa) {
    bound.critical.push_back(CriticalSimilarity(kappa, s, lc));
  }
  bound.critical.push_back(CriticalSimilarity(kKappaInfinity, s, lc));
  const double f_top = f(bound.critical.front());
  const double f_bottom = f(bound.critical.back());

  bound.numerator = 0.0;
  bound.denominator = kInfinity;
  for (int kappa = 1; kappa <= lambda; ++kappa) {
    const double f_kappa = f(bound.critical[kappa]);
    bound.numerator =
        std::max(bound.numerator, ScaleExtended(kappa, f_kappa) +
                                      ScaleExtended(lambda - kappa, f_bottom));
    bound.denominator =
        std::min(bound.denominator, ScaleExtended(kappa - 1, f_top) +
                                        ScaleExtended(lambda - kappa + 1,
                                                      f_kappa));
  }
  const bool both_zero = bound.numerator == 0.0 && bound.denominator == 0.0;
  const bool both_inf =
      bound.numerator == kInfinity && bound.denominator == kInfinity;
  if (both_zero || both_inf || bound.denominator == 0.0) {
    bound.ratio = 1.0;
  } else {
    bound.ratio = bound.numerator / bound.denominator;
  }
  return bound;
}

}  // namespace pr4a
