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

#include "pr4a/core.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace pr4a {
namespace {

double ParseNumber(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad number '" + text + "' in " + context);
  }
}

std::string FormatShort(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void CheckShape(const Assignment& a, const SimilarityMatrix& s) {
  if (a.num_reviewers() != s.num_reviewers() ||
      a.num_papers() != s.num_papers()) {
    throw DimensionError("assignment is " + std::to_string(a.num_reviewers()) +
                         "x" + std::to_string(a.num_papers()) +
                         " but similarity matrix is " +
                         std::to_string(s.num_reviewers()) + "x" +
                         std::to_string(s.num_papers()));
  }
}

void CheckNoConflicts(const Assignment& a, const SimilarityMatrix& s) {
  for (int i = 0; i < a.num_reviewers(); ++i) {
    for (int j = 0; j < a.num_papers(); ++j) {
      if (a.is_assigned(i, j) && s.is_conflict(i, j)) {
        throw InvalidAssignmentError("reviewer " + std::to_string(i) +
                                     " assigned to conflicting paper " +
                                     std::to_string(j));
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SimilarityMatrix

SimilarityMatrix::SimilarityMatrix(int n, int m, std::vector<double> values,
                                   std::vector<std::uint8_t> conflict)
    : num_reviewers_(n),
      num_papers_(m),
      values_(std::move(values)),
      conflict_(std::move(conflict)) {}

SimilarityMatrix SimilarityMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  return FromRows(rows, {});
}

SimilarityMatrix SimilarityMatrix::FromRows(
    const std::vector<std::vector<double>>& rows,
    const std::vector<std::pair<int, int>>& conflicts) {
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw ArgumentError("need at least 2 reviewers");
  const int m = static_cast<int>(rows.front().size());
  if (m < 2) throw ArgumentError("need at least 2 papers");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw DimensionError("row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m));
    }
    for (int j = 0; j < m; ++j) {
      const double v = rows[i][j];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ArgumentError("similarity (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") = " + FormatShort(v) +
                            " outside [0, 1]");
      }
      values.push_back(v);
    }
  }
  std::vector<std::uint8_t> conflict(values.size(), 0);
  for (auto [i, j] : conflicts) {
    if (i < 0 || i >= n || j < 0 || j >= m) {
      throw DimensionError("conflict cell out of range");
    }
    conflict[static_cast<std::size_t>(i) * m + j] = 1;
    values[static_cast<std::size_t>(i) * m + j] = 0.0;
  }
  return SimilarityMatrix(n, m, std::move(values), std::move(conflict));
}

SimilarityMatrix SimilarityMatrix::Constant(int num_reviewers, int num_papers,
                                            double value) {
  return FromRows(std::vector<std::vector<double>>(
      num_reviewers, std::vector<double>(num_papers, value)));
}

SimilarityMatrix SimilarityMatrix::WithConflicts(
    std::span<const std::pair<int, int>> cells) const {
  SimilarityMatrix copy = *this;
  for (auto [i, j] : cells) {
    if (i < 0 || i >= num_reviewers_ || j < 0 || j >= num_papers_) {
      throw DimensionError("conflict cell out of range");
    }
    copy.conflict_[Index(i, j)] = 1;
    copy.values_[Index(i, j)] = 0.0;
  }
  return copy;
}

double SimilarityMatrix::MaxEntry() const {
  double best = -kInfinity;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!conflict_[k]) best = std::max(best, values_[k]);
  }
  if (best == -kInfinity) throw ArgumentError("every cell is a conflict");
  return best;
}

double SimilarityMatrix::MinEntry() const {
  double best = kInfinity;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!conflict_[k]) best = std::min(best, values_[k]);
  }
  if (best == kInfinity) throw ArgumentError("every cell is a conflict");
  return best;
}

int SimilarityMatrix::NumConflicts() const {
  return static_cast<int>(std::count(conflict_.begin(), conflict_.end(), 1));
}

// ---------------------------------------------------------------------------
// LoadConstraints

LoadConstraints LoadConstraints::Uniform(int num_reviewers, int num_papers,
                                         int lambda, int mu) {
  LoadConstraints lc;
  lc.paper_demand.assign(num_papers, lambda);
  lc.reviewer_capacity.assign(num_reviewers, mu);
  return lc;
}

int LoadConstraints::MaxDemand() const {
  return paper_demand.empty()
             ? 0
             : *std::max_element(paper_demand.begin(), paper_demand.end());
}

int LoadConstraints::TotalDemand() const {
  return std::accumulate(paper_demand.begin(), paper_demand.end(), 0);
}

bool LoadConstraints::IsUniformDemand() const {
  return std::adjacent_find(paper_demand.begin(), paper_demand.end(),
                            std::not_equal_to<>()) == paper_demand.end();
}

void LoadConstraints::Validate(int num_reviewers, int num_papers) const {
  if (this->num_papers() != num_papers ||
      this->num_reviewers() != num_reviewers) {
    throw DimensionError(
        "loads cover " + std::to_string(this->num_reviewers()) +
        " reviewers and " + std::to_string(this->num_papers()) +
        " papers, instance has " + std::to_string(num_reviewers) + " and " +
        std::to_string(num_papers));
  }
  for (int j = 0; j < num_papers; ++j) {
    if (paper_demand[j] <= 0 || paper_demand[j] > num_reviewers) {
      throw ArgumentError("demand of paper " + std::to_string(j) + " is " +
                          std::to_string(paper_demand[j]) +
                          ", must be in [1, n]");
    }
  }
  long long capacity = 0;
  for (int i = 0; i < num_reviewers; ++i) {
    if (reviewer_capacity[i] < 0) {
      throw ArgumentError("capacity of reviewer " + std::to_string(i) +
                          " is negative");
    }
    capacity += reviewer_capacity[i];
  }
  if (capacity < TotalDemand()) {
    throw ArgumentError("total reviewer capacity " + std::to_string(capacity) +
                        " is below total paper demand " +
                        std::to_string(TotalDemand()));
  }
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(int num_reviewers, int num_papers)
    : num_reviewers_(num_reviewers),
      num_papers_(num_papers),
      cells_(static_cast<std::size_t>(num_reviewers) * num_papers, 0) {}

std::vector<int> Assignment::ReviewersOf(int paper) const {
  std::vector<int> out;
  for (int i = 0; i < num_reviewers_; ++i) {
    if (is_assigned(i, paper)) out.push_back(i);
  }
  return out;
}

int Assignment::PaperLoad(int paper) const {
  int load = 0;
  for (int i = 0; i < num_reviewers_; ++i) load += is_assigned(i, paper);
  return load;
}

int Assignment::ReviewerLoad(int reviewer) const {
  int load = 0;
  for (int j = 0; j < num_papers_; ++j) load += is_assigned(reviewer, j);
  return load;
}

int Assignment::NumPairs() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

std::vector<std::pair<int, int>> Assignment::Pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < num_reviewers_; ++i) {
    for (int j = 0; j < num_papers_; ++j) {
      if (is_assigned(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// NoiseModel

NoiseModel NoiseModel::ScaledOneMinusS(double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw ArgumentError("noise scale must be finite and non-negative");
  }
  return NoiseModel(Kind::kScaledOneMinusS, scale);
}

NoiseModel NoiseModel::Constant(double variance) {
  if (!(variance >= 0.0) || !std::isfinite(variance)) {
    throw ArgumentError("noise variance must be finite and non-negative");
  }
  return NoiseModel(Kind::kConstant, variance);
}

NoiseModel NoiseModel::Parse(const std::string& spec) {
  if (spec == "one-minus-s") return OneMinusS();
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (colon != std::string::npos) {
    const double param = ParseNumber(spec.substr(colon + 1), "noise spec");
    if (name == "scaled-one-minus-s") return ScaledOneMinusS(param);
    if (name == "constant") return Constant(param);
  }
  throw ParseError("unknown noise model '" + spec + "'");
}

NoiseModel NoiseModel::WithVarianceFloor(double floor) const {
  if (!(floor > 0.0)) throw ArgumentError("variance floor must be positive");
  NoiseModel copy = *this;
  copy.variance_floor_ = floor;
  return copy;
}

double NoiseModel::h(double s) const {
  switch (kind_) {
    case Kind::kOneMinusS:
      return std::max(0.0, 1.0 - s);
    case Kind::kScaledOneMinusS:
      return std::max(0.0, param_ * (1.0 - s));
    case Kind::kConstant:
      return param_;
  }
  return 0.0;
}

double NoiseModel::EffectiveVariance(double s) const {
  return std::max(h(s), variance_floor_);
}

std::string NoiseModel::Name() const {
  switch (kind_) {
    case Kind::kOneMinusS:
      return "one-minus-s";
    case Kind::kScaledOneMinusS:
      return "scaled-one-minus-s:" + FormatShort(param_);
    case Kind::kConstant:
      return "constant:" + FormatShort(param_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Transform

Transform Transform::Threshold(double zeta) {
  if (!std::isfinite(zeta)) throw ArgumentError("threshold must be finite");
  return Transform(Kind::kThreshold, {}, zeta);
}

Transform Transform::Parse(const std::string& spec, const NoiseModel& noise) {
  if (spec == "identity") return Identity();
  if (spec == "inverse-one-minus-s") {
    return InverseNoise(NoiseModel::OneMinusS());
  }
  if (spec == "inverse-h") return InverseNoise(noise);
  if (spec == "one-minus-h") return OneMinusNoise(noise);
  if (spec.rfind("threshold:", 0) == 0) {
    return Threshold(ParseNumber(spec.substr(10), "transform spec"));
  }
  throw ParseError("unknown transform '" + spec + "'");
}

double Transform::operator()(double s) const {
  switch (kind_) {
    case Kind::kIdentity:
      return s;
    case Kind::kInverseNoise: {
      const double h = noise_.h(s);
      return h <= 0.0 ? kInfinity : 1.0 / h;
    }
    case Kind::kOneMinusNoise:
      return std::max(0.0, 1.0 - noise_.h(s));
    case Kind::kThreshold:
      return s > zeta_ ? 1.0 : 0.0;
  }
  return 0.0;
}

std::string Transform::Name() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kInverseNoise:
      return noise_.kind() == NoiseModel::Kind::kOneMinusS
                 ? "inverse-one-minus-s"
                 : "inverse-h[" + noise_.Name() + "]";
    case Kind::kOneMinusNoise:
      return "one-minus-h[" + noise_.Name() + "]";
    case Kind::kThreshold:
      return "threshold:" + FormatShort(zeta_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Metrics

std::string ValidationReport::Summary() const {
  if (ok()) return "OK";
  std::ostringstream out;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) out << "; ";
    out << violations[k].message;
  }
  return out.str();
}

ValidationReport ValidateAssignment(const Assignment& a,
                                    const SimilarityMatrix& s,
                                    const LoadConstraints& lc) {
  CheckShape(a, s);
  if (lc.num_papers() != s.num_papers() ||
      lc.num_reviewers() != s.num_reviewers()) {
    throw DimensionError("load constraints do not match the instance shape");
  }
  ValidationReport report;
  for (int j = 0; j < a.num_papers(); ++j) {
    const int load = a.PaperLoad(j);
    if (load < lc.paper_demand[j]) {
      report.violations.push_back(
          {Violation::Kind::kDemandUnmet, -1, j,
           "paper " + std::to_string(j) + " demand unmet (" +
               std::to_string(load) + " of " +
               std::to_string(lc.paper_demand[j]) + ")"});
    } else if (load > lc.paper_demand[j]) {
      report.violations.push_back(
          {Violation::Kind::kDemandExceeded, -1, j,
           "paper " + std::to_string(j) + " over-assigned (" +
               std::to_string(load) + " of " +
               std::to_string(lc.paper_demand[j]) + ")"});
    }
  }
  for (int i = 0; i < a.num_reviewers(); ++i) {
    const int load = a.ReviewerLoad(i);
    if (load > lc.reviewer_capacity[i]) {
      report.violations.push_back(
          {Violation::Kind::kCapacityExceeded, i, -1,
           "reviewer " + std::to_string(i) + " capacity exceeded (" +
               std::to_string(load) + " > " +
               std::to_string(lc.reviewer_capacity[i]) + ")"});
    }
  }
  for (int i = 0; i < a.num_reviewers(); ++i) {
    for (int j = 0; j < a.num_papers(); ++j) {
      if (a.is_assigned(i, j) && s.is_conflict(i, j)) {
        report.violations.push_back(
            {Violation::Kind::kConflictAssigned, i, j,
             "conflict assigned: reviewer " + std::to_string(i) +
                 " to paper " + std::to_string(j)});
      }
    }
  }
  return report;
}

double PaperSum(const Assignment& a, const SimilarityMatrix& s,
                const Transform& f, int paper) {
  double sum = 0.0;
  for (int i = 0; i < a.num_reviewers(); ++i) {
    if (a.is_assigned(i, paper)) sum += f(s.at(i, paper));
  }
  return sum;
}

double Fairness(const Assignment& a, const SimilarityMatrix& s,
                const Transform& f) {
  std::vector<int> all(s.num_papers());
  std::iota(all.begin(), all.end(), 0);
  return Fairness(a, s, f, all);
}

double Fairness(const Assignment& a, const SimilarityMatrix& s,
                const Transform& f, std::span<const int> papers) {
  CheckShape(a, s);
  CheckNoConflicts(a, s);
  if (papers.empty()) throw ArgumentError("fairness over an empty paper set");
  double worst = kInfinity;
  for (int j : papers) worst = std::min(worst, PaperSum(a, s, f, j));
  return worst;
}

double CumulativeQuality(const Assignment& a, const SimilarityMatrix& s) {
  CheckShape(a, s);
  CheckNoConflicts(a, s);
  double total = 0.0;
  for (int j = 0; j < a.num_papers(); ++j) {
    total += PaperSum(a, s, Transform::Identity(), j);
  }
  return total;
}

std::vector<double> PaperSumProfile(const Assignment& a,
                                    const SimilarityMatrix& s,
                                    const Transform& f) {
  CheckShape(a, s);
  CheckNoConflicts(a, s);
  std::vector<double> sums(a.num_papers());
  for (int j = 0; j < a.num_papers(); ++j) sums[j] = PaperSum(a, s, f, j);
  std::sort(sums.begin(), sums.end());
  return sums;
}

int HammingDistance(std::span<const int> set1, std::span<const int> set2) {
  std::set<int> a(set1.begin(), set1.end());
  std::set<int> b(set2.begin(), set2.end());
  std::vector<int> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return static_cast<int>(diff.size());
}

double ScaleExtended(int k, double x) { return k == 0 ? 0.0 : k * x; }

}  // namespace pr4a
