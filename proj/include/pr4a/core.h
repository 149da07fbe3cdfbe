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

// Domain types shared by every module: similarity matrices with conflict
// markers, load constraints, binary assignments, similarity transforms and
// noise models, plus the fairness / cumulative-quality / Hamming metrics.
//
// Utilities ("extended reals") are plain doubles in [0, +inf]. Addition
// follows IEEE semantics, so +inf + x == +inf and +inf compares maximal.

#ifndef PR4A_CORE_H_
#define PR4A_CORE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pr4a {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of the arguments disagree (matrix vs. loads vs. assignment).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value violates a documented precondition (k out of range, bad kappa...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An assignment breaks a feasibility constraint where a valid one is needed.
class InvalidAssignmentError : public Error {
 public:
  using Error::Error;
};

// No assignment meets the demands. `flow_value` is the largest number of
// (reviewer, paper) slots that could be filled; `target` is the number needed.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, int flow_value, int target)
      : Error(what), flow_value_(flow_value), target_(target) {}
  int flow_value() const { return flow_value_; }
  int target() const { return target_; }

 private:
  int flow_value_;
  int target_;
};

// The exact oracle refused an instance or ran past its node budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Input files could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// n x m matrix of similarities in [0, 1]; any cell may instead hold the
// CONFLICT marker, meaning the pair may never be assigned. Immutable once
// built; WithConflicts() returns a masked copy.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;

  // Every row must have the same length; n >= 2, m >= 2, entries in [0, 1].
  static SimilarityMatrix FromRows(const std::vector<std::vector<double>>& rows);
  // Same, with the listed (reviewer, paper) cells marked CONFLICT.
  static SimilarityMatrix FromRows(
      const std::vector<std::vector<double>>& rows,
      const std::vector<std::pair<int, int>>& conflicts);
  // Every entry equal to `value`.
  static SimilarityMatrix Constant(int num_reviewers, int num_papers,
                                   double value);

  int num_reviewers() const { return num_reviewers_; }
  int num_papers() const { return num_papers_; }

  bool is_conflict(int reviewer, int paper) const {
    return conflict_[Index(reviewer, paper)] != 0;
  }
  // Similarity of a non-conflict cell. Conflict cells read as 0 here; callers
  // are expected to check is_conflict() first.
  double at(int reviewer, int paper) const {
    return values_[Index(reviewer, paper)];
  }

  SimilarityMatrix WithConflicts(
      std::span<const std::pair<int, int>> cells) const;

  // Largest / smallest non-conflict entry (s*_0 and s*_inf).
  double MaxEntry() const;
  double MinEntry() const;
  int NumConflicts() const;

  bool operator==(const SimilarityMatrix&) const = default;

 private:
  SimilarityMatrix(int n, int m, std::vector<double> values,
                   std::vector<std::uint8_t> conflict);
  std::size_t Index(int reviewer, int paper) const {
    return static_cast<std::size_t>(reviewer) * num_papers_ + paper;
  }

  int num_reviewers_ = 0;
  int num_papers_ = 0;
  std::vector<double> values_;
  std::vector<std::uint8_t> conflict_;
};

// Per-paper demand lambda^(j) and per-reviewer capacity mu^(i).
struct LoadConstraints {
  std::vector<int> paper_demand;
  std::vector<int> reviewer_capacity;

  static LoadConstraints Uniform(int num_reviewers, int num_papers, int lambda,
                                 int mu);

  int num_papers() const { return static_cast<int>(paper_demand.size()); }
  int num_reviewers() const {
    return static_cast<int>(reviewer_capacity.size());
  }
  int MaxDemand() const;
  int TotalDemand() const;
  // True when every paper has the same demand; lambda is then MaxDemand().
  bool IsUniformDemand() const;

  // Throws DimensionError on size mismatch and ArgumentError when a demand is
  // non-positive or exceeds n, a capacity is negative, or total capacity is
  // below total demand.
  void Validate(int num_reviewers, int num_papers) const;
};

// Binary reviewer x paper allocation.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int num_reviewers, int num_papers);

  int num_reviewers() const { return num_reviewers_; }
  int num_papers() const { return num_papers_; }

  bool is_assigned(int reviewer, int paper) const {
    return cells_[Index(reviewer, paper)] != 0;
  }
  void Assign(int reviewer, int paper) { cells_[Index(reviewer, paper)] = 1; }
  void Unassign(int reviewer, int paper) { cells_[Index(reviewer, paper)] = 0; }

  // Reviewers assigned to `paper`, ascending.
  std::vector<int> ReviewersOf(int paper) const;
  int PaperLoad(int paper) const;
  int ReviewerLoad(int reviewer) const;
  int NumPairs() const;
  // All assigned (reviewer, paper) pairs in row-major order.
  std::vector<std::pair<int, int>> Pairs() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::size_t Index(int reviewer, int paper) const {
    return static_cast<std::size_t>(reviewer) * num_papers_ + paper;
  }

  int num_reviewers_ = 0;
  int num_papers_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Monotone non-increasing map h from similarity to reviewer noise variance.
// The effective variance is max(h(s), variance_floor) so that precision
// weighting never divides by zero.
class NoiseModel {
 public:
  enum class Kind {
    kOneMinusS,        // h(s) = 1 - s
    kScaledOneMinusS,  // h(s) = c (1 - s)
    kConstant,         // h(s) = c
  };
  static constexpr double kDefaultVarianceFloor = 1e-12;

  NoiseModel() = default;
  static NoiseModel OneMinusS() { return NoiseModel(Kind::kOneMinusS, 1.0); }
  static NoiseModel ScaledOneMinusS(double scale);
  static NoiseModel Constant(double variance);
  // "one-minus-s", "scaled-one-minus-s:<c>" or "constant:<c>".
  static NoiseModel Parse(const std::string& spec);

  Kind kind() const { return kind_; }
  double param() const { return param_; }
  double variance_floor() const { return variance_floor_; }
  NoiseModel WithVarianceFloor(double floor) const;

  double h(double s) const;
  double EffectiveVariance(double s) const;
  std::string Name() const;

 private:
  NoiseModel(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_ = Kind::kOneMinusS;
  double param_ = 1.0;
  double variance_floor_ = kDefaultVarianceFloor;
};

// Monotone non-decreasing map f: [0, 1] -> [0, +inf] from similarity to the
// utility summed by the fairness objective.
class Transform {
 public:
  enum class Kind {
    kIdentity,       // f(s) = s
    kInverseNoise,   // f(s) = 1 / h(s); +inf where h(s) = 0
    kOneMinusNoise,  // f(s) = 1 - h(s), clamped at 0
    kThreshold,      // f(s) = 1{s > zeta}
  };

  Transform() = default;
  static Transform Identity() { return Transform(Kind::kIdentity, {}, 0.0); }
  static Transform InverseNoise(const NoiseModel& noise) {
    return Transform(Kind::kInverseNoise, noise, 0.0);
  }
  static Transform OneMinusNoise(const NoiseModel& noise) {
    return Transform(Kind::kOneMinusNoise, noise, 0.0);
  }
  static Transform Threshold(double zeta);
  // "identity", "inverse-one-minus-s", "one-minus-h", "threshold:<zeta>".
  // The noise model backs "one-minus-h" (and "inverse-h").
  static Transform Parse(const std::string& spec,
                         const NoiseModel& noise = NoiseModel::OneMinusS());

  Kind kind() const { return kind_; }
  double operator()(double s) const;
  std::string Name() const;

 private:
  Transform(Kind kind, NoiseModel noise, double zeta)
      : kind_(kind), noise_(noise), zeta_(zeta) {}

  Kind kind_ = Kind::kIdentity;
  NoiseModel noise_;
  double zeta_ = 0.0;
};

struct Violation {
  enum class Kind { kDemandUnmet, kDemandExceeded, kCapacityExceeded,
                    kConflictAssigned };
  Kind kind;
  int reviewer = -1;  // -1 when not applicable
  int paper = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

// Checks column sums against demand, row sums against capacity, and that no
// CONFLICT cell is used. Throws DimensionError if the shapes disagree.
ValidationReport ValidateAssignment(const Assignment& a,
                                    const SimilarityMatrix& s,
                                    const LoadConstraints& lc);

// Sum of f(s_ij) over the reviewers of `paper`.
double PaperSum(const Assignment& a, const SimilarityMatrix& s,
                const Transform& f, int paper);

// min_j sum_{i in R(j)} f(s_ij). Throws InvalidAssignmentError if a conflict
// cell is assigned and DimensionError on shape mismatch.
double Fairness(const Assignment& a, const SimilarityMatrix& s,
                const Transform& f);
// Same, restricted to the listed papers.
double Fairness(const Assignment& a, const SimilarityMatrix& s,
                const Transform& f, std::span<const int> papers);

// sum_j sum_{i in R(j)} s_ij.
double CumulativeQuality(const Assignment& a, const SimilarityMatrix& s);

// Per-paper sums of f(s_ij), sorted ascending.
std::vector<double> PaperSumProfile(const Assignment& a,
                                    const SimilarityMatrix& s,
                                    const Transform& f);

// |set1 symmetric-difference set2|; duplicates inside one set are ignored.
int HammingDistance(std::span<const int> set1, std::span<const int> set2);

// k * x with the convention 0 * inf = 0.
double ScaleExtended(int k, double x);

}  // namespace pr4a

#endif  // PR4A_CORE_H_
