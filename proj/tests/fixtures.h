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

// Small worked instances shared by the unit and acceptance tests.

#ifndef PR4A_TESTS_FIXTURES_H_
#define PR4A_TESTS_FIXTURES_H_

#include <vector>

#include "pr4a/core.h"

namespace pr4a::fixtures {

// Three reviewers, papers a b c. Reviewer 1 is strong everywhere, 2 weak
// everywhere, 3 in between.
inline SimilarityMatrix ThreeByThree() {
  return SimilarityMatrix::FromRows({{1.0, 1.0, 1.0},
                                     {0.0, 0.0, 0.2},
                                     {0.25, 0.25, 0.5}});
}

// Four by four instance where the algorithm only reaches about half the
// optimum (lambda = mu = 2). Entries 0.31 / 0.29 are 0.3 +- 0.01.
inline SimilarityMatrix HalfApproximation() {
  return SimilarityMatrix::FromRows({{0.31, 1.0, 1.0, 0.0},
                                     {0.29, 0.0, 1.0, 1.0},
                                     {0.0, 0.1, 0.0, 0.3},
                                     {0.0, 0.1, 0.0, 0.3}});
}

// 2 lambda x 2 lambda block matrix [[1, 0.4], [0.4, 0]] on which maximizing
// total similarity leaves half the papers with nothing.
inline SimilarityMatrix CumulativeTrap(int lambda) {
  const int size = 2 * lambda;
  std::vector<std::vector<double>> rows(size, std::vector<double>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const bool top = i < lambda;
      const bool left = j < lambda;
      rows[i][j] = top && left ? 1.0 : (top || left ? 0.4 : 0.0);
    }
  }
  return SimilarityMatrix::FromRows(rows);
}

}  // namespace pr4a::fixtures

#endif  // PR4A_TESTS_FIXTURES_H_
