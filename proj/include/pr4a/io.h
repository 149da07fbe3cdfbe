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

// File formats: similarity CSV, loads JSON, assignment CSV, topic profiles,
// score-model worlds, sweep configs and the JSON trace / manifest written
// next to every output. Numbers are printed with 10 significant digits and
// infinity as "inf".

#ifndef PR4A_IO_H_
#define PR4A_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pr4a/assign.h"
#include "pr4a/core.h"
#include "pr4a/coverage.h"
#include "pr4a/experiments.h"
#include "pr4a/statmodel.h"

namespace pr4a {

// "%.10g"; "inf", "-inf" and "nan" for non-finite values.
std::string FormatNumber(double x);
// A JSON number rounded to 10 significant digits; non-finite values become
// the strings "inf", "-inf" or "nan".
nlohmann::json JsonNumber(double x);

// Splits one CSV line on commas and trims surrounding blanks. Quoting is not
// supported.
std::vector<std::string> SplitCsvLine(const std::string& line);

struct SimilarityTable {
  SimilarityMatrix s;
  std::vector<std::string> reviewer_ids;
  std::vector<std::string> paper_ids;
};

// Header `reviewer_id,<paper ids...>`, then one row per reviewer whose cells
// are decimals in [0, 1] or the literal CONFLICT. Throws ParseError naming
// the row and column of a bad cell.
SimilarityTable ReadSimilarityCsv(std::istream& in);
void WriteSimilarityCsv(const SimilarityTable& table, std::ostream& out);

// {"lambda": int | [int], "mu": int | [int]}. Scalars are broadcast. Throws
// ParseError on malformed JSON or wrong types, ArgumentError/DimensionError
// from LoadConstraints::Validate.
LoadConstraints ReadLoadsJson(std::istream& in, int num_reviewers,
                              int num_papers);

// Header `paper_id,reviewer_ids...`, then `paper_id,r1,...,r_lambda` per
// paper in paper order.
void WriteAssignmentCsv(const Assignment& a, const SimilarityTable& table,
                        std::ostream& out);
// Inverse of WriteAssignmentCsv; ids are resolved against `table`.
Assignment ReadAssignmentCsv(std::istream& in, const SimilarityTable& table);

// {"papers": {id: [topics]}, "reviewers": {id: [topics]}}. Ids refer to the
// similarity table; topics may be integers or strings. Missing ids get no
// topics.
TopicProfile ReadTopicsJson(std::istream& in, const SimilarityTable& table);

// {"theta_star": [..], "h": "one-minus-s" | {"name": .., "param": ..},
// "k": int}; the subjective form has "theta_tilde": [[..], ..] instead.
ObjectiveWorld ReadObjectiveWorld(const nlohmann::json& j);
SubjectiveWorld ReadSubjectiveWorld(const nlohmann::json& j);
NoiseModel ReadNoise(const nlohmann::json& j);

// Every SweepConfig field is optional; see README for names. Throws
// ParseError on wrong types or unknown names.
SweepConfig ReadSweepConfig(const nlohmann::json& j);
nlohmann::json SweepConfigToJson(const SweepConfig& config);

nlohmann::json TraceToJson(const Pr4aTrace& trace,
                           const std::vector<std::string>& paper_ids);

// Reads a whole file, throwing ParseError if it cannot be opened.
std::string ReadFile(const std::string& path);
// Writes `content`, throwing Error on failure.
void WriteFile(const std::string& path, const std::string& content);

}  // namespace pr4a

#endif  // PR4A_IO_H_
