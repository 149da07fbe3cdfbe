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

#include "pr4a/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace pr4a {
namespace {

using nlohmann::json;

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(const std::string& text, double& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && std::isfinite(value);
}

std::string LineRef(int line) { return "line " + std::to_string(line); }

// Reads the next non-blank line; false at end of input.
bool NextLine(std::istream& in, std::string& line, int& number) {
  while (std::getline(in, line)) {
    ++number;
    if (!Trim(line).empty()) return true;
  }
  return false;
}

std::vector<int> IntOrList(const json& j, const char* key, int size) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const json& v = j.at(key);
  if (v.is_number_integer()) return std::vector<int>(size, v.get<int>());
  if (v.is_array()) {
    std::vector<int> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) {
        throw ParseError(std::string("\"") + key + "\" must hold integers");
      }
      out.push_back(x.get<int>());
    }
    return out;
  }
  throw ParseError(std::string("\"") + key + "\" must be an integer or a list");
}

json ParseJson(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::map<std::string, int> IndexOf(const std::vector<std::string>& ids) {
  std::map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(ids.size()); ++k) index[ids[k]] = k;
  return index;
}

}  // namespace

std::string FormatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

json JsonNumber(double x) {
  if (!std::isfinite(x)) return FormatNumber(x);
  return std::stod(FormatNumber(x));
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

SimilarityTable ReadSimilarityCsv(std::istream& in) {
  std::string line;
  int number = 0;
  if (!NextLine(in, line, number)) throw ParseError("empty similarity file");
  auto header = SplitCsvLine(line);
  if (header.size() < 2) throw ParseError("header needs at least one paper");
  SimilarityTable table;
  table.paper_ids.assign(header.begin() + 1, header.end());
  const int m = static_cast<int>(table.paper_ids.size());

  std::vector<std::vector<double>> rows;
  std::vector<std::pair<int, int>> conflicts;
  while (NextLine(in, line, number)) {
    const auto cells = SplitCsvLine(line);
    const int row = static_cast<int>(rows.size());
    if (static_cast<int>(cells.size()) != m + 1) {
      throw ParseError(LineRef(number) + ": expected " + std::to_string(m + 1) +
                       " cells, got " + std::to_string(cells.size()));
    }
    table.reviewer_ids.push_back(cells[0]);
    std::vector<double> values(m);
    for (int j = 0; j < m; ++j) {
      const std::string& cell = cells[j + 1];
      if (cell == "CONFLICT") {
        conflicts.emplace_back(row, j);
        continue;
      }
      if (!ParseDouble(cell, values[j]) || values[j] < 0.0 || values[j] > 1.0) {
        throw ParseError("row " + std::to_string(row) + " (reviewer " +
                         cells[0] + "), column " + std::to_string(j) +
                         " (paper " + table.paper_ids[j] + "): bad cell \"" +
                         cell + "\"");
      }
    }
    rows.push_back(std::move(values));
  }
  try {
    table.s = SimilarityMatrix::FromRows(rows, conflicts);
  } catch (const Error& e) {
    throw ParseError(std::string("similarity matrix: ") + e.what());
  }
  return table;
}

void WriteSimilarityCsv(const SimilarityTable& table, std::ostream& out) {
  out << "reviewer_id";
  for (const auto& id : table.paper_ids) out << ',' << id;
  out << '\n';
  for (int i = 0; i < table.s.num_reviewers(); ++i) {
    out << table.reviewer_ids[i];
    for (int j = 0; j < table.s.num_papers(); ++j) {
      out << ','
          << (table.s.is_conflict(i, j) ? "CONFLICT"
                                        : FormatNumber(table.s.at(i, j)));
    }
    out << '\n';
  }
}

LoadConstraints ReadLoadsJson(std::istream& in, int num_reviewers,
                              int num_papers) {
  const json j = ParseJson(in);
  if (!j.is_object()) throw ParseError("loads must be a JSON object");
  LoadConstraints lc{IntOrList(j, "lambda", num_papers),
                     IntOrList(j, "mu", num_reviewers)};
  lc.Validate(num_reviewers, num_papers);
  return lc;
}

void WriteAssignmentCsv(const Assignment& a, const SimilarityTable& table,
                        std::ostream& out) {
  int widest = 0;
  for (int j = 0; j < a.num_papers(); ++j) {
    widest = std::max(widest, a.PaperLoad(j));
  }
  out << "paper_id";
  for (int r = 1; r <= widest; ++r) out << ",reviewer_" << r;
  out << '\n';
  for (int j = 0; j < a.num_papers(); ++j) {
    out << table.paper_ids[j];
    for (int i : a.ReviewersOf(j)) out << ',' << table.reviewer_ids[i];
    out << '\n';
  }
}

Assignment ReadAssignmentCsv(std::istream& in, const SimilarityTable& table) {
  const auto papers = IndexOf(table.paper_ids);
  const auto reviewers = IndexOf(table.reviewer_ids);
  Assignment a(table.s.num_reviewers(), table.s.num_papers());
  std::string line;
  int number = 0;
  if (!NextLine(in, line, number)) throw ParseError("empty assignment file");
  while (NextLine(in, line, number)) {
    const auto cells = SplitCsvLine(line);
    const auto paper = papers.find(cells[0]);
    if (paper == papers.end()) {
      throw ParseError(LineRef(number) + ": unknown paper \"" + cells[0] + "\"");
    }
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].empty()) continue;
      const auto reviewer = reviewers.find(cells[c]);
      if (reviewer == reviewers.end()) {
        throw ParseError(LineRef(number) + ": unknown reviewer \"" + cells[c] +
                         "\"");
      }
      a.Assign(reviewer->second, paper->second);
    }
  }
  return a;
}

TopicProfile ReadTopicsJson(std::istream& in, const SimilarityTable& table) {
  const json j = ParseJson(in);
  std::map<std::string, int> topic_codes;
  auto code = [&](const json& t) -> int {
    if (t.is_number_integer()) {
      return topic_codes.emplace("#" + std::to_string(t.get<int>()),
                                 static_cast<int>(topic_codes.size()))
          .first->second;
    }
    if (t.is_string()) {
      return topic_codes.emplace(t.get<std::string>(),
                                 static_cast<int>(topic_codes.size()))
          .first->second;
    }
    throw ParseError("topics must be integers or strings");
  };
  auto fill = [&](const char* key, const std::vector<std::string>& ids,
                  std::vector<std::vector<int>>& lists) {
    lists.assign(ids.size(), {});
    if (!j.contains(key)) return;
    if (!j.at(key).is_object()) {
      throw ParseError(std::string("\"") + key + "\" must be an object");
    }
    const auto index = IndexOf(ids);
    for (const auto& [id, topics] : j.at(key).items()) {
      const auto it = index.find(id);
      if (it == index.end()) throw ParseError("unknown id \"" + id + "\"");
      if (!topics.is_array()) throw ParseError("topic list must be an array");
      for (const auto& t : topics) lists[it->second].push_back(code(t));
    }
  };
  TopicProfile tp;
  fill("papers", table.paper_ids, tp.topics_of_paper);
  fill("reviewers", table.reviewer_ids, tp.topics_of_reviewer);
  tp.Normalize();
  return tp;
}

NoiseModel ReadNoise(const json& j) {
  try {
    if (j.is_string()) return NoiseModel::Parse(j.get<std::string>());
    if (j.is_object()) {
      const std::string name = j.at("name").get<std::string>();
      if (!j.contains("param")) return NoiseModel::Parse(name);
      return NoiseModel::Parse(name + ":" +
                               FormatNumber(j.at("param").get<double>()));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("noise model: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("noise model: ") + e.what());
  }
  throw ParseError("noise model must be a string or an object");
}

ObjectiveWorld ReadObjectiveWorld(const json& j) {
  try {
    ObjectiveWorld w{j.at("theta_star").get<std::vector<double>>(),
                     j.contains("h") ? ReadNoise(j.at("h"))
                                     : NoiseModel::OneMinusS(),
                     j.at("k").get<int>()};
    w.Validate();
    return w;
  } catch (const json::exception& e) {
    throw ParseError(std::string("objective world: ") + e.what());
  }
}

SubjectiveWorld ReadSubjectiveWorld(const json& j) {
  try {
    SubjectiveWorld w{
        j.at("theta_tilde").get<std::vector<std::vector<double>>>(),
        j.contains("h") ? ReadNoise(j.at("h")) : NoiseModel::OneMinusS(),
        j.at("k").get<int>()};
    w.Validate();
    return w;
  } catch (const json::exception& e) {
    throw ParseError(std::string("subjective world: ") + e.what());
  }
}

SweepConfig ReadSweepConfig(const json& j) {
  if (!j.is_object()) throw ParseError("sweep config must be a JSON object");
  SweepConfig c;
  try {
    if (j.contains("label")) c.label = j.at("label").get<std::string>();
    if (j.contains("deltas")) {
      c.deltas = j.at("deltas").get<std::vector<double>>();
    }
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("k")) c.k = j.at("k").get<int>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<int>();
    if (j.contains("mu")) c.mu = j.at("mu").get<int>();
    if (j.contains("estimator")) {
      const auto name = j.at("estimator").get<std::string>();
      if (name == "mle") {
        c.estimator = Estimator::kMle;
      } else if (name == "mean") {
        c.estimator = Estimator::kMean;
      } else {
        throw ParseError("estimator must be \"mle\" or \"mean\"");
      }
    }
    if (j.contains("h")) c.noise = ReadNoise(j.at("h"));
    c.fairness = Transform::InverseNoise(c.noise);
    if (j.contains("f")) {
      c.fairness = Transform::Parse(j.at("f").get<std::string>(), c.noise);
    }
    if (j.contains("algorithms")) {
      c.algorithms.clear();
      for (const auto& name : j.at("algorithms")) {
        c.algorithms.push_back(ParseAlgorithm(name.get<std::string>()));
      }
    }
    if (j.contains("tolerances")) {
      c.tolerances = j.at("tolerances").get<std::vector<int>>();
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  }
  return c;
}

json SweepConfigToJson(const SweepConfig& c) {
  json j;
  j["label"] = c.label;
  j["deltas"] = json::array();
  for (double d : c.deltas) j["deltas"].push_back(JsonNumber(d));
  j["trials"] = c.trials;
  j["k"] = c.k;
  j["lambda"] = c.lambda;
  j["mu"] = c.mu;
  j["estimator"] = c.estimator == Estimator::kMle ? "mle" : "mean";
  j["h"] = c.noise.Name();
  j["f"] = c.fairness.Name();
  j["algorithms"] = json::array();
  for (auto a : c.algorithms) j["algorithms"].push_back(AlgorithmName(a));
  j["tolerances"] = c.tolerances;
  j["seed"] = c.seed;
  return j;
}

json TraceToJson(const Pr4aTrace& trace,
                 const std::vector<std::string>& paper_ids) {
  auto ids = [&](const std::vector<int>& papers) {
    json out = json::array();
    for (int j : papers) out.push_back(paper_ids.at(j));
    return out;
  };
  json iterations = json::array();
  for (const auto& it : trace.iterations) {
    json candidates = json::array();
    for (const auto& c : it.candidate_fairness) {
      candidates.push_back(c ? JsonNumber(*c) : json(nullptr));
    }
    iterations.push_back({{"remaining_papers", ids(it.remaining_papers)},
                          {"candidate_fairness", candidates},
                          {"chosen_kappa", it.chosen_kappa},
                          {"fairness", JsonNumber(it.fairness)},
                          {"fixed_papers", ids(it.fixed_papers)}});
  }
  return json{{"iterations", iterations}};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace pr4a
