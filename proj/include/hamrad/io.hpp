// Copyright 2026 The hamrad Authors
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

#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hamrad/error.hpp"
#include "hamrad/graceful_order.hpp"
#include "hamrad/hamming_graph.hpp"
#include "hamrad/radio_labeling.hpp"

// CSV and JSON forms of labelings, orderings and validation reports.
// Vertex fields contain commas and are always written quoted.

namespace hamrad::io {

using json = nlohmann::json;

inline std::string quoted(const Vertex& v) { return "\"" + to_string(v) + "\""; }

inline void write_labeling_csv(std::ostream& out, const RadioLabeling& f) {
  out << "vertex,label\n";
  for (const auto& [v, label] : f.sorted_by_label()) {
    out << quoted(v) << ',' << label << '\n';
  }
}

namespace detail {

// Splits `"(1,2,3)",7` or `(1,2,3),7` into its two fields.
inline std::pair<std::string_view, std::string_view> split_row(std::string_view line,
                                                               int line_no) {
  std::size_t close = std::string_view::npos;
  std::string_view vertex;
  if (!line.empty() && line.front() == '"') {
    close = line.find('"', 1);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": unterminated quote");
    }
    vertex = line.substr(1, close - 1);
    ++close;
  } else {
    close = line.find(')');
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": missing vertex");
    }
    ++close;
    vertex = line.substr(0, close);
  }
  const auto rest = hamrad::detail::trim(line.substr(close));
  if (rest.empty() || rest.front() != ',') {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": expected ',' after vertex");
  }
  return {vertex, rest.substr(1)};
}

}  // namespace detail

/// Reads a "vertex,label" CSV. The labeling must be total over `g`.
inline RadioLabeling read_labeling_csv(std::istream& in, const HammingGraph& g) {
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<std::pair<Vertex, int>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = hamrad::detail::trim(line);
    if (text.empty()) continue;
    if (!header) {
      if (text != "vertex,label") {
        throw Error(ErrorKind::kParse, "expected header 'vertex,label'");
      }
      header = true;
      continue;
    }
    const auto [vertex, label] = detail::split_row(text, line_no);
    Vertex v = parse_vertex(vertex);
    g.check(v);
    rows.emplace_back(std::move(v), hamrad::detail::parse_int(label, "label"));
  }
  if (!header) throw Error(ErrorKind::kParse, "empty labeling file");
  return RadioLabeling::from_pairs(g, rows);
}

/// "position,vertex" rows. With `block_rows` > 0 a "# block k" line precedes
/// every group of `block_rows` rows.
inline void write_ordering_csv(std::ostream& out, const Ordering& o,
                               std::size_t block_rows = 0) {
  out << "position,vertex\n";
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (block_rows && i % block_rows == 0) {
      out << "# block " << i / block_rows + 1 << '\n';
    }
    out << i + 1 << ',' << quoted(o[i]) << '\n';
  }
}

/// Flat array of vertex strings, or an array of blocks when `block_rows` > 0.
inline json ordering_json(const Ordering& o, std::size_t block_rows = 0) {
  json flat = json::array();
  for (const auto& v : o.sequence) flat.push_back(to_string(v));
  if (!block_rows) return flat;
  json blocks = json::array();
  for (std::size_t i = 0; i < flat.size(); i += block_rows) {
    json block = json::array();
    for (std::size_t j = i; j < std::min(flat.size(), i + block_rows); ++j) {
      block.push_back(flat[j]);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline json violation_json(const Violation& v) {
  return {{"u", to_string(v.u)},
          {"v", to_string(v.v)},
          {"required_gap", v.required_gap},
          {"actual_gap", v.actual_gap}};
}

inline json report_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v));
  return {{"valid", report.valid}, {"span", report.span}, {"violations", violations}};
}

inline json labeling_json(const RadioLabeling& f) {
  json out = json::array();
  for (const auto& [v, label] : f.sorted_by_label()) {
    out.push_back({{"vertex", to_string(v)}, {"label", label}});
  }
  return out;
}

}  // namespace hamrad::io
