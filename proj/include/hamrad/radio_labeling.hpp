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
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamrad/error.hpp"
#include "hamrad/hamming_graph.hpp"

namespace hamrad {

/// A total map V(G) -> Z+ stored densely by lexicographic vertex rank.
///
/// Nothing about the radio condition is assumed here; use validate().
class RadioLabeling {
 public:
  RadioLabeling() = default;

  RadioLabeling(HammingGraph graph, std::vector<int> labels_by_rank)
      : graph_(std::move(graph)), labels_(std::move(labels_by_rank)) {
    if (labels_.size() != graph_.vertex_count()) {
      throw Error(ErrorKind::kPartialLabeling,
                  "labeling covers " + std::to_string(labels_.size()) +
                      " of " + std::to_string(graph_.vertex_count()) +
                      " vertices");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] < 1) {
        throw Error(ErrorKind::kNonPositiveLabel,
                    "label of " + to_string(graph_.vertex_at(i)) + " is " +
                        std::to_string(labels_[i]));
      }
    }
  }

  /// Builds a labeling from (vertex, label) pairs. Every vertex must appear
  /// exactly once.
  static RadioLabeling from_pairs(
      const HammingGraph& graph,
      std::span<const std::pair<Vertex, int>> assignments) {
    std::vector<int> labels(graph.vertex_count(), 0);
    std::vector<bool> seen(labels.size(), false);
    for (const auto& [v, label] : assignments) {
      const auto rank = graph.index_of(v);
      if (seen[rank]) {
        throw Error(ErrorKind::kInvalidArgument,
                    "vertex " + to_string(v) + " labeled twice");
      }
      if (label < 1) {
        throw Error(ErrorKind::kNonPositiveLabel,
                    "label of " + to_string(v) + " is " + std::to_string(label));
      }
      seen[rank] = true;
      labels[rank] = label;
    }
    const auto missing = std::find(seen.begin(), seen.end(), false);
    if (missing != seen.end()) {
      throw Error(ErrorKind::kPartialLabeling,
                  "vertex " +
                      to_string(graph.vertex_at(static_cast<std::size_t>(
                          missing - seen.begin()))) +
                      " has no label");
    }
    return RadioLabeling(graph, std::move(labels));
  }

  const HammingGraph& graph() const { return graph_; }
  const std::vector<int>& labels_by_rank() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  int label(const Vertex& v) const { return labels_[graph_.index_of(v)]; }

  int span() const {
    return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
  }

  /// (vertex, label) pairs ordered by label, ties by vertex.
  std::vector<std::pair<Vertex, int>> sorted_by_label() const {
    std::vector<std::pair<Vertex, int>> out;
    out.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      out.emplace_back(graph_.vertex_at(i), labels_[i]);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.second < b.second;
    });
    return out;
  }

  friend bool operator==(const RadioLabeling&, const RadioLabeling&) = default;

 private:
  HammingGraph graph_;
  std::vector<int> labels_;
};

/// A claimed listing x_1, ..., x_N of V(G).
struct Ordering {
  std::vector<Vertex> sequence;

  std::size_t size() const { return sequence.size(); }
  const Vertex& operator[](std::size_t i) const { return sequence[i]; }

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

/// A pair breaking the radio condition: |f(u) - f(v)| = actual_gap but
/// diam + 1 - d(u,v) = required_gap. `u` carries the smaller label.
struct Violation {
  Vertex u;
  Vertex v;
  int required_gap = 0;
  int actual_gap = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool valid = false;
  int span = 0;
  std::vector<Violation> violations;
};

struct GracefulReport {
  bool graceful = false;
  std::vector<Violation> violations;
};

struct OrderingSpan {
  RadioLabeling labeling;
  int span = 0;
};

/// Checks |f(u) - f(v)| >= diam + 1 - d(u,v) for every unordered pair and
/// reports every failing pair, sorted by (smaller label, larger label).
///
/// Pairs whose labels differ by at least diam always pass, so only a label
/// window of width diam is scanned after sorting.
inline ValidationReport validate(const HammingGraph& g, const RadioLabeling& f) {
  if (!(f.graph() == g)) {
    throw Error(ErrorKind::kDimensionMismatch,
                "labeling belongs to " + to_string(f.graph()) + ", not " +
                    to_string(g));
  }
  const auto& labels = f.labels_by_rank();
  const auto verts = g.vertices();
  const int diam = g.diameter();

  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a] < labels[b];
  });

  ValidationReport report;
  report.span = f.span();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto a = order[i];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto b = order[j];
      const int gap = labels[b] - labels[a];
      if (gap >= diam) break;
      const int required =
          diam + 1 - HammingGraph::unchecked_distance(verts[a], verts[b]);
      if (gap < required) {
        report.violations.push_back({verts[a], verts[b], required, gap});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

inline bool verify_bijection(const HammingGraph& g, const Ordering& o) {
  if (o.size() != g.vertex_count()) return false;
  std::vector<bool> seen(o.size(), false);
  for (const auto& v : o.sequence) {
    if (!g.contains(v)) return false;
    const auto rank = g.index_of(v);
    if (seen[rank]) return false;
    seen[rank] = true;
  }
  return true;
}

/// f(x_i) = i.
inline RadioLabeling consecutive_labeling(const HammingGraph& g,
                                          const Ordering& o) {
  if (!verify_bijection(g, o)) {
    throw Error(ErrorKind::kNotBijective, "ordering is not a bijection onto V(G)");
  }
  std::vector<int> labels(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    labels[g.index_of(o[i])] = static_cast<int>(i + 1);
  }
  return RadioLabeling(g, std::move(labels));
}

/// Radio graceful condition: d(x_i, x_{i+k}) >= diam - k + 1 for
/// k = 1..diam-1. Equivalent to validate() on consecutive_labeling(g, o).
inline GracefulReport check_graceful(const HammingGraph& g, const Ordering& o) {
  if (!verify_bijection(g, o)) {
    throw Error(ErrorKind::kNotBijective, "ordering is not a bijection onto V(G)");
  }
  const int diam = g.diameter();
  GracefulReport report;
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (int step = 1; step < diam && i + static_cast<std::size_t>(step) < o.size();
         ++step) {
      const auto& far = o[i + static_cast<std::size_t>(step)];
      const int required = diam + 1 - HammingGraph::unchecked_distance(o[i], far);
      if (step < required) report.violations.push_back({o[i], far, required, step});
    }
  }
  report.graceful = report.violations.empty();
  return report;
}

/// Tightest labeling monotone in the order of `o`: each vertex gets the
/// smallest label above its predecessor's that satisfies the radio condition
/// against every earlier vertex. Lowering any label breaks a constraint with
/// an earlier vertex, so no order-monotone labeling has a smaller span.
inline OrderingSpan span_of_ordering(const HammingGraph& g, const Ordering& o) {
  if (!verify_bijection(g, o)) {
    throw Error(ErrorKind::kNotBijective, "ordering is not a bijection onto V(G)");
  }
  const int diam = g.diameter();
  std::vector<int> by_position(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i == 0) {
      by_position[i] = 1;
      continue;
    }
    int label = by_position[i - 1] + 1;
    // Earlier vertices more than diam below the predecessor cannot bind.
    for (std::size_t j = i; j-- > 0;) {
      if (by_position[j] + diam <= by_position[i - 1]) break;
      const int need =
          by_position[j] + diam + 1 - HammingGraph::unchecked_distance(o[j], o[i]);
      label = std::max(label, need);
    }
    by_position[i] = label;
  }
  std::vector<int> labels(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) labels[g.index_of(o[i])] = by_position[i];
  OrderingSpan out{RadioLabeling(g, std::move(labels)), 0};
  out.span = o.size() == 0 ? 0 : by_position.back();
  return out;
}

}  // namespace hamrad
