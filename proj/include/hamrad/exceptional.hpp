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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamrad/error.hpp"
#include "hamrad/graceful_order.hpp"
#include "hamrad/hamming_graph.hpp"
#include "hamrad/radio_labeling.hpp"

// Radio numbers of the diameter-3 Hamming graphs, including the two
// non-graceful families K_2 □ K_3 □ K_3 and G_n = K_2 □ K_2 □ K_n.

namespace hamrad {

enum class RnCase { kGraceful, kTwoTwoN, kTwoThreeThree };

inline std::string_view to_string(RnCase c) {
  switch (c) {
    case RnCase::kGraceful: return "graceful";
    case RnCase::kTwoTwoN: return "two_two_n";
    case RnCase::kTwoThreeThree: return "two_three_three";
  }
  return "unknown";
}

struct RnFormulaResult {
  int value = 0;
  RnCase case_tag = RnCase::kGraceful;
};

/// rn(K_l □ K_m □ K_n) for 2 <= l <= m <= n. (2,2,1) is accepted as G_1.
inline RnFormulaResult radio_number_formula(int l, int m, int n) {
  if (l == 2 && m == 2 && n == 1) return {5, RnCase::kTwoTwoN};
  if (l < 2 || m < 2 || n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "factors must be >= 2");
  }
  if (!(l <= m && m <= n)) {
    throw Error(ErrorKind::kInvalidArgument,
                "factors must be sorted ascending (l <= m <= n)");
  }
  if (l == 2 && m == 2) return {6 * n - 1, RnCase::kTwoTwoN};
  if (l == 2 && m == 3 && n == 3) return {20, RnCase::kTwoThreeThree};
  const long long v = static_cast<long long>(l) * m * n;
  if (v > (1LL << 31) - 1) throw Error(ErrorKind::kOverflow, "l*m*n too large");
  return {static_cast<int>(v), RnCase::kGraceful};
}

// --- K_2 □ K_3 □ K_3 -------------------------------------------------------

/// The 18 vertices of K_2 □ K_3 □ K_3 in increasing label order, with labels.
inline const std::vector<std::pair<Vertex, int>>& table_233() {
  static const std::vector<std::pair<Vertex, int>> kTable = {
      {{1, 1, 1}, 1},  {{2, 2, 2}, 2},  {{1, 3, 3}, 3},  {{2, 1, 1}, 4},
      {{1, 2, 2}, 5},  {{2, 3, 3}, 6},  {{1, 1, 2}, 8},  {{2, 2, 3}, 9},
      {{1, 3, 1}, 10}, {{2, 1, 2}, 11}, {{1, 2, 3}, 12}, {{2, 3, 1}, 13},
      {{1, 1, 3}, 15}, {{2, 2, 1}, 16}, {{1, 3, 2}, 17}, {{2, 1, 3}, 18},
      {{1, 2, 1}, 19}, {{2, 3, 2}, 20},
  };
  return kTable;
}

inline Ordering ordering_233() {
  Ordering o;
  for (const auto& [v, label] : table_233()) o.sequence.push_back(v);
  return o;
}

/// Span-20 radio labeling of K_2 □ K_3 □ K_3.
inline RadioLabeling labeling_233() {
  return RadioLabeling::from_pairs(HammingGraph{2, 3, 3}, table_233());
}

// --- G_n = K_2 □ K_2 □ K_n -------------------------------------------------

/// Label of the p-th vertex (0-based) in the G_n orderings: 1,2,4,5,7,8,...
inline int two_two_n_label(std::size_t position) {
  return static_cast<int>(3 * (position / 2) + position % 2 + 1);
}

/// Vertex order realizing span 6n-1 on G_n. n = 1 is returned on K_2 □ K_2.
///
/// Even n grow from the 8-vertex G_2 order and odd n from the 12-vertex G_3
/// order by repeatedly appending the eight vertices with third coordinate
/// n+1 or n+2. Every appended block leaves the order ending in
/// (1,1,n),(2,2,n-1).
inline Ordering ordering_22n(int n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "G_n needs n >= 1, got " + std::to_string(n));
  }
  if (n == 1) return Ordering{{{1, 1}, {2, 2}, {2, 1}, {1, 2}}};

  Ordering o;
  int base = 0;
  if (n % 2 == 0) {
    o.sequence = {{1, 1, 1}, {2, 2, 2}, {2, 1, 1}, {1, 2, 2},
                  {2, 1, 2}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}};
    base = 2;
  } else {
    o.sequence = {{1, 1, 1}, {2, 2, 2}, {2, 1, 1}, {1, 2, 2},
                  {2, 2, 1}, {1, 1, 3}, {1, 2, 1}, {2, 1, 3},
                  {1, 1, 2}, {2, 2, 3}, {2, 1, 2}, {1, 2, 3}};
    base = 3;
  }
  for (int k = base; k < n; k += 2) {
    const int a = k + 1;
    const int b = k + 2;
    o.sequence.insert(o.sequence.end(),
                      {{1, 1, a}, {2, 2, b}, {2, 1, a}, {1, 2, b},
                       {2, 1, b}, {1, 2, a}, {1, 1, b}, {2, 2, a}});
  }
  return o;
}

inline HammingGraph graph_22n(int n) {
  return n == 1 ? HammingGraph{2, 2} : HammingGraph{2, 2, n};
}

/// Span 6n-1 radio labeling of G_n.
inline RadioLabeling labeling_22n(int n) {
  const Ordering o = ordering_22n(n);
  const HammingGraph g = graph_22n(n);
  std::vector<int> labels(o.size());
  for (std::size_t p = 0; p < o.size(); ++p) {
    labels[g.index_of(o[p])] = two_two_n_label(p);
  }
  return RadioLabeling(g, std::move(labels));
}

/// The explicit labeling behind radio_number_formula for any factor order of
/// a diameter-3 Hamming graph K_l □ K_m □ K_n (l,m,n >= 2), or of
/// K_2 □ K_2 (optionally with a K_1 factor). nullopt for anything else.
inline std::optional<RadioLabeling> constructive_labeling(const HammingGraph& g) {
  const FactorSort sort(g);
  const auto& s = sort.sorted().factor_sizes();

  std::optional<RadioLabeling> on_sorted;
  std::size_t padding = 0;
  if (s == std::vector<int>{2, 2} || s == std::vector<int>{1, 2, 2}) {
    on_sorted = labeling_22n(1);
    padding = s.size() - 2;
  } else if (s.size() == 3 && s[0] >= 2) {
    const auto formula = radio_number_formula(s[0], s[1], s[2]);
    switch (formula.case_tag) {
      case RnCase::kTwoTwoN: on_sorted = labeling_22n(s[2]); break;
      case RnCase::kTwoThreeThree: on_sorted = labeling_233(); break;
      case RnCase::kGraceful: {
        const HammingGraph sorted(s);
        on_sorted = span_of_ordering(sorted, build_ordering(s[0], s[1], s[2])).labeling;
        break;
      }
    }
  } else {
    return std::nullopt;
  }

  std::vector<int> labels(g.vertex_count());
  const auto& source = on_sorted->graph();
  for (std::size_t r = 0; r < source.vertex_count(); ++r) {
    std::vector<int> coords(padding, 1);
    const auto v = source.vertex_at(r);
    coords.insert(coords.end(), v.coords.begin(), v.coords.end());
    labels[g.index_of(sort.to_original(Vertex(std::move(coords))))] =
        on_sorted->labels_by_rank()[r];
  }
  return RadioLabeling(g, std::move(labels));
}

// --- Consecutive runs and the jump bound ------------------------------------

/// Raised when a search hits its node cap. `best_bound()` is the best value
/// established before stopping.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& message, int best_bound)
      : Error(ErrorKind::kBudgetExhausted, message), best_(best_bound) {}

  int best_bound() const noexcept { return best_; }

 private:
  int best_;
};

namespace detail {

inline void require_small(const HammingGraph& g) {
  if (g.vertex_count() > 64) {
    throw Error(ErrorKind::kOutOfRange,
                "exhaustive search is limited to 64 vertices; " + to_string(g) +
                    " has " + std::to_string(g.vertex_count()));
  }
}

inline std::vector<std::vector<int>> distance_table(
    const std::vector<Vertex>& verts) {
  std::vector<std::vector<int>> dist(verts.size(), std::vector<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = 0; b < verts.size(); ++b) {
      dist[a][b] = HammingGraph::unchecked_distance(verts[a], verts[b]);
    }
  }
  return dist;
}

/// Value symmetry of each complete factor: a coordinate value may be used
/// only after every smaller value of that factor has appeared.
inline bool first_use_canonical(const Vertex& v, const std::vector<int>& max_used) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > max_used[i] + 1) return false;
  }
  return true;
}

class RunSearch {
 public:
  RunSearch(const HammingGraph& g, std::uint64_t cap)
      : n_(g.vertex_count()),
        diam_(g.diameter()),
        verts_(g.vertices()),
        dist_(distance_table(verts_)),
        cap_(cap) {}

  int run() {
    seq_.assign(1, 0);
    max_used_.assign(verts_.front().size(), 1);
    best_ = 1;
    extend(std::uint64_t{1});
    return best_;
  }

 private:
  // Longest further extension of seq_; memoized on (used set, last diam-1).
  int extend(std::uint64_t used) {
    if (++nodes_ > cap_) {
      throw BudgetExhausted("consecutive-run search exceeded " +
                                std::to_string(cap_) + " nodes",
                            best_);
    }
    const int depth = static_cast<int>(seq_.size());
    best_ = std::max(best_, depth);
    if (static_cast<std::size_t>(depth) == n_) return 0;

    std::uint64_t suffix = 0;
    const int window = std::min(diam_ - 1, depth);
    for (int s = 1; s <= window; ++s) {
      suffix = suffix * 64 + seq_[static_cast<std::size_t>(depth - s)];
    }
    const auto key = std::make_pair(used, suffix);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int longest = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used & (std::uint64_t{1} << v)) continue;
      if (!first_use_canonical(verts_[v], max_used_)) continue;
      bool ok = true;
      for (int step = 1; step < diam_ && step <= depth && ok; ++step) {
        const auto prev = seq_[static_cast<std::size_t>(depth - step)];
        ok = dist_[prev][v] >= diam_ - step + 1;
      }
      if (!ok) continue;

      const auto saved = max_used_;
      for (std::size_t i = 0; i < max_used_.size(); ++i) {
        max_used_[i] = std::max(max_used_[i], verts_[v][i]);
      }
      seq_.push_back(v);
      longest = std::max(longest, 1 + extend(used | (std::uint64_t{1} << v)));
      seq_.pop_back();
      max_used_ = saved;
      if (static_cast<std::size_t>(depth + longest) == n_) break;
    }
    memo_.emplace(key, longest);
    return longest;
  }

  std::size_t n_;
  int diam_;
  std::vector<Vertex> verts_;
  std::vector<std::vector<int>> dist_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  int best_ = 1;
  std::vector<std::size_t> seq_;
  std::vector<int> max_used_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> memo_;
};

}  // namespace detail

/// Largest r such that some r distinct vertices admit consecutive labels
/// i, i+1, ..., i+r-1 under the radio condition.
///
/// Exhaustive DFS with the first vertex fixed to (1,...,1) (Hamming graphs
/// are vertex-transitive) and per-factor value symmetry broken. Throws
/// BudgetExhausted once `cap` search nodes have been expanded.
inline int max_consecutive_run(const HammingGraph& g,
                               std::uint64_t cap = 10'000'000) {
  const std::size_t n = g.vertex_count();
  if (g.diameter() <= 1) return static_cast<int>(n);
  detail::require_small(g);
  return detail::RunSearch(g, cap).run();
}

/// Lower bound on rn for a graph on `vertex_count` vertices whose consecutive
/// runs have length at most `max_run`: ceil(N/r) runs leave ceil(N/r) - 1
/// gaps of size at least 2, so span >= N + ceil(N/r) - 1.
inline int jump_lower_bound(int vertex_count, int max_run) {
  if (max_run < 1 || max_run > vertex_count) {
    throw Error(ErrorKind::kInvalidArgument,
                "need 1 <= r <= N, got N=" + std::to_string(vertex_count) +
                    " r=" + std::to_string(max_run));
  }
  return vertex_count + (vertex_count + max_run - 1) / max_run - 1;
}

}  // namespace hamrad
