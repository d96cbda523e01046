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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamrad/error.hpp"
#include "hamrad/exceptional.hpp"
#include "hamrad/hamming_graph.hpp"
#include "hamrad/radio_labeling.hpp"

// Exact radio numbers by depth-first search over vertex orderings.
//
// Sorting an optimal labeling by label gives an ordering whose greedy-gap
// relabeling (span_of_ordering) has no larger span, so it suffices to search
// orderings. Vertices are appended in label order; each gets its greedy
// label, and a branch is cut as soon as its label plus the least possible
// increment for the remaining vertices reaches the incumbent.

namespace hamrad {

struct SolverConfig {
  std::uint64_t node_budget = 200'000'000;
  std::chrono::duration<double> time_budget = std::chrono::seconds(300);
  bool symmetry_reduction = true;
  std::optional<int> initial_upper_bound;
  // Seed the incumbent with constructive_labeling() when one exists.
  bool constructive_incumbent = true;
  // Prune with the consecutive-run length; off means r = N.
  bool run_length_bound = true;
  std::uint64_t run_search_budget = 10'000'000;
};

struct SolveResult {
  int rn = 0;
  RadioLabeling witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  int lower_bound = 0;
  int max_run = 0;
};

/// Least increase from the current vertex's label to the last label when the
/// current vertex ends a consecutive run of `run_length` and `rest` vertices
/// follow. Each later run holds at most `max_run` vertices and starts with a
/// jump of at least 2.
inline int increment_after(int run_length, int rest, int max_run) {
  const int room = std::max(0, max_run - run_length);
  const int overflow = std::max(0, rest - room);
  return rest + (overflow + max_run - 1) / max_run;
}

/// Lower bound on (final label - current label) when `remaining` vertices,
/// the current one included, are still to be labeled:
/// (remaining - 1) unit steps plus ceil(remaining / r) - 1 forced jumps.
inline int minimal_remaining_increment(int remaining, int max_run) {
  if (remaining <= 1) return 0;
  return increment_after(1, remaining - 1, std::max(1, max_run));
}

namespace detail {

class OrderingSearch {
 public:
  OrderingSearch(const HammingGraph& g, const SolverConfig& cfg, int max_run,
                 int lower_bound)
      : g_(g),
        cfg_(cfg),
        n_(g.vertex_count()),
        diam_(g.diameter()),
        verts_(g.vertices()),
        dist_(distance_table(verts_)),
        max_run_(max_run),
        lower_bound_(lower_bound) {}

  /// Looks for an ordering with span < target. Returns true when the search
  /// space was exhausted or the lower bound was met.
  bool search(int target) {
    target_ = target;
    found_.clear();
    stopped_ = false;
    const std::size_t roots = cfg_.symmetry_reduction ? 1 : n_;
    for (std::size_t root = 0; root < roots && !stopped_ && !done(); ++root) {
      seq_.assign(1, root);
      labels_.assign(1, 1);
      runs_.assign(1, 1);
      max_used_.assign(g_.factor_count(), 1);
      if (!cfg_.symmetry_reduction) {
        for (std::size_t i = 0; i < max_used_.size(); ++i) {
          max_used_[i] = g_.factor_sizes()[i];
        }
      }
      dfs(std::uint64_t{1} << root);
    }
    return !stopped_;
  }

  const std::vector<std::size_t>& found() const { return found_; }
  int found_span() const { return target_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool done() const { return !found_.empty() && target_ <= lower_bound_; }

  void dfs(std::uint64_t used) {
    if (stopped_ || done()) return;
    ++nodes_;
    if (nodes_ > cfg_.node_budget) {
      stopped_ = true;
      return;
    }
    if ((nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > cfg_.time_budget) {
      stopped_ = true;
      return;
    }

    const std::size_t depth = seq_.size();
    const int last = labels_.back();
    if (depth == n_) {
      if (last < target_) {
        target_ = last;
        found_ = seq_;
      }
      return;
    }
    const int rest = static_cast<int>(n_ - depth);
    if (last + increment_after(runs_.back(), rest, max_run_) >= target_) return;

    for (std::size_t v = 0; v < n_; ++v) {
      if (used & (std::uint64_t{1} << v)) continue;
      if (!first_use_canonical(verts_[v], max_used_)) continue;

      int label = last + 1;
      for (std::size_t j = depth; j-- > 0;) {
        if (labels_[j] + diam_ <= last) break;
        label = std::max(label, labels_[j] + diam_ + 1 - dist_[seq_[j]][v]);
      }
      const int run = label == last + 1 ? runs_.back() + 1 : 1;
      if (label + increment_after(run, rest - 1, max_run_) >= target_) continue;

      const auto saved = max_used_;
      for (std::size_t i = 0; i < max_used_.size(); ++i) {
        max_used_[i] = std::max(max_used_[i], verts_[v][i]);
      }
      seq_.push_back(v);
      labels_.push_back(label);
      runs_.push_back(run);
      dfs(used | (std::uint64_t{1} << v));
      seq_.pop_back();
      labels_.pop_back();
      runs_.pop_back();
      max_used_ = saved;
      if (stopped_ || done()) return;
    }
  }

  const HammingGraph& g_;
  const SolverConfig& cfg_;
  std::size_t n_;
  int diam_;
  std::vector<Vertex> verts_;
  std::vector<std::vector<int>> dist_;
  int max_run_;
  int lower_bound_;
  int target_ = 0;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::vector<std::size_t> seq_;
  std::vector<int> labels_;
  std::vector<int> runs_;
  std::vector<int> max_used_;
  std::vector<std::size_t> found_;
};

inline OrderingSpan greedy_incumbent(const HammingGraph& g) {
  auto verts = g.vertices();
  OrderingSpan best = span_of_ordering(g, Ordering{verts});
  std::mt19937 rng(0x5eed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::shuffle(verts.begin(), verts.end(), rng);
    auto candidate = span_of_ordering(g, Ordering{verts});
    if (candidate.span < best.span) best = std::move(candidate);
  }
  return best;
}

inline RadioLabeling consecutive_of(const HammingGraph& g) {
  std::vector<int> labels(g.vertex_count());
  std::iota(labels.begin(), labels.end(), 1);
  return RadioLabeling(g, std::move(labels));
}

}  // namespace detail

/// rn(g) with a witness labeling. When a budget runs out the result carries
/// optimal = false and the best labeling found, whose span is an upper bound.
inline SolveResult solve(const HammingGraph& g, const SolverConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.vertex_count();
  SolveResult result;

  if (g.diameter() <= 1) {
    result.witness = detail::consecutive_of(g);
    result.rn = static_cast<int>(n);
    result.optimal = true;
    result.lower_bound = result.rn;
    result.max_run = result.rn;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }
  detail::require_small(g);
  const int count = static_cast<int>(n);

  int max_run = count;
  if (cfg.run_length_bound) {
    try {
      max_run = max_consecutive_run(g, cfg.run_search_budget);
    } catch (const BudgetExhausted&) {
      max_run = count;
    }
  }
  result.max_run = max_run;
  result.lower_bound = jump_lower_bound(count, max_run);

  std::optional<RadioLabeling> incumbent;
  if (cfg.constructive_incumbent) {
    auto built = constructive_labeling(g);
    if (built && validate(g, *built).valid) incumbent = std::move(built);
  }
  if (!incumbent) incumbent = detail::greedy_incumbent(g).labeling;
  int best = incumbent->span();

  detail::OrderingSearch search(g, cfg, max_run, result.lower_bound);
  bool exhausted = true;
  if (best > result.lower_bound) {
    auto run_pass = [&](int target) {
      exhausted = search.search(target);
      if (!search.found().empty()) {
        Ordering o;
        for (auto idx : search.found()) o.sequence.push_back(g.vertex_at(idx));
        auto greedy = span_of_ordering(g, o);
        best = greedy.span;
        incumbent = std::move(greedy.labeling);
        return true;
      }
      return false;
    };
    const bool hinted = cfg.initial_upper_bound && *cfg.initial_upper_bound < best - 1;
    bool improved = run_pass(hinted ? *cfg.initial_upper_bound + 1 : best);
    if (hinted && exhausted && !improved) run_pass(best);
  }

  const auto report = validate(g, *incumbent);
  if (!report.valid || report.span != best) {
    throw Error(ErrorKind::kInvalidArgument, "solver produced an invalid witness");
  }
  result.rn = best;
  result.witness = std::move(*incumbent);
  result.optimal = exhausted || best <= result.lower_bound;
  result.nodes_explored = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace hamrad
