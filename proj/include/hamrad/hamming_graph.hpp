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
#include <charconv>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamrad/error.hpp"

namespace hamrad {

/// A vertex of a Hamming graph: one 1-indexed coordinate per factor.
struct Vertex {
  std::vector<int> coords;

  Vertex() = default;
  explicit Vertex(std::vector<int> c) : coords(std::move(c)) {}
  Vertex(std::initializer_list<int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// K_{n_1} □ K_{n_2} □ ... □ K_{n_d}. Only the factor sizes are stored;
/// adjacency is implied by the coordinate-mismatch distance.
class HammingGraph {
 public:
  HammingGraph() = default;

  explicit HammingGraph(std::vector<int> factor_sizes)
      : factors_(std::move(factor_sizes)) {
    if (factors_.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "a Hamming graph needs at least one factor");
    }
    for (int size : factors_) {
      if (size < 1) {
        throw Error(ErrorKind::kInvalidArgument,
                    "factor sizes must be >= 1, got " + std::to_string(size));
      }
      if (size >= 2) ++diameter_;
      const auto s = static_cast<std::uint64_t>(size);
      if (!overflow_ && count_ > std::numeric_limits<std::uint64_t>::max() / s) {
        overflow_ = true;
      }
      count_ *= s;
    }
  }

  HammingGraph(std::initializer_list<int> factor_sizes)
      : HammingGraph(std::vector<int>(factor_sizes)) {}

  const std::vector<int>& factor_sizes() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  int diameter() const { return diameter_; }

  std::size_t vertex_count() const {
    if (overflow_ || count_ > std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorKind::kOverflow, "vertex count does not fit in 64 bits");
    }
    return static_cast<std::size_t>(count_);
  }

  bool contains(const Vertex& v) const {
    if (v.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (v[i] < 1 || v[i] > factors_[i]) return false;
    }
    return true;
  }

  void check(const Vertex& v) const {
    if (v.size() != factors_.size()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "vertex has " + std::to_string(v.size()) +
                      " coordinates, graph has " +
                      std::to_string(factors_.size()) + " factors");
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (v[i] < 1 || v[i] > factors_[i]) {
        throw Error(ErrorKind::kOutOfRange,
                    "coordinate " + std::to_string(i + 1) + " = " +
                        std::to_string(v[i]) + " outside 1.." +
                        std::to_string(factors_[i]));
      }
    }
  }

  /// Number of coordinates in which `a` and `b` differ.
  int distance(const Vertex& a, const Vertex& b) const {
    check(a);
    check(b);
    return unchecked_distance(a, b);
  }

  static int unchecked_distance(const Vertex& a, const Vertex& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
  }

  /// Mixed-radix rank in lexicographic order, 0-based.
  std::size_t index_of(const Vertex& v) const {
    check(v);
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      index = index * static_cast<std::size_t>(factors_[i]) +
              static_cast<std::size_t>(v[i] - 1);
    }
    return index;
  }

  Vertex vertex_at(std::size_t index) const {
    if (index >= vertex_count()) {
      throw Error(ErrorKind::kOutOfRange,
                  "vertex index " + std::to_string(index) + " out of range");
    }
    std::vector<int> coords(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const auto size = static_cast<std::size_t>(factors_[i]);
      coords[i] = static_cast<int>(index % size) + 1;
      index /= size;
    }
    return Vertex(std::move(coords));
  }

  /// All vertices in lexicographic order.
  std::vector<Vertex> vertices() const {
    const std::size_t n = vertex_count();
    if (n > (std::size_t{1} << 32)) {
      throw Error(ErrorKind::kOverflow, "too many vertices to enumerate");
    }
    std::vector<Vertex> out;
    out.reserve(n);
    std::vector<int> coords(factors_.size(), 1);
    for (std::size_t k = 0; k < n; ++k) {
      out.emplace_back(coords);
      for (std::size_t i = factors_.size(); i-- > 0;) {
        if (++coords[i] <= factors_[i]) break;
        coords[i] = 1;
      }
    }
    return out;
  }

  friend bool operator==(const HammingGraph& a, const HammingGraph& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  int diameter_ = 0;
  std::uint64_t count_ = 1;
  bool overflow_ = false;
};

inline int distance(const HammingGraph& g, const Vertex& a, const Vertex& b) {
  return g.distance(a, b);
}

inline int diameter(const HammingGraph& g) { return g.diameter(); }

inline std::vector<Vertex> vertices(const HammingGraph& g) {
  return g.vertices();
}

/// Reorders factors ascending. `permutation[i]` is the original position of
/// sorted factor i; vertices map coordinate-wise between the two graphs.
class FactorSort {
 public:
  explicit FactorSort(const HammingGraph& original) : original_(original) {
    const auto& sizes = original.factor_sizes();
    permutation_.resize(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) permutation_[i] = i;
    std::stable_sort(permutation_.begin(), permutation_.end(),
                     [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
    std::vector<int> sorted;
    for (auto i : permutation_) sorted.push_back(sizes[i]);
    sorted_ = HammingGraph(std::move(sorted));
  }

  const HammingGraph& original() const { return original_; }
  const HammingGraph& sorted() const { return sorted_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < permutation_.size(); ++i) {
      if (permutation_[i] != i) return false;
    }
    return true;
  }

  Vertex to_sorted(const Vertex& v) const {
    std::vector<int> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[permutation_[i]];
    return Vertex(std::move(c));
  }

  Vertex to_original(const Vertex& v) const {
    std::vector<int> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[permutation_[i]] = v[i];
    return Vertex(std::move(c));
  }

 private:
  HammingGraph original_;
  HammingGraph sorted_;
  std::vector<std::size_t> permutation_;
};

// ---------------------------------------------------------------------------
// Text formats: graphs as "2x3x3", vertices as "(1,2,3)". Both 1-indexed.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::kParse,
                "bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos
                                        ? std::string_view::npos
                                        : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

inline HammingGraph parse_graph(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw Error(ErrorKind::kParse, "empty graph spec");
  std::vector<int> sizes;
  for (auto part : detail::split(body, 'x')) {
    sizes.push_back(detail::parse_int(part, "graph spec"));
  }
  return HammingGraph(std::move(sizes));
}

inline std::string to_string(const HammingGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    if (i) out += 'x';
    out += std::to_string(g.factor_sizes()[i]);
  }
  return out;
}

inline Vertex parse_vertex(std::string_view text) {
  auto body = detail::trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw Error(ErrorKind::kParse,
                "vertex must look like (i,j,k): '" + std::string(body) + "'");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<int> coords;
  for (auto part : detail::split(body, ',')) {
    coords.push_back(detail::parse_int(part, "vertex"));
  }
  return Vertex(std::move(coords));
}

inline std::string to_string(const Vertex& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

}  // namespace hamrad
