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

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hamrad/error.hpp"
#include "hamrad/hamming_graph.hpp"
#include "hamrad/radio_labeling.hpp"

// Consecutive ordering of K_l □ K_m □ K_n built from lcm(l,m,n) x 3 blocks.
//
// Block 1 has rows (rho^r(1), sigma^r(1), tau^r(1)) for r = 0..L-1, where
// rho, sigma, tau are the +1 cyclic shifts on {1..l}, {1..m}, {1..n}. Each
// later block keeps the first column and shifts either the second column
// (by sigma, when k = 1 mod lambda) or the third column (by tau) of its
// predecessor. Rows are read block after block.

namespace hamrad {

struct ConstructionParams {
  int l = 0;
  int m = 0;
  int n = 0;
  int lcm = 0;          // rows per block
  int block_count = 0;  // l*m*n / lcm
  int lambda = 0;       // n * lcm(l,m) / lcm(l,m,n)
  int gamma = 0;        // gcd(l,m)
};

struct MatrixBlock {
  int index = 0;  // 1-based
  std::vector<int> c;
  std::vector<int> d;
  std::vector<int> e;

  std::size_t rows() const { return c.size(); }
  Vertex row(std::size_t r) const { return Vertex{c[r], d[r], e[r]}; }
};

struct Seed {
  int k = 0;
  Vertex vertex;
};

/// `steps` applications of the +1 cycle on {1..size}. Negative steps allowed.
inline int cyclic_shift(int value, int size, long long steps) {
  const long long s = ((value - 1 + steps) % size + size) % size;
  return static_cast<int>(s) + 1;
}

inline ConstructionParams construction_params(int l, int m, int n) {
  if (l < 2 || m < 2 || n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "the block construction needs all factors >= 2, got " +
                    std::to_string(l) + "x" + std::to_string(m) + "x" +
                    std::to_string(n));
  }
  ConstructionParams p;
  p.l = l;
  p.m = m;
  p.n = n;
  const long long lm = std::lcm(static_cast<long long>(l), m);
  const long long lmn = std::lcm(lm, static_cast<long long>(n));
  const long long vertices = static_cast<long long>(l) * m * n;
  if (vertices > (1LL << 31) - 1) {
    throw Error(ErrorKind::kOverflow, "l*m*n does not fit in an int");
  }
  p.lcm = static_cast<int>(lmn);
  p.block_count = static_cast<int>(vertices / lmn);
  p.lambda = static_cast<int>(n * lm / lmn);
  p.gamma = std::gcd(l, m);
  return p;
}

/// First row of block k, computed in closed form (k = (b-1)*lambda + c).
inline Seed seed(const ConstructionParams& p, int k) {
  if (k < 1 || k > p.block_count) {
    throw Error(ErrorKind::kOutOfRange,
                "block index " + std::to_string(k) + " outside 1.." +
                    std::to_string(p.block_count));
  }
  const int b = (k - 1) / p.lambda + 1;
  const int c = (k - 1) % p.lambda + 1;
  const long long w_steps =
      static_cast<long long>(b - 1) * (p.lambda - 1) + (c - 1);
  return Seed{k, Vertex{1, b, cyclic_shift(1, p.n, w_steps)}};
}

/// All blocks via the column recurrence. Does not call seed().
inline std::vector<MatrixBlock> build_blocks(const ConstructionParams& p) {
  std::vector<MatrixBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(p.block_count));

  MatrixBlock first;
  first.index = 1;
  for (int r = 0; r < p.lcm; ++r) {
    first.c.push_back(cyclic_shift(1, p.l, r));
    first.d.push_back(cyclic_shift(1, p.m, r));
    first.e.push_back(cyclic_shift(1, p.n, r));
  }
  blocks.push_back(std::move(first));

  for (int k = 2; k <= p.block_count; ++k) {
    const MatrixBlock& prev = blocks.back();
    MatrixBlock next;
    next.index = k;
    next.c = blocks.front().c;
    next.d = prev.d;
    next.e = prev.e;
    if ((k - 1) % p.lambda == 0) {
      for (int& x : next.d) x = cyclic_shift(x, p.m, 1);
    } else {
      for (int& x : next.e) x = cyclic_shift(x, p.n, 1);
    }
    blocks.push_back(std::move(next));
  }
  return blocks;
}

inline Ordering flatten(const std::vector<MatrixBlock>& blocks) {
  Ordering o;
  for (const auto& block : blocks) {
    for (std::size_t r = 0; r < block.rows(); ++r) o.sequence.push_back(block.row(r));
  }
  return o;
}

/// x_1, ..., x_{lmn}. A bijection for every l,m,n >= 2; radio graceful unless
/// l = m = 2 or (l,m,n) = (2,3,3) when l <= m <= n.
inline Ordering build_ordering(int l, int m, int n) {
  return flatten(build_blocks(construction_params(l, m, n)));
}

}  // namespace hamrad
