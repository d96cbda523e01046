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

#include "hamrad/graceful_order.hpp"

#include <fstream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"

namespace hamrad {
namespace {

std::vector<std::tuple<int, int, int>> sorted_triples(int max) {
  std::vector<std::tuple<int, int, int>> out;
  for (int l = 2; l <= max; ++l)
    for (int m = l; m <= max; ++m)
      for (int n = m; n <= max; ++n) out.emplace_back(l, m, n);
  return out;
}

bool exceptional(int l, int m, int n) {
  return (l == 2 && m == 2) || (l == 2 && m == 3 && n == 3);
}

TEST(ConstructionParamsTest, Examples) {
  const auto p = construction_params(3, 3, 6);
  EXPECT_EQ(p.lcm, 6);
  EXPECT_EQ(p.block_count, 9);
  EXPECT_EQ(p.lambda, 3);
  EXPECT_EQ(p.gamma, 3);

  const auto q = construction_params(2, 3, 4);
  EXPECT_EQ(q.lcm, 12);
  EXPECT_EQ(q.block_count, 2);
  EXPECT_EQ(q.lambda, 2);
  EXPECT_EQ(q.gamma, 1);

  const auto r = construction_params(2, 2, 2);
  EXPECT_EQ(r.lcm, 2);
  EXPECT_EQ(r.block_count, 4);
  EXPECT_EQ(r.lambda, 2);
  EXPECT_EQ(r.gamma, 2);
}

TEST(ConstructionParamsTest, RejectsSmallFactors) {
  for (auto [l, m, n] : {std::tuple{1, 3, 3}, {3, 1, 3}, {3, 3, 1}, {0, 2, 2}}) {
    try {
      construction_params(l, m, n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
  }
  EXPECT_THROW(build_ordering(2, 2, 1), Error);
}

TEST(ConstructionParamsTest, DerivedQuantitiesConsistent) {
  for (int l = 2; l <= 12; ++l)
    for (int m = 2; m <= 12; ++m)
      for (int n = 2; n <= 12; ++n) {
        const auto p = construction_params(l, m, n);
        EXPECT_EQ(p.block_count * p.lcm, l * m * n);
        EXPECT_EQ(p.gamma * p.lambda, p.block_count);
        EXPECT_LE(p.lambda, n);
      }
}

TEST(SeedTest, MatchesGolden3x3x6FirstRows) {
  const auto p = construction_params(3, 3, 6);
  EXPECT_EQ(seed(p, 1).vertex, (Vertex{1, 1, 1}));
  EXPECT_EQ(seed(p, 4).vertex, (Vertex{1, 2, 3}));
  EXPECT_EQ(seed(p, 7).vertex, (Vertex{1, 3, 5}));
  EXPECT_THROW(seed(p, 0), Error);
  EXPECT_THROW(seed(p, 10), Error);
}

TEST(BuildBlocksTest, Golden3x3x6Entries) {
  const auto blocks = build_blocks(construction_params(3, 3, 6));
  ASSERT_EQ(blocks.size(), 9u);
  EXPECT_EQ(blocks[1].row(0), (Vertex{1, 1, 2}));
  EXPECT_EQ(blocks[0].row(1), (Vertex{2, 2, 2}));
  EXPECT_EQ(blocks[8].row(5), (Vertex{3, 2, 6}));
}

TEST(BuildOrderingTest, MatchesGolden3x3x6) {
  std::ifstream in(std::string(HAMRAD_GOLDEN_DIR) + "/order_3x3x6.csv");
  ASSERT_TRUE(in);
  std::string line;
  std::getline(in, line);
  std::vector<Vertex> golden;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    auto field = line.substr(comma + 1);
    golden.push_back(parse_vertex(field.substr(1, field.size() - 2)));
  }
  EXPECT_EQ(build_ordering(3, 3, 6).sequence, golden);
}

TEST(BuildOrderingTest, TwoThreeFourPrefix) {
  const auto o = build_ordering(2, 3, 4);
  ASSERT_EQ(o.size(), 24u);
  EXPECT_EQ(o[0], (Vertex{1, 1, 1}));
  EXPECT_EQ(o[1], (Vertex{2, 2, 2}));
  EXPECT_EQ(o[2], (Vertex{1, 3, 3}));
  EXPECT_EQ(o[3], (Vertex{2, 1, 4}));
  EXPECT_TRUE(check_graceful(HammingGraph{2, 3, 4}, o).graceful);
}

TEST(BuildOrderingTest, TwoTwoTwoIsBijectiveButNotGraceful) {
  const HammingGraph g{2, 2, 2};
  const auto o = build_ordering(2, 2, 2);
  EXPECT_TRUE(verify_bijection(g, o));
  EXPECT_FALSE(check_graceful(g, o).graceful);
}

// Every block is generated by its first row through the three cycles, its
// rows are distinct, and its first column is shared with block 1.
TEST(StructureTest, BlocksAreCyclic) {
  for (auto [l, m, n] : sorted_triples(10)) {
    const auto p = construction_params(l, m, n);
    const auto blocks = build_blocks(p);
    ASSERT_EQ(blocks.size(), static_cast<std::size_t>(p.block_count));
    for (const auto& b : blocks) {
      ASSERT_EQ(b.rows(), static_cast<std::size_t>(p.lcm));
      EXPECT_EQ(b.c, blocks.front().c);
      std::set<Vertex> rows;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        const auto shift = static_cast<long long>(r);
        ASSERT_EQ(b.row(r), (Vertex{cyclic_shift(b.c[0], l, shift),
                                    cyclic_shift(b.d[0], m, shift),
                                    cyclic_shift(b.e[0], n, shift)}));
        rows.insert(b.row(r));
      }
      EXPECT_EQ(rows.size(), b.rows()) << l << "x" << m << "x" << n;
    }
  }
}

TEST(StructureTest, SeedsAgreeDistinctAndNeverRepeatInside) {
  for (auto [l, m, n] : sorted_triples(10)) {
    const auto p = construction_params(l, m, n);
    const auto blocks = build_blocks(p);
    std::set<Vertex> seeds;
    for (int k = 1; k <= p.block_count; ++k) {
      const auto s = seed(p, k);
      EXPECT_EQ(s.vertex[0], 1);
      EXPECT_LE(s.vertex[1], p.gamma);
      EXPECT_EQ(blocks[static_cast<std::size_t>(k - 1)].row(0), s.vertex);
      seeds.insert(s.vertex);
    }
    EXPECT_EQ(seeds.size(), static_cast<std::size_t>(p.block_count));

    for (int k = 1; k <= p.block_count; ++k) {
      const auto& b = blocks[static_cast<std::size_t>(k - 1)];
      const int i = seed(p, k).vertex[1];
      for (std::size_t r = 0; r < b.rows(); ++r) {
        const auto row = b.row(r);
        if (r > 0) {
          EXPECT_EQ(seeds.count(row), 0u);
        }
        if (row[0] == 1) {
          EXPECT_EQ((row[1] - i) % p.gamma, 0);
        }
      }
    }
  }
}

TEST(BuildOrderingTest, BijectiveForEveryFactorOrder) {
  for (int l = 2; l <= 7; ++l)
    for (int m = 2; m <= 7; ++m)
      for (int n = 2; n <= 7; ++n) {
        EXPECT_TRUE(verify_bijection(HammingGraph{l, m, n}, build_ordering(l, m, n)))
            << l << "x" << m << "x" << n;
      }
}

TEST(BuildOrderingTest, GracefulExactlyOffTheExceptions) {
  for (auto [l, m, n] : sorted_triples(10)) {
    const HammingGraph g{l, m, n};
    const auto o = build_ordering(l, m, n);
    ASSERT_TRUE(verify_bijection(g, o));
    EXPECT_EQ(check_graceful(g, o).graceful, !exceptional(l, m, n))
        << l << "x" << m << "x" << n;
  }
}

TEST(CyclicShiftTest, WrapsBothWays) {
  EXPECT_EQ(cyclic_shift(1, 3, 1), 2);
  EXPECT_EQ(cyclic_shift(3, 3, 1), 1);
  EXPECT_EQ(cyclic_shift(1, 3, -1), 3);
  EXPECT_EQ(cyclic_shift(2, 5, 13), 5);
}

}  // namespace
}  // namespace hamrad
