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

#include "hamrad/exceptional.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace hamrad {
namespace {

std::vector<int> labels_in_order(const RadioLabeling& f) {
  std::vector<int> out;
  for (const auto& [v, label] : f.sorted_by_label()) out.push_back(label);
  return out;
}

TEST(FormulaTest, Values) {
  EXPECT_EQ(radio_number_formula(2, 3, 3).value, 20);
  EXPECT_EQ(radio_number_formula(2, 3, 3).case_tag, RnCase::kTwoThreeThree);
  EXPECT_EQ(radio_number_formula(2, 2, 5).value, 29);
  EXPECT_EQ(radio_number_formula(2, 2, 5).case_tag, RnCase::kTwoTwoN);
  EXPECT_EQ(radio_number_formula(3, 3, 6).value, 54);
  EXPECT_EQ(radio_number_formula(3, 3, 6).case_tag, RnCase::kGraceful);
  EXPECT_EQ(radio_number_formula(2, 2, 1).value, 5);
  EXPECT_EQ(radio_number_formula(2, 3, 4).value, 24);
}

TEST(FormulaTest, RejectsUnsortedOrSmall) {
  EXPECT_THROW(radio_number_formula(3, 2, 4), Error);
  EXPECT_THROW(radio_number_formula(2, 4, 3), Error);
  EXPECT_THROW(radio_number_formula(1, 2, 3), Error);
}

TEST(Labeling233Test, MatchesTableAndValidates) {
  const auto f = labeling_233();
  EXPECT_EQ(f.label({1, 1, 1}), 1);
  EXPECT_EQ(f.label({2, 3, 2}), 20);
  EXPECT_EQ(f.label({1, 1, 2}), 8);
  const auto report = validate(HammingGraph{2, 3, 3}, f);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.span, 20);
}

TEST(Labeling22nTest, BaseCases) {
  const auto g1 = labeling_22n(1);
  EXPECT_EQ(g1.graph(), (HammingGraph{2, 2}));
  EXPECT_EQ(g1.label({1, 1}), 1);
  EXPECT_EQ(g1.label({2, 2}), 2);
  EXPECT_EQ(g1.label({2, 1}), 4);
  EXPECT_EQ(g1.label({1, 2}), 5);

  EXPECT_EQ(ordering_22n(2).sequence,
            (std::vector<Vertex>{{1, 1, 1}, {2, 2, 2}, {2, 1, 1}, {1, 2, 2},
                                 {2, 1, 2}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}}));
  EXPECT_EQ(labels_in_order(labeling_22n(2)),
            (std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11}));
  EXPECT_EQ(labels_in_order(labeling_22n(3)),
            (std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17}));
  EXPECT_EQ(ordering_22n(3).sequence.back(), (Vertex{1, 2, 3}));
  EXPECT_THROW(labeling_22n(0), Error);
}

TEST(Labeling22nTest, AppendBlockForFour) {
  const auto o = ordering_22n(4);
  const std::vector<Vertex> tail(o.sequence.begin() + 8, o.sequence.end());
  EXPECT_EQ(tail, (std::vector<Vertex>{{1, 1, 3}, {2, 2, 4}, {2, 1, 3}, {1, 2, 4},
                                       {2, 1, 4}, {1, 2, 3}, {1, 1, 4}, {2, 2, 3}}));
  const auto f = labeling_22n(4);
  std::vector<int> tail_labels;
  for (const auto& v : tail) tail_labels.push_back(f.label(v));
  EXPECT_EQ(tail_labels, (std::vector<int>{13, 14, 16, 17, 19, 20, 22, 23}));
  EXPECT_EQ(validate(HammingGraph{2, 2, 4}, f).span, 23);
}

TEST(Labeling22nTest, ValidWithSpanSixNMinusOne) {
  for (int n = 1; n <= 50; ++n) {
    const auto f = labeling_22n(n);
    const auto report = validate(graph_22n(n), f);
    ASSERT_TRUE(report.valid) << n;
    EXPECT_EQ(report.span, 6 * n - 1) << n;

    const auto o = ordering_22n(n);
    EXPECT_EQ(span_of_ordering(graph_22n(n), o).span, 6 * n - 1);
    if (n % 2 == 0) {
      const auto& seq = o.sequence;
      EXPECT_EQ(seq[seq.size() - 2], (Vertex{1, 1, n}));
      EXPECT_EQ(seq.back(), (Vertex{2, 2, n - 1}));
      EXPECT_EQ(f.label(seq[seq.size() - 2]), 6 * n - 2);
    }
  }
}

TEST(MaxRunTest, KnownValues) {
  EXPECT_EQ(max_consecutive_run(HammingGraph{2, 3, 3}), 6);
  EXPECT_EQ(max_consecutive_run(HammingGraph{2, 2, 3}), 2);
  EXPECT_EQ(max_consecutive_run(HammingGraph{3}), 3);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(max_consecutive_run(HammingGraph{2, 2, n}), 2) << n;
  }
}

TEST(MaxRunTest, AgreesWithPlainEnumeration) {
  for (const auto& sizes : std::vector<std::vector<int>>{
           {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 4}, {2, 2, 2, 2}}) {
    EXPECT_EQ(max_consecutive_run(HammingGraph(sizes)), testing::naive_max_run(sizes))
        << to_string(HammingGraph(sizes));
  }
}

TEST(MaxRunTest, BudgetExhaustionCarriesBound) {
  try {
    max_consecutive_run(HammingGraph{2, 3, 3}, 3);
    FAIL();
  } catch (const BudgetExhausted& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExhausted);
    EXPECT_GE(e.best_bound(), 1);
    EXPECT_LE(e.best_bound(), 6);
  }
}

TEST(JumpBoundTest, Values) {
  EXPECT_EQ(jump_lower_bound(18, 6), 20);
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(jump_lower_bound(4 * n, 2), 6 * n - 1);
  EXPECT_EQ(jump_lower_bound(5, 5), 5);
  EXPECT_THROW(jump_lower_bound(5, 6), Error);
  EXPECT_THROW(jump_lower_bound(5, 0), Error);
}

TEST(ConstructiveLabelingTest, AnyFactorOrder) {
  for (const auto& sizes : std::vector<std::vector<int>>{
           {3, 3, 6}, {6, 3, 3}, {3, 2, 3}, {4, 2, 2}, {2, 2, 1}, {1, 2, 2}, {2, 2}, {5, 4, 3}}) {
    const HammingGraph g(sizes);
    const auto f = constructive_labeling(g);
    ASSERT_TRUE(f.has_value()) << to_string(g);
    const auto report = validate(g, *f);
    EXPECT_TRUE(report.valid) << to_string(g);
    const FactorSort sort(g);
    const auto& s = sort.sorted().factor_sizes();
    const int expected = s.size() == 3 && s[0] >= 2
                             ? radio_number_formula(s[0], s[1], s[2]).value
                             : 5;
    EXPECT_EQ(report.span, expected) << to_string(g);
  }
  EXPECT_FALSE(constructive_labeling(HammingGraph{2, 3}).has_value());
  EXPECT_FALSE(constructive_labeling(HammingGraph{2, 2, 2, 2}).has_value());
}

}  // namespace
}  // namespace hamrad
