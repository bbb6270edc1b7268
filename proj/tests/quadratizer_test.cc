// Copyright 2026 The scp_anneal Authors
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

#include "scp_anneal/quadratizer.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "scp_anneal/error.h"
#include "scp_anneal/formulations.h"
#include "test_fixtures.h"

namespace scp_anneal {
namespace {

using ::testing::ElementsAre;

TEST(GadgetTest, TableValues) {
  EXPECT_EQ(GadgetValue(1, 1, 1), 0);
  EXPECT_EQ(GadgetValue(1, 1, 0), 1);
  EXPECT_EQ(GadgetValue(1, 0, 1), 1);
  EXPECT_EQ(GadgetValue(0, 0, 1), 3);
  EXPECT_EQ(GadgetValue(0, 0, 0), 0);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int u = 0; u < 2; ++u) {
        if (u == a * b) {
          EXPECT_EQ(GadgetValue(a, b, u), 0);
        } else {
          EXPECT_GE(GadgetValue(a, b, u), 1);
        }
      }
    }
  }
}

TEST(SuggestPenaltyTest, Values) {
  EXPECT_NEAR(SuggestPenalty(BuildHubo(testing::MakeT2(), 0.6).poly), 1.6, 1e-12);
  EXPECT_DOUBLE_EQ(SuggestPenalty(BuildHubo(testing::MakeT1(), 1.0).poly), 1.0);
  PseudoBooleanPoly p(5);
  p.AddTerm({0, 1, 2}, 0.6);
  p.AddTerm({2, 3, 4}, -0.4);
  p.AddTerm({0, 4}, 7.0);
  EXPECT_NEAR(SuggestPenalty(p), 2.0, 1e-12);
}

TEST(QuadratizeTest, T2SingleSubstitution) {
  const Hubo h = BuildHubo(testing::MakeT2(), 0.6);
  const QuadratizationResult q = Quadratize(h.poly);
  ASSERT_EQ(q.substitutions.size(), 1u);
  EXPECT_EQ(q.substitutions[0].aux_var, 3);
  EXPECT_EQ(q.substitutions[0].pair, std::make_pair(0, 1));
  EXPECT_NEAR(q.substitutions[0].penalty, 1.6, 1e-12);
  EXPECT_EQ(q.qubo.num_vars(), 4);
  EXPECT_EQ(q.original_vars, 3);
  EXPECT_LE(q.qubo.Degree(), 2);
  EXPECT_NEAR(testing::PolyMinimum(q.qubo), 0.2, 1e-12);
  EXPECT_NEAR(testing::PolyMinimum(h.poly), 0.2, 1e-12);
}

TEST(QuadratizeTest, QuadraticInputUnchanged) {
  const Hubo h = BuildHubo(testing::MakeT1(), 1.0);
  const QuadratizationResult q = Quadratize(h.poly);
  EXPECT_TRUE(q.substitutions.empty());
  EXPECT_EQ(q.qubo, h.poly);
}

TEST(QuadratizeTest, InvalidPenalty) {
  try {
    Quadratize(BuildHubo(testing::MakeT2(), 0.6).poly, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPenalty);
  }
}

TEST(QuadratizeTest, ExtendAndProject) {
  const QuadratizationResult q =
      Quadratize(BuildHubo(testing::MakeT2(), 0.6).poly);
  EXPECT_THAT(ExtendAssignment(q, Assignment{1, 1, 0}), ElementsAre(1, 1, 0, 1));
  EXPECT_THAT(ExtendAssignment(q, Assignment{0, 1, 1}), ElementsAre(0, 1, 1, 0));
  EXPECT_THAT(ProjectAssignment(q, Assignment{1, 1, 0, 1}), ElementsAre(1, 1, 0));
  EXPECT_THAT(ProjectAssignment(q, Assignment{0, 0, 0, 0}), ElementsAre(0, 0, 0));
  for (auto bad : {Assignment{1, 1}, Assignment{1, 1, 0, 1}}) {
    try {
      ExtendAssignment(q, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
    }
  }
  try {
    ProjectAssignment(q, Assignment{1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(QuadratizeTest, GreedyPicksMostFrequentPair) {
  PseudoBooleanPoly p(5);
  p.AddTerm({0, 1, 2}, 1.0);
  p.AddTerm({1, 2, 3}, 1.0);
  p.AddTerm({1, 2, 4}, -1.0);
  const QuadratizationResult q = Quadratize(p);
  ASSERT_EQ(q.substitutions.size(), 1u);
  EXPECT_EQ(q.substitutions[0].pair, std::make_pair(1, 2));
  EXPECT_LE(q.qubo.Degree(), 2);
}

TEST(QuadratizeTest, Deterministic) {
  std::mt19937_64 rng(12);
  const PseudoBooleanPoly p = testing::RandomPoly(rng, 9, 12, 6);
  const QuadratizationResult a = Quadratize(p);
  const QuadratizationResult b = Quadratize(p);
  EXPECT_EQ(a.qubo, b.qubo);
  ASSERT_EQ(a.substitutions.size(), b.substitutions.size());
  for (size_t t = 0; t < a.substitutions.size(); ++t) {
    EXPECT_EQ(a.substitutions[t].pair, b.substitutions[t].pair);
    EXPECT_EQ(a.substitutions[t].aux_var, b.substitutions[t].aux_var);
  }
}

// Minimising over the auxiliary bits gives back the input's value, for
// mixed-sign polynomials of high degree.
TEST(QuadratizeTest, MinOverCompletionsEqualsInput) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 40) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const PseudoBooleanPoly p = testing::RandomPoly(rng, n, 2 + rng() % 6, 5);
    const QuadratizationResult q = Quadratize(p);
    const int aux = static_cast<int>(q.substitutions.size());
    if (n + aux > 14) continue;
    ++checked;
    EXPECT_LE(q.qubo.Degree(), 2);
    for (int t = 0; t < aux; ++t) {
      EXPECT_EQ(q.substitutions[t].aux_var, n + t);
      EXPECT_LT(q.substitutions[t].pair.first, n + t);
      EXPECT_LT(q.substitutions[t].pair.second, n + t);
    }
    for (uint64_t code = 0; code < (uint64_t{1} << n); ++code) {
      const Assignment a = testing::SelectionFromCode(code, n);
      const double target = p.Evaluate(a);
      const Assignment full = ExtendAssignment(q, a);
      EXPECT_NEAR(q.qubo.Evaluate(full), target, 1e-9);
      for (const auto& sub : q.substitutions) {
        EXPECT_EQ(GadgetValue(full[sub.pair.first], full[sub.pair.second],
                              full[sub.aux_var]),
                  0);
      }
      double best = INFINITY;
      for (uint64_t s = 0; s < (uint64_t{1} << aux); ++s) {
        Assignment b = a;
        for (int t = 0; t < aux; ++t) b.push_back((s >> t) & 1);
        best = std::min(best, q.qubo.Evaluate(b));
      }
      EXPECT_NEAR(best, target, 1e-9);
    }
  }
}

}  // namespace
}  // namespace scp_anneal
