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

#include "scp_anneal/pseudo_boolean_poly.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "scp_anneal/error.h"
#include "scp_anneal/formulations.h"
#include "test_fixtures.h"

namespace scp_anneal {
namespace {

TEST(PseudoBooleanPolyTest, AddTermCancelsToAbsent) {
  PseudoBooleanPoly p(2);
  p.AddTerm({0, 1}, 0.5);
  p.AddTerm({1, 0}, -0.5);
  EXPECT_TRUE(p.terms().empty());
  EXPECT_EQ(p.CountCouplers(), 0);
}

TEST(PseudoBooleanPolyTest, EmptyTermIsConstant) {
  PseudoBooleanPoly p(1);
  p.AddTerm({}, 1.7);
  EXPECT_DOUBLE_EQ(p.constant(), 1.7);
  EXPECT_EQ(p.Degree(), 0);
}

TEST(PseudoBooleanPolyTest, AddTermErrors) {
  PseudoBooleanPoly p(3);
  try {
    p.AddTerm({0, 0}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateIndexInTerm);
  }
  try {
    p.AddTerm({1, 3}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(PseudoBooleanPolyTest, ZeroToleranceDropsDust) {
  PseudoBooleanPoly p(2, 1e-12);
  p.AddTerm({0}, 0.1 + 0.2);
  p.AddTerm({0}, -0.3);
  EXPECT_TRUE(p.terms().empty());
  PseudoBooleanPoly exact(2);
  exact.AddTerm({0}, 0.1 + 0.2);
  exact.AddTerm({0}, -0.3);
  EXPECT_EQ(exact.terms().size(), 1u);
}

TEST(PseudoBooleanPolyTest, Evaluate) {
  PseudoBooleanPoly p(2);
  p.AddTerm({0}, 1.0);
  p.AddTerm({0, 1}, -2.0);
  EXPECT_DOUBLE_EQ(p.Evaluate(Assignment{1, 1}), -1.0);
  EXPECT_DOUBLE_EQ(p.Evaluate(Assignment{0, 1}), 0.0);
  try {
    p.Evaluate(Assignment{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(PseudoBooleanPolyTest, DegreeOfSetCoverModels) {
  EXPECT_EQ(PseudoBooleanPoly(4).Degree(), 0);
  EXPECT_EQ(BuildHubo(testing::MakeT1(), 1.0).poly.Degree(), 2);
  EXPECT_EQ(BuildHubo(testing::MakeT2(), 0.6).poly.Degree(), 3);
}

TEST(PseudoBooleanPolyTest, Counting) {
  const PseudoBooleanPoly empty(5);
  EXPECT_EQ(empty.CountVariables(), 5);
  EXPECT_EQ(empty.CountCouplers(), 0);
  const std::vector<double> lambda{0.0, 0.0};
  const AlmObjective al = BuildAlmObjective(testing::MakeT1(), lambda, 0.5);
  EXPECT_EQ(al.poly.CountVariables(), 3);
  EXPECT_EQ(al.poly.CountCouplers(), 2);
  const SlackQubo sv = BuildSlackQubo(testing::MakeT1(), 1.0);
  EXPECT_EQ(sv.poly.CountVariables(), 7);
  EXPECT_EQ(sv.poly.CountCouplers(), 12);
}

TEST(PseudoBooleanPolyTest, EvaluationIsLinear) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const PseudoBooleanPoly p = testing::RandomPoly(rng, 6, 10, 4);
    const PseudoBooleanPoly q = testing::RandomPoly(rng, 6, 10, 4);
    const PseudoBooleanPoly sum = p + q;
    for (uint64_t code = 0; code < 64; ++code) {
      const Assignment a = testing::SelectionFromCode(code, 6);
      EXPECT_NEAR(sum.Evaluate(a), p.Evaluate(a) + q.Evaluate(a), 1e-9);
    }
  }
}

TEST(PseudoBooleanPolyTest, TermOrderDoesNotMatter) {
  PseudoBooleanPoly a(4);
  PseudoBooleanPoly b(4);
  a.AddTerm({3, 1, 2}, 1.5);
  b.AddTerm({1, 2, 3}, 1.5);
  EXPECT_EQ(a, b);
  EXPECT_DOUBLE_EQ(a.Coefficient({2, 3, 1}), 1.5);
}

TEST(ToIsingTest, ProductTerm) {
  PseudoBooleanPoly p(2);
  p.AddTerm({0, 1}, 3.0);
  const IsingModel ising = ToIsing(p);
  EXPECT_DOUBLE_EQ(ising.couplings.at({0, 1}), 0.75);
  EXPECT_DOUBLE_EQ(ising.fields[0], 0.75);
  EXPECT_DOUBLE_EQ(ising.fields[1], 0.75);
  EXPECT_DOUBLE_EQ(ising.offset, 0.75);
}

TEST(ToIsingTest, LinearTerm) {
  PseudoBooleanPoly p(1);
  p.AddTerm({0}, 1.0);
  const IsingModel ising = ToIsing(p);
  EXPECT_TRUE(ising.couplings.empty());
  EXPECT_DOUBLE_EQ(ising.fields[0], 0.5);
  EXPECT_DOUBLE_EQ(ising.offset, 0.5);
}

TEST(ToIsingTest, RejectsCubic) {
  PseudoBooleanPoly p(3);
  p.AddTerm({0, 1, 2}, 1.0);
  try {
    ToIsing(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooHigh);
  }
}

TEST(ToIsingTest, ExhaustiveRoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const PseudoBooleanPoly p = testing::RandomPoly(rng, n, 3 * n, 2);
    const IsingModel ising = ToIsing(p);
    EXPECT_EQ(static_cast<int64_t>(ising.couplings.size()), p.CountCouplers());
    for (uint64_t code = 0; code < (uint64_t{1} << n); ++code) {
      const Assignment x = testing::SelectionFromCode(code, n);
      std::vector<int8_t> s(n);
      for (int v = 0; v < n; ++v) s[v] = x[v] ? 1 : -1;
      EXPECT_NEAR(p.Evaluate(x), ising.Energy(s), 1e-9);
    }
  }
}

}  // namespace
}  // namespace scp_anneal
