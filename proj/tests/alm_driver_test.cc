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

#include "scp_anneal/alm_driver.h"

#include <cmath>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "scp_anneal/error.h"
#include "scp_anneal/solvers.h"
#include "test_fixtures.h"

namespace scp_anneal {
namespace {

using ::testing::ElementsAre;

TEST(ConstraintValuesTest, Examples) {
  const ScpInstance t1 = testing::MakeT1();
  EXPECT_THAT(ConstraintValues(t1, CoverSelection{0, 0, 0}), ElementsAre(1, 1));
  EXPECT_THAT(ConstraintValues(t1, CoverSelection{1, 0, 1}), ElementsAre(0, 0));
  EXPECT_THAT(ConstraintValues(t1, CoverSelection{1, 1, 1}),
              ElementsAre(-1, -1));
}

TEST(RunAlmTest, T1Trace) {
  const AlmResult r =
      RunAlm(testing::MakeT1(), MakeBruteForceSolver(), AlmParams{});
  ASSERT_EQ(r.trace.iterations.size(), 2u);
  const AlmIteration& first = r.trace.iterations[0];
  EXPECT_EQ(first.iteration, 1);
  EXPECT_DOUBLE_EQ(first.mu, 0.5);
  EXPECT_THAT(first.lambda, ElementsAre(0.0, 0.0));
  EXPECT_THAT(first.selection, ElementsAre(0, 0, 0));
  EXPECT_EQ(first.uncovered, 2);
  EXPECT_DOUBLE_EQ(first.reported_cost, 1.7);
  const AlmIteration& second = r.trace.iterations[1];
  EXPECT_EQ(second.iteration, 2);
  EXPECT_NEAR(second.mu, 0.55, 1e-15);
  EXPECT_THAT(second.lambda, ElementsAre(0.5, 0.5));
  EXPECT_THAT(second.selection, ElementsAre(1, 0, 1));
  EXPECT_NEAR(second.inner_energy, -0.75, 1e-12);
  EXPECT_TRUE(second.feasible());
  EXPECT_EQ(r.trace.best_iteration, 2);
  EXPECT_THAT(r.best, ElementsAre(1, 0, 1));
  EXPECT_NEAR(CoverCost(testing::MakeT1(), r.best), 0.8, 1e-12);
}

TEST(RunAlmTest, T2StopsAfterOneIteration) {
  const AlmResult r =
      RunAlm(testing::MakeT2(), MakeBruteForceSolver(), AlmParams{});
  ASSERT_EQ(r.trace.iterations.size(), 1u);
  EXPECT_THAT(r.best, ElementsAre(1, 0, 0));
  EXPECT_NEAR(r.trace.iterations[0].reported_cost, 0.2, 1e-12);
}

TEST(RunAlmTest, InvalidParams) {
  for (auto mutate : std::vector<void (*)(AlmParams&)>{
           [](AlmParams& p) { p.max_iters = 0; },
           [](AlmParams& p) { p.mu0 = 0.0; },
           [](AlmParams& p) { p.rho = 1.0; },
       }) {
    AlmParams params;
    mutate(params);
    try {
      RunAlm(testing::MakeT1(), MakeBruteForceSolver(), params);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
    }
  }
}

TEST(RunAlmTest, TraceCsv) {
  const AlmResult r =
      RunAlm(testing::MakeT1(), MakeBruteForceSolver(), AlmParams{});
  EXPECT_EQ(TraceToCsv(r.trace),
            "iteration,mu,uncovered,reported_cost,feasible,best\n"
            "1,0.5,2,1.7,0,0\n"
            "2,0.55000000000000004,0,0.80000000000000004,1,1\n");
}

// Trace invariants on random instances: exact mu schedule, monotone lambda
// that moves only on violated rows, consistent costs, early stop only when
// feasible, and the best iteration respects the ranking rule.
TEST(RunAlmTest, TraceInvariants) {
  std::mt19937_64 rng(31);
  AlmParams params;
  params.max_iters = 10;
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 10);
    const int n = 1 + static_cast<int>(rng() % m);
    const ScpInstance inst =
        GenerateInstance({m, n, 1.5, FillRule::kPerElementNc}, rng());
    const AlmResult r = RunAlm(inst, MakeBruteForceSolver(), params, trial);
    const auto& its = r.trace.iterations;
    ASSERT_FALSE(its.empty());
    ASSERT_LE(its.size(), 10u);
    for (size_t t = 0; t < its.size(); ++t) {
      EXPECT_EQ(its[t].iteration, static_cast<int>(t) + 1);
      EXPECT_NEAR(its[t].mu, 0.5 * std::pow(1.1, t), 1e-12);
      EXPECT_DOUBLE_EQ(its[t].reported_cost, ReportedCost(inst, its[t].selection));
      EXPECT_EQ(its[t].uncovered, testing::CountUncovered(inst, its[t].selection));
      if (t + 1 < its.size()) {
        EXPECT_FALSE(its[t].feasible());
        const std::vector<double> c = ConstraintValues(inst, its[t].selection);
        for (int i = 0; i < n; ++i) {
          if (c[i] > 0) {
            EXPECT_DOUBLE_EQ(its[t + 1].lambda[i],
                             its[t].lambda[i] + its[t].mu * c[i]);
          } else {
            EXPECT_EQ(its[t + 1].lambda[i], its[t].lambda[i]);
          }
        }
      }
    }
    if (its.size() < 10u) EXPECT_TRUE(its.back().feasible());
    const AlmIteration& best = its[r.trace.best_iteration - 1];
    EXPECT_EQ(best.selection, r.best);
    for (const auto& it : its) {
      if (it.feasible() == best.feasible()) {
        EXPECT_GE(it.reported_cost, best.reported_cost);
      } else {
        EXPECT_TRUE(best.feasible());
      }
    }
  }
}

// Statistical acceptance: exact inner minimisation reaches a feasible cover
// within 10 iterations on >= 90% of 30 small random instances.
TEST(RunAlmTest, FeasibleOnMostSmallInstances) {
  std::mt19937_64 rng(32);
  int feasible = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 4 + static_cast<int>(rng() % 9);
    const int n = 2 + static_cast<int>(rng() % (m - 1));
    const ScpInstance inst =
        GenerateInstance({m, n, 2.0, FillRule::kPerElementNc}, rng());
    const AlmResult r = RunAlm(inst, MakeBruteForceSolver(), AlmParams{});
    feasible += IsFeasible(inst, r.best) ? 1 : 0;
  }
  EXPECT_GE(feasible, 27);
}

}  // namespace
}  // namespace scp_anneal
