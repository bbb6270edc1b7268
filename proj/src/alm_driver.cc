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
#include <cstdio>
#include <tuple>

#include "scp_anneal/error.h"
#include "scp_anneal/formulations.h"
#include "scp_anneal/random.h"

namespace scp_anneal {

std::vector<double> ConstraintValues(const ScpInstance& inst,
                                     std::span<const uint8_t> selection) {
  if (static_cast<int>(selection.size()) != inst.num_sets()) {
    throw Error(ErrorCode::kLengthMismatch,
                "selection length differs from the number of sets");
  }
  std::vector<double> c(inst.num_elements());
  for (int i = 0; i < inst.num_elements(); ++i) {
    int chosen = 0;
    for (const int j : inst.covering_sets(i)) chosen += selection[j] ? 1 : 0;
    c[i] = 1.0 - chosen;
  }
  return c;
}

AlmResult RunAlm(const ScpInstance& inst, const Solver& solver,
                 const AlmParams& params, uint64_t seed) {
  if (!(params.mu0 > 0.0) || !std::isfinite(params.mu0)) {
    throw Error(ErrorCode::kInvalidParams, "mu0 must be positive");
  }
  if (!(params.rho > 1.0) || !std::isfinite(params.rho)) {
    throw Error(ErrorCode::kInvalidParams, "rho must exceed 1");
  }
  if (params.max_iters < 1) {
    throw Error(ErrorCode::kInvalidParams, "max_iters must be >= 1");
  }
  if (!std::isfinite(params.lambda0)) {
    throw Error(ErrorCode::kInvalidParams, "lambda0 must be finite");
  }

  AlmResult result;
  std::vector<double> lambda(inst.num_elements(), params.lambda0);
  double mu = params.mu0;
  for (int t = 1; t <= params.max_iters; ++t) {
    const AlmObjective objective = BuildAlmObjective(inst, lambda, mu);
    const SolverResult solved =
        solver(objective.poly, DeriveSeed(seed, {uint64_t(t)}));

    AlmIteration record;
    record.iteration = t;
    record.mu = mu;
    record.lambda = lambda;
    record.selection = solved.best_assignment;
    record.inner_energy = solved.best_energy;
    record.uncovered =
        static_cast<int>(UncoveredElements(inst, record.selection).size());
    record.reported_cost = ReportedCost(inst, record.selection);

    const std::vector<double> c = ConstraintValues(inst, record.selection);
    for (int i = 0; i < inst.num_elements(); ++i) {
      if (c[i] > 0) lambda[i] += mu * c[i];
    }
    mu *= params.rho;
    const bool done = record.feasible();
    result.trace.iterations.push_back(std::move(record));
    if (done) break;
  }

  auto rank = [](const AlmIteration& it) {
    return std::make_tuple(!it.feasible(), it.reported_cost, it.uncovered,
                           it.iteration);
  };
  const AlmIteration* best = &result.trace.iterations.front();
  for (const auto& it : result.trace.iterations) {
    if (rank(it) < rank(*best)) best = &it;
  }
  result.best = best->selection;
  result.trace.best_iteration = best->iteration;
  return result;
}

std::string TraceToCsv(const AlmTrace& trace) {
  std::string out = "iteration,mu,uncovered,reported_cost,feasible,best\n";
  char line[160];
  for (const auto& it : trace.iterations) {
    std::snprintf(line, sizeof(line), "%d,%.17g,%d,%.17g,%d,%d\n", it.iteration,
                  it.mu, it.uncovered, it.reported_cost, it.feasible() ? 1 : 0,
                  it.iteration == trace.best_iteration ? 1 : 0);
    out += line;
  }
  return out;
}

}  // namespace scp_anneal
