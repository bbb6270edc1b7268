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

#ifndef SCP_ANNEAL_ALM_DRIVER_H_
#define SCP_ANNEAL_ALM_DRIVER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scp_anneal/scp_instance.h"
#include "scp_anneal/solvers.h"

namespace scp_anneal {

struct AlmParams {
  double mu0 = 0.5;
  // Initial multiplier, broadcast over all elements.
  double lambda0 = 0.0;
  double rho = 1.1;
  int max_iters = 10;
};

// State entering and result of one outer iteration.
struct AlmIteration {
  int iteration = 0;  // 1-based
  double mu = 0.0;
  std::vector<double> lambda;
  CoverSelection selection;
  // Inner objective without its constant, as minimised by the solver.
  double inner_energy = 0.0;
  int uncovered = 0;
  double reported_cost = 0.0;
  bool feasible() const { return uncovered == 0; }
};

struct AlmTrace {
  std::vector<AlmIteration> iterations;
  // 1-based iteration whose selection run_alm returned.
  int best_iteration = 0;
};

struct AlmResult {
  CoverSelection best;
  AlmTrace trace;
};

// c_i(x) = 1 - sum_{j in sigma_i} x_j, one entry per element; c_i <= 0 iff
// element i is covered. Throws Error(kLengthMismatch).
std::vector<double> ConstraintValues(const ScpInstance& inst,
                                     std::span<const uint8_t> selection);

// Outer loop of the augmented Lagrangian method:
//
//   repeat
//     x <- argmin of the AL objective for (lambda, mu)
//     lambda_i <- lambda_i + mu c_i(x) for every c_i(x) > 0
//     mu <- rho mu
//   until c(x) <= 0 or max_iters iterations ran
//
// Iteration t calls `solver` with a seed derived from (seed, t). Returns the
// selection of the best iteration: feasible before infeasible, then lowest
// reported cost, fewest uncovered elements, earliest iteration.
// Throws Error(kInvalidParams); solver errors propagate.
AlmResult RunAlm(const ScpInstance& inst, const Solver& solver,
                 const AlmParams& params, uint64_t seed = 0);

// CSV with header iteration,mu,uncovered,reported_cost,feasible,best.
std::string TraceToCsv(const AlmTrace& trace);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_ALM_DRIVER_H_
