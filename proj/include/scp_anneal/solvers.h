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

#ifndef SCP_ANNEAL_SOLVERS_H_
#define SCP_ANNEAL_SOLVERS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "scp_anneal/pseudo_boolean_poly.h"
#include "scp_anneal/scp_instance.h"

namespace scp_anneal {

struct SolverResult {
  Assignment best_assignment;
  // Always equal to Evaluate(best_assignment) on the solved polynomial.
  double best_energy = 0.0;
  // One entry per read; empty for exact solvers.
  std::vector<double> read_energies;
  std::chrono::nanoseconds elapsed{0};
  uint64_t seed_used = 0;
};

// A minimiser of pseudo-Boolean polynomials. Implementations must be
// deterministic in (poly, seed).
using Solver =
    std::function<SolverResult(const PseudoBooleanPoly& poly, uint64_t seed)>;

inline constexpr int kDefaultBruteForceLimit = 26;

// Exhaustive minimum over all 2^num_vars assignments. Ties go to the
// lexicographically smallest assignment (bit 0 most significant).
// Throws Error(kTooManyVariables) above `max_vars`.
SolverResult BruteForce(const PseudoBooleanPoly& poly,
                        int max_vars = kDefaultBruteForceLimit);

struct SaParams {
  int num_reads = 1000;
  int sweeps_per_read = 100;
  // Geometric schedule from t_hot down to t_cold. A value <= 0 selects the
  // default: t_hot = max |coefficient|, t_cold = 1e-3 * min |coefficient|.
  double t_hot = 0.0;
  double t_cold = 0.0;
  uint64_t seed = 0;
  // Worker threads for the reads; 0 means hardware concurrency. The result
  // does not depend on this value.
  int num_threads = 0;
};

// Metropolis single-bit-flip annealing on a polynomial of any degree. Each
// read starts from a uniformly random state, runs sweeps_per_read sweeps
// of num_vars uniformly chosen flips and keeps its final state; read r
// draws from a stream derived from (seed, r). Throws Error(kInvalidParams).
SolverResult SimulatedAnnealing(const PseudoBooleanPoly& poly,
                                const SaParams& params);

// Default (t_hot, t_cold) for `poly`; (1, 1e-3) when it has no terms.
std::pair<double, double> DefaultTemperatures(const PseudoBooleanPoly& poly);

// Wraps brute force and annealing in the Solver contract. The annealer
// uses `params` with its seed replaced by the call's seed.
Solver MakeBruteForceSolver(int max_vars = kDefaultBruteForceLimit);
Solver MakeAnnealingSolver(const SaParams& params);

// Chvatal's weighted greedy: repeatedly take the set with the smallest
// weight per newly covered element (ties: smallest index) until every
// element is covered.
CoverSelection GreedyCover(const ScpInstance& inst);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_SOLVERS_H_
