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

#ifndef SCP_ANNEAL_BENCH_HARNESS_H_
#define SCP_ANNEAL_BENCH_HARNESS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "scp_anneal/alm_driver.h"
#include "scp_anneal/scp_instance.h"
#include "scp_anneal/solvers.h"

namespace scp_anneal {

// Pipelines compared by the harness. The enum order is the row order of
// the results CSV.
enum class Method {
  kSvSa,        // slack QUBO -> annealing -> decode
  kAlSa,        // augmented Lagrangian loop with an annealing inner solver
  kHuboSa,      // HUBO annealed directly
  kHuboQuadSa,  // HUBO -> quadratize -> annealing -> project -> decode
  kGreedy,      // weighted greedy baseline
};

std::string MethodName(Method method);
// Throws Error(kInvalidConfig) for unknown names.
Method ParseMethod(const std::string& name);
std::vector<Method> AllMethods();

struct ExperimentConfig {
  std::vector<int> m_values = {50, 75, 100};
  double coverage = 3.0;
  FillRule fill_rule = FillRule::kPaperMc;
  int instances_per_cell = 3;
  std::vector<Method> methods = AllMethods();
  uint64_t master_seed = 1;
  SaParams sa;
  AlmParams alm;
  // Slack and HUBO penalties are max weight + penalty_margin.
  double penalty_margin = 0.1;
  // Wall time is not reproducible; when false the wall_ms column is 0.
  bool record_timing = false;
  // When nonempty, these instances replace the generated grid; each is
  // reported with its own (m, n) and instance_id = position in the list.
  std::vector<ScpInstance> pinned_instances;
};

// ceil(0.5 m), ceil(0.75 m), m, without repeats (small m can collide).
std::vector<int> ElementCounts(int m);

struct ResultRecord {
  Method method = Method::kGreedy;
  int m = 0;
  int n = 0;
  int instance_id = 0;
  uint64_t seed = 0;
  double reported_cost = 0.0;
  bool feasible = false;
  int uncovered = 0;
  int64_t num_vars = 0;
  int64_t num_couplers = 0;
  double wall_ms = 0.0;
  // Empty unless the pipeline threw; failed rows report the total weight.
  std::string error;
  CoverSelection selection;
};

// Runs one pipeline on one instance. Annealing-based methods minimise with
// `solver`; pass MakeAnnealingSolver(cfg.sa) for the standard setup.
ResultRecord RunMethod(const ScpInstance& inst, Method method,
                       const ExperimentConfig& cfg, const Solver& solver,
                       uint64_t seed);

// Seeds for instance generation and for one method on one instance.
uint64_t InstanceSeed(uint64_t master_seed, int m, int n, int instance_id);
uint64_t MethodSeed(uint64_t master_seed, int m, int n, int instance_id,
                    Method method);

// Throws Error(kInvalidConfig) when the config cannot be run.
void ValidateConfig(const ExperimentConfig& cfg);

// Every (m, n, repetition) cell times every method, rows ordered by
// (method, m, n, instance_id). Pipeline errors are recorded per row and do
// not stop the run.
std::vector<ResultRecord> RunExperiment(const ExperimentConfig& cfg);

// The instances RunExperiment would use, in (m, n, instance_id) order.
struct CellInstance {
  int m = 0;
  int n = 0;
  int instance_id = 0;
  ScpInstance instance;
};
std::vector<CellInstance> ExperimentInstances(const ExperimentConfig& cfg);

// Header: method,m,n,instance_id,seed,reported_cost,feasible,uncovered,
// num_vars,num_couplers,wall_ms
std::string ResultsToCsv(const std::vector<ResultRecord>& records,
                         bool record_timing);

struct CellSummary {
  Method method = Method::kGreedy;
  int m = 0;
  int n = 0;
  int count = 0;
  double mean_cost = 0.0;
  // mean_cost / baseline mean_cost in the same (m, n) cell.
  double normalized_cost = 0.0;
};

// Per-(method, m, n) means normalised by the baseline method. Throws
// Error(kMissingBaseline) when a cell has no baseline rows and
// Error(kZeroBaselineCost) when the baseline mean is 0.
std::vector<CellSummary> NormalizeCosts(const std::vector<ResultRecord>& records,
                                        Method baseline);

// Mean normalized_cost of `method` over the n cells of group m; NaN when
// there are none.
double MeanNormalizedCost(const std::vector<CellSummary>& summaries,
                          Method method, int m);

std::string SummaryToCsv(const std::vector<CellSummary>& summaries);

// JSON config with optional keys m_values, coverage, fill_rule,
// instances_per_cell, methods, master_seed, num_reads, sweeps_per_read,
// t_hot, t_cold, num_threads, mu0, lambda0, rho, max_iters, penalty_margin,
// record_timing, instance_files. Throws Error(kInvalidConfig).
ExperimentConfig ParseExperimentConfig(const std::string& text);
ExperimentConfig ReadExperimentConfig(const std::string& path);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_BENCH_HARNESS_H_
