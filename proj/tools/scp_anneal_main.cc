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

// Command-line front end:
//   scp_anneal generate   --m M --n N [--coverage C] [--seed S] [--out FILE]
//   scp_anneal solve      --instance FILE --method HUBO_SA [--exact] ...
//   scp_anneal experiment --config FILE --out results.csv [--summary FILE]
//   scp_anneal trace      --instance FILE --out trace.csv [--exact] ...

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "scp_anneal/alm_driver.h"
#include "scp_anneal/bench_harness.h"
#include "scp_anneal/error.h"
#include "scp_anneal/instance_io.h"
#include "scp_anneal/scp_instance.h"
#include "scp_anneal/solvers.h"

namespace {

using namespace scp_anneal;

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
}

void AddSolverOptions(CLI::App* cmd, SaParams& sa, bool& exact) {
  cmd->add_option("--reads", sa.num_reads, "Annealing reads");
  cmd->add_option("--sweeps", sa.sweeps_per_read, "Sweeps per read");
  cmd->add_option("--t-hot", sa.t_hot, "Initial temperature (<= 0: auto)");
  cmd->add_option("--t-cold", sa.t_cold, "Final temperature (<= 0: auto)");
  cmd->add_option("--threads", sa.num_threads, "Worker threads (0: all cores)");
  cmd->add_flag("--exact", exact,
                "Minimise with exhaustive enumeration instead of annealing");
}

std::string SelectionLabels(const CoverSelection& sel) {
  std::string out;
  for (size_t j = 0; j < sel.size(); ++j) {
    if (!sel[j]) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(j + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted set cover through QUBO/HUBO annealing models"};
  app.require_subcommand(1);

  GeneratorConfig gen;
  std::string fill_rule = "paper_mc";
  uint64_t gen_seed = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--m", gen.num_sets, "Number of sets")->required();
  generate->add_option("--n", gen.num_elements, "Number of elements")->required();
  generate->add_option("--coverage", gen.coverage, "Coverage c");
  generate->add_option("--fill-rule", fill_rule, "paper_mc or per_element_nc");
  generate->add_option("--seed", gen_seed, "Generator seed");
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  std::string solve_instance;
  std::string solve_method = "HUBO_SA";
  uint64_t solve_seed = 0;
  bool solve_exact = false;
  ExperimentConfig solve_cfg;
  auto* solve = app.add_subcommand("solve", "Solve one instance with one method");
  solve->add_option("--instance", solve_instance, "Instance JSON")->required();
  solve->add_option("--method", solve_method,
                    "SV_SA, AL_SA, HUBO_SA, HUBO_QUAD_SA or GREEDY");
  solve->add_option("--seed", solve_seed, "Solver seed");
  solve->add_option("--penalty-margin", solve_cfg.penalty_margin,
                    "Penalty is max weight plus this margin");
  solve->add_option("--max-iters", solve_cfg.alm.max_iters, "ALM iterations");
  AddSolverOptions(solve, solve_cfg.sa, solve_exact);

  std::string config_path;
  std::string results_out;
  std::string summary_out;
  std::string baseline = "HUBO_SA";
  auto* experiment = app.add_subcommand("experiment", "Run a config file");
  experiment->add_option("--config", config_path, "Experiment JSON")->required();
  experiment->add_option("--out", results_out, "Results CSV (default stdout)");
  experiment->add_option("--summary", summary_out, "Normalized summary CSV");
  experiment->add_option("--baseline", baseline, "Normalization baseline");

  std::string trace_instance;
  std::string trace_out;
  uint64_t trace_seed = 0;
  bool trace_exact = false;
  SaParams trace_sa;
  AlmParams trace_alm;
  auto* trace = app.add_subcommand("trace", "Per-iteration ALM trace as CSV");
  trace->add_option("--instance", trace_instance, "Instance JSON")->required();
  trace->add_option("--out", trace_out, "Trace CSV (default stdout)");
  trace->add_option("--seed", trace_seed, "Solver seed");
  trace->add_option("--mu0", trace_alm.mu0, "Initial penalty");
  trace->add_option("--lambda0", trace_alm.lambda0, "Initial multipliers");
  trace->add_option("--rho", trace_alm.rho, "Penalty growth factor");
  trace->add_option("--max-iters", trace_alm.max_iters, "Iteration limit");
  AddSolverOptions(trace, trace_sa, trace_exact);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      gen.fill_rule = ParseFillRule(fill_rule);
      WriteText(gen_out, SerializeInstance(GenerateInstance(gen, gen_seed)));
    } else if (*solve) {
      const ScpInstance inst = ReadInstanceFile(solve_instance);
      const Method method = ParseMethod(solve_method);
      const Solver solver = solve_exact ? MakeBruteForceSolver()
                                        : MakeAnnealingSolver(solve_cfg.sa);
      const ResultRecord rec = RunMethod(inst, method, solve_cfg, solver, solve_seed);
      if (!rec.error.empty()) throw std::runtime_error(rec.error);
      std::printf("method: %s\ncost: %.17g\nfeasible: %d\nuncovered: %d\n"
                  "sets: %s\nnum_vars: %lld\nnum_couplers: %lld\n",
                  MethodName(method).c_str(), rec.reported_cost,
                  rec.feasible ? 1 : 0, rec.uncovered,
                  SelectionLabels(rec.selection).c_str(),
                  static_cast<long long>(rec.num_vars),
                  static_cast<long long>(rec.num_couplers));
    } else if (*experiment) {
      const ExperimentConfig cfg = ReadExperimentConfig(config_path);
      const auto records = RunExperiment(cfg);
      WriteText(results_out, ResultsToCsv(records, cfg.record_timing));
      if (!summary_out.empty()) {
        WriteText(summary_out,
                  SummaryToCsv(NormalizeCosts(records, ParseMethod(baseline))));
      }
    } else if (*trace) {
      const ScpInstance inst = ReadInstanceFile(trace_instance);
      const Solver solver =
          trace_exact ? MakeBruteForceSolver() : MakeAnnealingSolver(trace_sa);
      const AlmResult result = RunAlm(inst, solver, trace_alm, trace_seed);
      WriteText(trace_out, TraceToCsv(result.trace));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
