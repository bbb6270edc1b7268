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

#include "scp_anneal/bench_harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "scp_anneal/error.h"
#include "scp_anneal/formulations.h"
#include "scp_anneal/instance_io.h"
#include "scp_anneal/quadratizer.h"
#include "scp_anneal/random.h"

namespace scp_anneal {
namespace {

// Stable across runs and platforms, unlike std::hash.
uint64_t NameHash(const std::string& name) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

[[noreturn]] void BadConfig(const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig, why);
}

}  // namespace

std::string MethodName(Method method) {
  switch (method) {
    case Method::kSvSa:
      return "SV_SA";
    case Method::kAlSa:
      return "AL_SA";
    case Method::kHuboSa:
      return "HUBO_SA";
    case Method::kHuboQuadSa:
      return "HUBO_QUAD_SA";
    case Method::kGreedy:
      return "GREEDY";
  }
  return "UNKNOWN";
}

Method ParseMethod(const std::string& name) {
  for (const Method m : AllMethods()) {
    if (MethodName(m) == name) return m;
  }
  BadConfig("unknown method '" + name + "'");
}

std::vector<Method> AllMethods() {
  return {Method::kSvSa, Method::kAlSa, Method::kHuboSa, Method::kHuboQuadSa,
          Method::kGreedy};
}

std::vector<int> ElementCounts(int m) {
  std::vector<int> counts = {(m + 1) / 2, (3 * m + 3) / 4, m};
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  return counts;
}

uint64_t InstanceSeed(uint64_t master_seed, int m, int n, int instance_id) {
  return DeriveSeed(master_seed, {uint64_t(m), uint64_t(n), uint64_t(instance_id)});
}

uint64_t MethodSeed(uint64_t master_seed, int m, int n, int instance_id,
                    Method method) {
  return DeriveSeed(master_seed, {uint64_t(m), uint64_t(n), uint64_t(instance_id),
                                  NameHash(MethodName(method))});
}

ResultRecord RunMethod(const ScpInstance& inst, Method method,
                       const ExperimentConfig& cfg, const Solver& solver,
                       uint64_t seed) {
  ResultRecord rec;
  rec.method = method;
  rec.m = inst.num_sets();
  rec.n = inst.num_elements();
  rec.seed = seed;
  const double mu = inst.max_weight() + cfg.penalty_margin;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (method) {
      case Method::kSvSa: {
        const SlackQubo model = BuildSlackQubo(inst, mu);
        rec.num_vars = model.poly.CountVariables();
        rec.num_couplers = model.poly.CountCouplers();
        const SolverResult r = solver(model.poly, seed);
        rec.selection = DecodeSlackSolution(model.layout, r.best_assignment);
        break;
      }
      case Method::kAlSa: {
        const std::vector<double> lambda0(inst.num_elements(), cfg.alm.lambda0);
        const AlmObjective first = BuildAlmObjective(inst, lambda0, cfg.alm.mu0);
        rec.num_vars = first.poly.CountVariables();
        rec.num_couplers = first.poly.CountCouplers();
        rec.selection = RunAlm(inst, solver, cfg.alm, seed).best;
        break;
      }
      case Method::kHuboSa: {
        const Hubo model = BuildHubo(inst, mu);
        rec.num_vars = model.poly.CountVariables();
        rec.num_couplers = model.poly.CountCouplers();
        const SolverResult r = solver(model.poly, seed);
        rec.selection = DecodeHuboSolution(model.layout, r.best_assignment);
        break;
      }
      case Method::kHuboQuadSa: {
        const Hubo model = BuildHubo(inst, mu);
        const QuadratizationResult quad = Quadratize(model.poly);
        rec.num_vars = quad.qubo.CountVariables();
        rec.num_couplers = quad.qubo.CountCouplers();
        const SolverResult r = solver(quad.qubo, seed);
        rec.selection = DecodeHuboSolution(
            model.layout, ProjectAssignment(quad, r.best_assignment));
        break;
      }
      case Method::kGreedy:
        rec.num_vars = inst.num_sets();
        rec.selection = GreedyCover(inst);
        break;
    }
    rec.uncovered = static_cast<int>(UncoveredElements(inst, rec.selection).size());
    rec.feasible = rec.uncovered == 0;
    rec.reported_cost = ReportedCost(inst, rec.selection);
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.selection.clear();
    rec.feasible = false;
    rec.uncovered = inst.num_elements();
    rec.reported_cost = inst.total_weight();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

void ValidateConfig(const ExperimentConfig& cfg) {
  if (cfg.methods.empty()) BadConfig("methods must not be empty");
  if (cfg.pinned_instances.empty()) {
    if (cfg.m_values.empty()) BadConfig("m_values must not be empty");
    for (const int m : cfg.m_values) {
      if (m < 2) BadConfig("every m must be >= 2");
    }
    if (cfg.instances_per_cell < 1) BadConfig("instances_per_cell must be >= 1");
  }
  if (!(cfg.penalty_margin > 0.0)) BadConfig("penalty_margin must be > 0");
  if (cfg.sa.num_reads < 1 || cfg.sa.sweeps_per_read < 1) {
    BadConfig("annealing reads and sweeps must be >= 1");
  }
  if (!(cfg.alm.mu0 > 0.0) || !(cfg.alm.rho > 1.0) || cfg.alm.max_iters < 1) {
    BadConfig("ALM needs mu0 > 0, rho > 1 and max_iters >= 1");
  }
}

std::vector<CellInstance> ExperimentInstances(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  std::vector<CellInstance> cells;
  if (!cfg.pinned_instances.empty()) {
    for (size_t i = 0; i < cfg.pinned_instances.size(); ++i) {
      const ScpInstance& inst = cfg.pinned_instances[i];
      cells.push_back({inst.num_sets(), inst.num_elements(), static_cast<int>(i),
                       inst});
    }
  } else {
    for (const int m : cfg.m_values) {
      for (const int n : ElementCounts(m)) {
        for (int id = 0; id < cfg.instances_per_cell; ++id) {
          GeneratorConfig gen{m, n, cfg.coverage, cfg.fill_rule};
          try {
            cells.push_back({m, n, id,
                             GenerateInstance(gen, InstanceSeed(cfg.master_seed,
                                                                m, n, id))});
          } catch (const Error& e) {
            BadConfig("cannot generate m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + ": " + e.what());
          }
        }
      }
    }
  }
  std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return std::tie(a.m, a.n, a.instance_id) < std::tie(b.m, b.n, b.instance_id);
  });
  return cells;
}

std::vector<ResultRecord> RunExperiment(const ExperimentConfig& cfg) {
  const std::vector<CellInstance> cells = ExperimentInstances(cfg);
  const Solver solver = MakeAnnealingSolver(cfg.sa);
  std::vector<Method> methods = cfg.methods;
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

  std::vector<ResultRecord> records;
  for (const Method method : methods) {
    for (const CellInstance& cell : cells) {
      ResultRecord rec = RunMethod(
          cell.instance, method, cfg, solver,
          MethodSeed(cfg.master_seed, cell.m, cell.n, cell.instance_id, method));
      rec.instance_id = cell.instance_id;
      if (!rec.error.empty()) {
        std::cerr << MethodName(method) << " m=" << cell.m << " n=" << cell.n
                  << " id=" << cell.instance_id << " failed: " << rec.error
                  << "\n";
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string ResultsToCsv(const std::vector<ResultRecord>& records,
                         bool record_timing) {
  std::string out =
      "method,m,n,instance_id,seed,reported_cost,feasible,uncovered,num_vars,"
      "num_couplers,wall_ms\n";
  char line[256];
  for (const auto& r : records) {
    std::snprintf(line, sizeof(line), "%s,%d,%d,%d,%llu,%.17g,%d,%d,%lld,%lld,%.3f\n",
                  MethodName(r.method).c_str(), r.m, r.n, r.instance_id,
                  static_cast<unsigned long long>(r.seed), r.reported_cost,
                  r.feasible ? 1 : 0, r.uncovered,
                  static_cast<long long>(r.num_vars),
                  static_cast<long long>(r.num_couplers),
                  record_timing ? r.wall_ms : 0.0);
    out += line;
  }
  return out;
}

std::vector<CellSummary> NormalizeCosts(const std::vector<ResultRecord>& records,
                                        Method baseline) {
  struct Acc {
    int count = 0;
    double sum = 0.0;
  };
  std::map<std::tuple<Method, int, int>, Acc> cells;
  for (const auto& r : records) {
    Acc& acc = cells[{r.method, r.m, r.n}];
    ++acc.count;
    acc.sum += r.reported_cost;
  }
  std::vector<CellSummary> out;
  for (const auto& [key, acc] : cells) {
    const auto [method, m, n] = key;
    auto base = cells.find({baseline, m, n});
    if (base == cells.end()) {
      throw Error(ErrorCode::kMissingBaseline,
                  "no " + MethodName(baseline) + " rows for m=" +
                      std::to_string(m) + " n=" + std::to_string(n));
    }
    const double base_mean = base->second.sum / base->second.count;
    if (base_mean == 0.0) {
      throw Error(ErrorCode::kZeroBaselineCost,
                  "baseline mean cost is 0 for m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
    }
    const double mean = acc.sum / acc.count;
    out.push_back({method, m, n, acc.count, mean, mean / base_mean});
  }
  return out;
}

double MeanNormalizedCost(const std::vector<CellSummary>& summaries,
                          Method method, int m) {
  double sum = 0.0;
  int count = 0;
  for (const auto& s : summaries) {
    if (s.method == method && s.m == m) {
      sum += s.normalized_cost;
      ++count;
    }
  }
  return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / count;
}

std::string SummaryToCsv(const std::vector<CellSummary>& summaries) {
  std::string out = "method,m,n,count,mean_cost,normalized_cost\n";
  char line[192];
  for (const auto& s : summaries) {
    std::snprintf(line, sizeof(line), "%s,%d,%d,%d,%.17g,%.17g\n",
                  MethodName(s.method).c_str(), s.m, s.n, s.count, s.mean_cost,
                  s.normalized_cost);
    out += line;
  }
  return out;
}

ExperimentConfig ParseExperimentConfig(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    BadConfig(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) BadConfig("config must be a JSON object");
  static const char* const kKnown[] = {
      "m_values", "coverage",        "fill_rule",  "instances_per_cell",
      "methods",  "master_seed",     "num_reads",  "sweeps_per_read",
      "t_hot",    "t_cold",          "num_threads", "mu0",
      "lambda0",  "rho",             "max_iters",  "penalty_margin",
      "record_timing", "instance_files"};
  for (const auto& item : doc.items()) {
    if (std::find_if(std::begin(kKnown), std::end(kKnown), [&](const char* k) {
          return item.key() == k;
        }) == std::end(kKnown)) {
      BadConfig("unknown config key '" + item.key() + "'");
    }
  }

  ExperimentConfig cfg;
  try {
    if (doc.contains("m_values")) cfg.m_values = doc["m_values"].get<std::vector<int>>();
    if (doc.contains("coverage")) cfg.coverage = doc["coverage"].get<double>();
    if (doc.contains("fill_rule")) {
      cfg.fill_rule = ParseFillRule(doc["fill_rule"].get<std::string>());
    }
    if (doc.contains("instances_per_cell")) {
      cfg.instances_per_cell = doc["instances_per_cell"].get<int>();
    }
    if (doc.contains("methods")) {
      cfg.methods.clear();
      for (const auto& name : doc["methods"].get<std::vector<std::string>>()) {
        cfg.methods.push_back(ParseMethod(name));
      }
    }
    if (doc.contains("master_seed")) cfg.master_seed = doc["master_seed"].get<uint64_t>();
    if (doc.contains("num_reads")) cfg.sa.num_reads = doc["num_reads"].get<int>();
    if (doc.contains("sweeps_per_read")) {
      cfg.sa.sweeps_per_read = doc["sweeps_per_read"].get<int>();
    }
    if (doc.contains("t_hot")) cfg.sa.t_hot = doc["t_hot"].get<double>();
    if (doc.contains("t_cold")) cfg.sa.t_cold = doc["t_cold"].get<double>();
    if (doc.contains("num_threads")) cfg.sa.num_threads = doc["num_threads"].get<int>();
    if (doc.contains("mu0")) cfg.alm.mu0 = doc["mu0"].get<double>();
    if (doc.contains("lambda0")) cfg.alm.lambda0 = doc["lambda0"].get<double>();
    if (doc.contains("rho")) cfg.alm.rho = doc["rho"].get<double>();
    if (doc.contains("max_iters")) cfg.alm.max_iters = doc["max_iters"].get<int>();
    if (doc.contains("penalty_margin")) {
      cfg.penalty_margin = doc["penalty_margin"].get<double>();
    }
    if (doc.contains("record_timing")) {
      cfg.record_timing = doc["record_timing"].get<bool>();
    }
    if (doc.contains("instance_files")) {
      for (const auto& path : doc["instance_files"].get<std::vector<std::string>>()) {
        cfg.pinned_instances.push_back(ReadInstanceFile(path));
      }
    }
  } catch (const json::exception& e) {
    BadConfig(std::string("bad config value: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidConfig) throw;
    BadConfig(e.what());
  }
  ValidateConfig(cfg);
  return cfg;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExperimentConfig(buffer.str());
}

}  // namespace scp_anneal
