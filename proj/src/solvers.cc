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

#include "scp_anneal/solvers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "scp_anneal/error.h"
#include "scp_anneal/random.h"

namespace scp_anneal {
namespace {

using Clock = std::chrono::steady_clock;

// Flat term storage plus a variable -> terms index, so a flip only touches
// the terms containing the flipped variable.
struct CompiledPoly {
  int num_vars = 0;
  std::vector<int> term_start;
  std::vector<int> term_vars;
  std::vector<double> coeff;
  std::vector<int> var_start;
  std::vector<int> var_terms;
  // coeff[var_terms[k]], stored alongside to save an indirection.
  std::vector<double> var_coeff;

  explicit CompiledPoly(const PseudoBooleanPoly& poly) : num_vars(poly.num_vars()) {
    std::vector<int> degree(num_vars, 0);
    term_start.push_back(0);
    for (const auto& [vars, c] : poly.terms()) {
      for (const int v : vars) {
        term_vars.push_back(v);
        ++degree[v];
      }
      term_start.push_back(static_cast<int>(term_vars.size()));
      coeff.push_back(c);
    }
    var_start.assign(num_vars + 1, 0);
    for (int v = 0; v < num_vars; ++v) var_start[v + 1] = var_start[v] + degree[v];
    var_terms.resize(var_start[num_vars]);
    var_coeff.resize(var_start[num_vars]);
    std::vector<int> fill(var_start.begin(), var_start.end() - 1);
    for (int t = 0; t + 1 < static_cast<int>(term_start.size()); ++t) {
      for (int k = term_start[t]; k < term_start[t + 1]; ++k) {
        const int slot = fill[term_vars[k]]++;
        var_terms[slot] = t;
        var_coeff[slot] = coeff[t];
      }
    }
  }

  int num_terms() const { return static_cast<int>(coeff.size()); }
};

// Lemire's multiply-shift bounded integer, with rejection so it is exact.
uint32_t FastBelow(std::mt19937_64& rng, uint32_t bound) {
  uint64_t x = rng() >> 32;
  uint64_t product = x * bound;
  auto low = static_cast<uint32_t>(product);
  if (low < bound) {
    const uint32_t threshold = static_cast<uint32_t>(-bound) % bound;
    while (low < threshold) {
      x = rng() >> 32;
      product = x * bound;
      low = static_cast<uint32_t>(product);
    }
  }
  return static_cast<uint32_t>(product >> 32);
}

// One annealing read. zero_count[t] is the number of variables of term t
// currently at 0, and gain[v] is the summed coefficient of the terms
// containing v whose other variables are all 1, so flipping v changes the
// energy by +gain[v] (0 -> 1) or -gain[v] (1 -> 0). Proposals are O(1);
// an accepted flip refreshes the gains of its term neighbours.
void AnnealOnce(const CompiledPoly& cp, std::span<const double> betas,
                uint64_t stream_seed, Assignment& state,
                std::vector<int>& zero_count, std::vector<double>& gain) {
  std::mt19937_64 rng(stream_seed);
  const int n = cp.num_vars;
  state.resize(n);
  for (int v = 0; v < n; ++v) state[v] = static_cast<uint8_t>(rng() >> 63);
  zero_count.assign(cp.num_terms(), 0);
  for (int t = 0; t < cp.num_terms(); ++t) {
    for (int k = cp.term_start[t]; k < cp.term_start[t + 1]; ++k) {
      if (!state[cp.term_vars[k]]) ++zero_count[t];
    }
  }
  gain.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const int own_zero = state[v] ? 0 : 1;
    for (int k = cp.var_start[v]; k < cp.var_start[v + 1]; ++k) {
      if (zero_count[cp.var_terms[k]] == own_zero) gain[v] += cp.var_coeff[k];
    }
  }

  for (const double beta : betas) {
    for (int step = 0; step < n; ++step) {
      const int v = static_cast<int>(FastBelow(rng, n));
      const double delta = state[v] ? -gain[v] : gain[v];
      if (delta > 0.0 && UniformUnit(rng) >= std::exp(-beta * delta)) continue;
      const int shift = state[v] ? 1 : -1;
      for (int k = cp.var_start[v]; k < cp.var_start[v + 1]; ++k) {
        const int t = cp.var_terms[k];
        const int before = zero_count[t];
        const int after = before + shift;
        zero_count[t] = after;
        const double c = cp.var_coeff[k];
        for (int q = cp.term_start[t]; q < cp.term_start[t + 1]; ++q) {
          const int u = cp.term_vars[q];
          if (u == v) continue;
          const int own_zero = state[u] ? 0 : 1;
          const bool was_on = before == own_zero;
          const bool is_on = after == own_zero;
          if (was_on != is_on) gain[u] += is_on ? c : -c;
        }
      }
      state[v] ^= 1;
    }
  }
}

void ValidateParams(const PseudoBooleanPoly& poly, const SaParams& p) {
  auto bad = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidParams, why);
  };
  if (poly.num_vars() < 1) bad("annealing needs at least one variable");
  if (p.num_reads < 1) bad("num_reads must be >= 1");
  if (p.sweeps_per_read < 1) bad("sweeps_per_read must be >= 1");
  if (p.num_threads < 0) bad("num_threads must be >= 0");
  if (p.t_hot > 0.0 && p.t_cold > 0.0 && p.t_hot < p.t_cold) {
    bad("t_hot must be >= t_cold");
  }
  if (!std::isfinite(p.t_hot) || !std::isfinite(p.t_cold)) {
    bad("temperatures must be finite");
  }
}

}  // namespace

SolverResult BruteForce(const PseudoBooleanPoly& poly, int max_vars) {
  const int n = poly.num_vars();
  if (n > max_vars) {
    throw Error(ErrorCode::kTooManyVariables,
                std::to_string(n) + " variables exceed the brute-force limit " +
                    std::to_string(max_vars));
  }
  const auto start = Clock::now();
  SolverResult result;
  result.best_energy = std::numeric_limits<double>::infinity();
  Assignment a(n, 0);
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t code = 0; code < count; ++code) {
    // Bit 0 is the most significant, so codes run in lexicographic order.
    for (int v = 0; v < n; ++v) a[v] = (code >> (n - 1 - v)) & 1;
    const double e = poly.Evaluate(a);
    if (e < result.best_energy) {
      result.best_energy = e;
      result.best_assignment = a;
    }
  }
  result.elapsed = Clock::now() - start;
  return result;
}

std::pair<double, double> DefaultTemperatures(const PseudoBooleanPoly& poly) {
  double hi = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& [vars, c] : poly.terms()) {
    hi = std::max(hi, std::abs(c));
    lo = std::min(lo, std::abs(c));
  }
  if (poly.terms().empty()) return {1.0, 1e-3};
  return {hi, 1e-3 * lo};
}

SolverResult SimulatedAnnealing(const PseudoBooleanPoly& poly,
                                const SaParams& params) {
  ValidateParams(poly, params);
  const auto start = Clock::now();
  auto [t_hot, t_cold] = DefaultTemperatures(poly);
  if (params.t_hot > 0.0) t_hot = params.t_hot;
  if (params.t_cold > 0.0) t_cold = params.t_cold;
  t_cold = std::min(t_cold, t_hot);

  const int sweeps = params.sweeps_per_read;
  std::vector<double> betas(sweeps);
  for (int s = 0; s < sweeps; ++s) {
    const double frac = sweeps == 1 ? 1.0 : static_cast<double>(s) / (sweeps - 1);
    betas[s] = 1.0 / (t_hot * std::pow(t_cold / t_hot, frac));
  }

  const CompiledPoly compiled(poly);
  const int reads = params.num_reads;
  std::vector<Assignment> finals(reads);
  std::vector<double> energies(reads);
  auto worker = [&](int first, int stride) {
    std::vector<int> zero_count;
    std::vector<double> gain;
    for (int r = first; r < reads; r += stride) {
      AnnealOnce(compiled, betas, DeriveSeed(params.seed, {uint64_t(r)}),
                 finals[r], zero_count, gain);
      energies[r] = poly.Evaluate(finals[r]);
    }
  };
  int threads = params.num_threads > 0
                    ? params.num_threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, reads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
  }

  // First read wins ties, so the result is independent of the thread count.
  const int best = static_cast<int>(
      std::min_element(energies.begin(), energies.end()) - energies.begin());
  SolverResult result;
  result.best_assignment = std::move(finals[best]);
  result.best_energy = energies[best];
  result.read_energies = std::move(energies);
  result.seed_used = params.seed;
  result.elapsed = Clock::now() - start;
  return result;
}

Solver MakeBruteForceSolver(int max_vars) {
  return [max_vars](const PseudoBooleanPoly& poly, uint64_t seed) {
    SolverResult r = BruteForce(poly, max_vars);
    r.seed_used = seed;
    return r;
  };
}

Solver MakeAnnealingSolver(const SaParams& params) {
  return [params](const PseudoBooleanPoly& poly, uint64_t seed) {
    SaParams p = params;
    p.seed = seed;
    return SimulatedAnnealing(poly, p);
  };
}

CoverSelection GreedyCover(const ScpInstance& inst) {
  const int m = inst.num_sets();
  CoverSelection chosen(m, 0);
  std::vector<uint8_t> covered(inst.num_elements(), 0);
  int remaining = inst.num_elements();
  while (remaining > 0) {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    int best_gain = 0;
    for (int j = 0; j < m; ++j) {
      if (chosen[j]) continue;
      int gain = 0;
      for (const int e : inst.set(j)) gain += covered[e] ? 0 : 1;
      if (gain == 0) continue;
      const double ratio = inst.weight(j) / gain;
      if (ratio < best_ratio) {
        best = j;
        best_ratio = ratio;
        best_gain = gain;
      }
    }
    chosen[best] = 1;
    for (const int e : inst.set(best)) covered[e] = 1;
    remaining -= best_gain;
  }
  return chosen;
}

}  // namespace scp_anneal
