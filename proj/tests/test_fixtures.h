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

#ifndef SCP_ANNEAL_TESTS_TEST_FIXTURES_H_
#define SCP_ANNEAL_TESTS_TEST_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "scp_anneal/pseudo_boolean_poly.h"
#include "scp_anneal/scp_instance.h"

namespace scp_anneal::testing {

// T1: S1={1}, S2={1,2}, S3={2}, wt=(0.5, 0.9, 0.3); optimum {S1,S3} = 0.8.
inline ScpInstance MakeT1() {
  return ScpInstance(2, {{0}, {0, 1}, {1}}, {0.5, 0.9, 0.3});
}

// T2: S1=S2=S3={1}, wt=(0.2, 0.5, 0.4); optimum {S1} = 0.2.
inline ScpInstance MakeT2() {
  return ScpInstance(1, {{0}, {0}, {0}}, {0.2, 0.5, 0.4});
}

// Selection j-th bit taken from bit j of `code`.
inline std::vector<uint8_t> SelectionFromCode(uint64_t code, int m) {
  std::vector<uint8_t> sel(m);
  for (int j = 0; j < m; ++j) sel[j] = (code >> j) & 1;
  return sel;
}

// Exhaustive optimum over all 2^m selections. Coverage is recomputed from
// the set lists so it does not share code with the library's checks.
inline double OptimalCoverCost(const ScpInstance& inst) {
  const int m = inst.num_sets();
  double best = std::numeric_limits<double>::infinity();
  for (uint64_t code = 0; code < (uint64_t{1} << m); ++code) {
    std::vector<uint8_t> covered(inst.num_elements(), 0);
    double cost = 0.0;
    for (int j = 0; j < m; ++j) {
      if (!((code >> j) & 1)) continue;
      cost += inst.weights()[j];
      for (const int e : inst.sets()[j]) covered[e] = 1;
    }
    bool all = true;
    for (const uint8_t c : covered) all = all && c;
    if (all && cost < best) best = cost;
  }
  return best;
}

// Number of elements no selected set covers, recomputed from set lists.
inline int CountUncovered(const ScpInstance& inst,
                          const std::vector<uint8_t>& sel) {
  std::vector<uint8_t> covered(inst.num_elements(), 0);
  for (int j = 0; j < inst.num_sets(); ++j) {
    if (sel[j]) {
      for (const int e : inst.sets()[j]) covered[e] = 1;
    }
  }
  int count = 0;
  for (const uint8_t c : covered) count += c ? 0 : 1;
  return count;
}

inline double PlainCost(const ScpInstance& inst,
                        const std::vector<uint8_t>& sel) {
  double cost = 0.0;
  for (int j = 0; j < inst.num_sets(); ++j) {
    if (sel[j]) cost += inst.weights()[j];
  }
  return cost;
}

// Exhaustive minimum of a polynomial, written independently of the
// library's brute-force solver.
inline double PolyMinimum(const PseudoBooleanPoly& poly) {
  const int n = poly.num_vars();
  double best = std::numeric_limits<double>::infinity();
  for (uint64_t code = 0; code < (uint64_t{1} << n); ++code) {
    double value = poly.constant();
    for (const auto& [vars, coeff] : poly.terms()) {
      bool on = true;
      for (const int v : vars) on = on && ((code >> v) & 1);
      if (on) value += coeff;
    }
    best = std::min(best, value);
  }
  return best;
}

// Random polynomial with up to `max_degree` variables per term.
inline PseudoBooleanPoly RandomPoly(std::mt19937_64& rng, int num_vars,
                                    int num_terms, int max_degree) {
  PseudoBooleanPoly poly(num_vars);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::uniform_int_distribution<int> degree(1, max_degree);
  for (int t = 0; t < num_terms; ++t) {
    std::vector<int> vars;
    const int d = std::min(degree(rng), num_vars);
    while (static_cast<int>(vars.size()) < d) {
      const int v = var(rng);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    poly.AddTerm(vars, coeff(rng));
  }
  poly.AddConstant(coeff(rng));
  return poly;
}

}  // namespace scp_anneal::testing

#endif  // SCP_ANNEAL_TESTS_TEST_FIXTURES_H_
