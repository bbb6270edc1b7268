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

#ifndef SCP_ANNEAL_FORMULATIONS_H_
#define SCP_ANNEAL_FORMULATIONS_H_

#include <span>
#include <vector>

#include "scp_anneal/pseudo_boolean_poly.h"
#include "scp_anneal/scp_instance.h"

namespace scp_anneal {

// Compilers from a set cover instance to unconstrained binary models. In all
// three models the set variables occupy indices 0..m-1.

enum class SlackWidth {
  kGlobal,      // k = floor(log2(m - 1)) + 1 bits for every element
  kPerElement,  // k_i = floor(log2(max(|sigma_i| - 1, 1))) + 1
};

struct SlackOptions {
  SlackWidth width = SlackWidth::kGlobal;
  // Skip the mu > max weight check.
  bool force = false;
};

// Variable map of the slack-variable QUBO. Slack bits follow the set
// variables in element-major, bit-minor order.
struct SlackLayout {
  int num_sets = 0;
  int num_elements = 0;
  double mu = 0.0;
  // slack_offset[i] is the index of bit 0 of element i; element i owns
  // slack_bits[i] consecutive bits.
  std::vector<int> slack_offset;
  std::vector<int> slack_bits;
  int num_vars = 0;

  int var_of_set(int j) const { return j; }
  int var_of_slack(int element, int bit) const {
    return slack_offset[element] + bit;
  }
};

// Slack width used for an instance with m sets: floor(log2(m - 1)) + 1.
int GlobalSlackBits(int num_sets);

struct SlackQubo {
  PseudoBooleanPoly poly;
  SlackLayout layout;
};

// Q = sum_j wt_j x_j
//   + mu * sum_i (sum_{j in sigma_i} x_j - sum_a 2^a x_{i,a} - 1)^2.
// Throws Error(kPenaltyTooSmall) when mu <= max weight unless forced.
SlackQubo BuildSlackQubo(const ScpInstance& inst, double mu,
                         const SlackOptions& options = {});

// Projects onto the set variables. Throws Error(kLengthMismatch).
CoverSelection DecodeSlackSolution(const SlackLayout& layout,
                                   std::span<const uint8_t> a);

// Augmented Lagrangian QUBO with its dropped constant:
//   poly(x) + constant == sum wt_j x_j + sum_i lambda_i c_i(x)
//                         + mu/2 sum_i c_i(x)^2,
// c_i(x) = 1 - sum_{j in sigma_i} x_j.
struct AlmObjective {
  PseudoBooleanPoly poly;
  double constant = 0.0;
};

// Throws Error(kInvalidPenalty) for mu <= 0 and Error(kLengthMismatch) when
// lambda does not have one entry per element.
AlmObjective BuildAlmObjective(const ScpInstance& inst,
                               std::span<const double> lambda, double mu);

struct HuboLayout {
  int num_sets = 0;
  double mu = 0.0;
  // Additive constant of the model, the total weight (see BuildHubo).
  double constant_used = 0.0;

  int var_of_set(int j) const { return j; }
};

struct Hubo {
  PseudoBooleanPoly poly;
  HuboLayout layout;
};

// Model over y_j = 1 - x_j:
//   sum_j wt_j - sum_j wt_j y_j + mu * sum_i prod_{j in sigma_i} y_j,
// whose value at y = 1 - x is CoverCost(x) + mu * |uncovered(x)|.
// Throws Error(kPenaltyTooSmall) when mu <= max weight unless `force`.
Hubo BuildHubo(const ScpInstance& inst, double mu, bool force = false);

// x_j = 1 - y_j. Throws Error(kLengthMismatch).
CoverSelection DecodeHuboSolution(const HuboLayout& layout,
                                  std::span<const uint8_t> y);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_FORMULATIONS_H_
