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

#ifndef SCP_ANNEAL_QUADRATIZER_H_
#define SCP_ANNEAL_QUADRATIZER_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scp_anneal/pseudo_boolean_poly.h"

namespace scp_anneal {

// aux_var stands for the product of the pair, enforced by
// penalty * (a b - 2 (a + b) u + 3 u), which is 0 when u = a b and at least
// penalty otherwise. Pair members may themselves be auxiliary variables.
struct VarSubstitution {
  int aux_var = 0;
  std::pair<int, int> pair;
  double penalty = 0.0;
};

struct QuadratizationResult {
  PseudoBooleanPoly qubo;
  // In creation order; aux_var of entry t is original_vars + t.
  std::vector<VarSubstitution> substitutions;
  int original_vars = 0;
};

// Value of the product-enforcing gadget a b - 2 (a + b) u + 3 u.
inline int GadgetValue(int a, int b, int u) {
  return a * b - 2 * (a + b) * u + 3 * u;
}

// 1 + sum of |coeff| over terms of degree >= 3. With this penalty any
// inconsistent auxiliary bit costs more than all high-degree terms can
// gain, so minimising over the auxiliary bits reproduces the input.
double SuggestPenalty(const PseudoBooleanPoly& poly);

// Reduces `poly` to degree <= 2 by repeatedly replacing the variable pair
// that occurs in the most degree >= 3 terms (ties: smallest pair) with a new
// auxiliary variable. Uses SuggestPenalty(poly) when `penalty` is empty.
// Throws Error(kInvalidPenalty) for a non-positive explicit penalty.
QuadratizationResult Quadratize(const PseudoBooleanPoly& poly,
                                std::optional<double> penalty = std::nullopt);

// Completes an original-space assignment with u = product of its pair, in
// substitution order. Throws Error(kLengthMismatch).
Assignment ExtendAssignment(const QuadratizationResult& result,
                            std::span<const uint8_t> original);

// First original_vars bits. Throws Error(kLengthMismatch).
Assignment ProjectAssignment(const QuadratizationResult& result,
                             std::span<const uint8_t> full);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_QUADRATIZER_H_
