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

#include "scp_anneal/quadratizer.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "scp_anneal/error.h"

namespace scp_anneal {

double SuggestPenalty(const PseudoBooleanPoly& poly) {
  double total = 1.0;
  for (const auto& [vars, coeff] : poly.terms()) {
    if (vars.size() >= 3) total += std::abs(coeff);
  }
  return total;
}

QuadratizationResult Quadratize(const PseudoBooleanPoly& poly,
                                std::optional<double> penalty) {
  if (penalty.has_value() && !(*penalty > 0.0)) {
    throw Error(ErrorCode::kInvalidPenalty, "quadratization penalty must be > 0");
  }
  const double weight = penalty.value_or(SuggestPenalty(poly));

  QuadratizationResult result{PseudoBooleanPoly(poly.num_vars(),
                                                poly.zero_tolerance()),
                              {},
                              poly.num_vars()};
  result.qubo.AddConstant(poly.constant());
  // Working copy of the high-degree terms; low-degree ones go straight out.
  std::map<PseudoBooleanPoly::Term, double> high;
  for (const auto& [vars, coeff] : poly.terms()) {
    if (vars.size() >= 3) {
      high.emplace(vars, coeff);
    } else {
      result.qubo.AddTerm(vars, coeff);
    }
  }

  while (!high.empty()) {
    std::map<std::pair<int, int>, int> frequency;
    for (const auto& [vars, coeff] : high) {
      for (size_t s = 0; s < vars.size(); ++s) {
        for (size_t t = s + 1; t < vars.size(); ++t) {
          ++frequency[{vars[s], vars[t]}];
        }
      }
    }
    // std::map iterates in lexicographic order, so strict > keeps the
    // smallest pair among equally frequent ones.
    std::pair<int, int> best{};
    int best_count = 0;
    for (const auto& [pair, count] : frequency) {
      if (count > best_count) {
        best = pair;
        best_count = count;
      }
    }

    const int aux = result.qubo.AddVariables(1);
    result.substitutions.push_back({aux, best, weight});
    const auto [a, b] = best;
    result.qubo.AddTerm({a, b}, weight);
    result.qubo.AddTerm({a, aux}, -2 * weight);
    result.qubo.AddTerm({b, aux}, -2 * weight);
    result.qubo.AddTerm({aux}, 3 * weight);

    std::map<PseudoBooleanPoly::Term, double> next;
    for (auto& [vars, coeff] : high) {
      PseudoBooleanPoly::Term term = vars;
      const bool has_a = std::binary_search(term.begin(), term.end(), a);
      const bool has_b = std::binary_search(term.begin(), term.end(), b);
      if (has_a && has_b) {
        std::erase_if(term, [&](int v) { return v == a || v == b; });
        // aux is the largest index so far, so the key stays sorted.
        term.push_back(aux);
      }
      if (term.size() >= 3) {
        next[term] += coeff;
      } else {
        result.qubo.AddTerm(term, coeff);
      }
    }
    high = std::move(next);
  }
  return result;
}

Assignment ExtendAssignment(const QuadratizationResult& result,
                            std::span<const uint8_t> original) {
  if (static_cast<int>(original.size()) != result.original_vars) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(result.original_vars) +
                    " original bits, got " + std::to_string(original.size()));
  }
  Assignment full(original.begin(), original.end());
  full.resize(result.qubo.num_vars(), 0);
  for (const auto& sub : result.substitutions) {
    full[sub.aux_var] = full[sub.pair.first] & full[sub.pair.second];
  }
  return full;
}

Assignment ProjectAssignment(const QuadratizationResult& result,
                             std::span<const uint8_t> full) {
  if (static_cast<int>(full.size()) != result.qubo.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(result.qubo.num_vars()) +
                    " bits, got " + std::to_string(full.size()));
  }
  return Assignment(full.begin(), full.begin() + result.original_vars);
}

}  // namespace scp_anneal
