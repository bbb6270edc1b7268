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

#include "scp_anneal/formulations.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "scp_anneal/error.h"

namespace scp_anneal {
namespace {

void CheckPenalty(const ScpInstance& inst, double mu, bool force) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidPenalty, "penalty must be positive");
  }
  if (!force && !(mu > inst.max_weight())) {
    throw Error(ErrorCode::kPenaltyTooSmall,
                "penalty " + std::to_string(mu) +
                    " must exceed the largest weight " +
                    std::to_string(inst.max_weight()));
  }
}

// floor(log2(v)) + 1 for v >= 1, i.e. the bit width of v.
int BitWidth(int v) {
  return static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(v, 1))));
}

}  // namespace

int GlobalSlackBits(int num_sets) { return BitWidth(num_sets - 1); }

SlackQubo BuildSlackQubo(const ScpInstance& inst, double mu,
                         const SlackOptions& options) {
  CheckPenalty(inst, mu, options.force);
  const int m = inst.num_sets();
  const int n = inst.num_elements();

  SlackLayout layout;
  layout.num_sets = m;
  layout.num_elements = n;
  layout.mu = mu;
  layout.slack_offset.resize(n);
  layout.slack_bits.resize(n);
  int next = m;
  for (int i = 0; i < n; ++i) {
    const int sigma_size = static_cast<int>(inst.covering_sets(i).size());
    const int bits = options.width == SlackWidth::kGlobal
                         ? GlobalSlackBits(m)
                         : BitWidth(sigma_size - 1);
    layout.slack_offset[i] = next;
    layout.slack_bits[i] = bits;
    next += bits;
  }
  layout.num_vars = next;

  PseudoBooleanPoly poly(layout.num_vars);
  for (int j = 0; j < m; ++j) poly.AddTerm({j}, inst.weight(j));

  // Each group is (L - 1)^2 with L = sum_t a_t z_t over the group's
  // variables; a_t = +1 for set bits and -2^alpha for slack bits. Using
  // z^2 = z, (L - 1)^2 = 1 + sum_t (a_t^2 - 2 a_t) z_t
  //                      + 2 sum_{s<t} a_s a_t z_s z_t.
  std::vector<std::pair<int, double>> group;
  for (int i = 0; i < n; ++i) {
    group.clear();
    for (const int j : inst.covering_sets(i)) group.emplace_back(j, 1.0);
    for (int bit = 0; bit < layout.slack_bits[i]; ++bit) {
      group.emplace_back(layout.var_of_slack(i, bit), -std::ldexp(1.0, bit));
    }
    poly.AddConstant(mu);
    for (size_t s = 0; s < group.size(); ++s) {
      const auto [vs, as] = group[s];
      poly.AddTerm({vs}, mu * (as * as - 2 * as));
      for (size_t t = s + 1; t < group.size(); ++t) {
        const auto [vt, at] = group[t];
        poly.AddTerm({vs, vt}, mu * 2 * as * at);
      }
    }
  }
  return {std::move(poly), std::move(layout)};
}

CoverSelection DecodeSlackSolution(const SlackLayout& layout,
                                   std::span<const uint8_t> a) {
  if (static_cast<int>(a.size()) != layout.num_vars) {
    throw Error(ErrorCode::kLengthMismatch,
                "assignment length " + std::to_string(a.size()) +
                    " differs from slack model size " +
                    std::to_string(layout.num_vars));
  }
  return CoverSelection(a.begin(), a.begin() + layout.num_sets);
}

AlmObjective BuildAlmObjective(const ScpInstance& inst,
                               std::span<const double> lambda, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidPenalty, "mu must be positive");
  }
  if (static_cast<int>(lambda.size()) != inst.num_elements()) {
    throw Error(ErrorCode::kLengthMismatch,
                "lambda needs one entry per element");
  }
  AlmObjective out{PseudoBooleanPoly(inst.num_sets()), 0.0};
  for (int j = 0; j < inst.num_sets(); ++j) out.poly.AddTerm({j}, inst.weight(j));
  for (int i = 0; i < inst.num_elements(); ++i) {
    const auto& sigma = inst.covering_sets(i);
    const double linear = -lambda[i] - mu / 2;
    for (size_t s = 0; s < sigma.size(); ++s) {
      out.poly.AddTerm({sigma[s]}, linear);
      for (size_t t = s + 1; t < sigma.size(); ++t) {
        out.poly.AddTerm({sigma[s], sigma[t]}, mu);
      }
    }
    out.constant += lambda[i] + mu / 2;
  }
  return out;
}

Hubo BuildHubo(const ScpInstance& inst, double mu, bool force) {
  CheckPenalty(inst, mu, force);
  Hubo out{PseudoBooleanPoly(inst.num_sets()), {}};
  out.layout.num_sets = inst.num_sets();
  out.layout.mu = mu;
  out.layout.constant_used = inst.total_weight();
  out.poly.AddConstant(out.layout.constant_used);
  for (int j = 0; j < inst.num_sets(); ++j) out.poly.AddTerm({j}, -inst.weight(j));
  for (int i = 0; i < inst.num_elements(); ++i) {
    out.poly.AddTerm(inst.covering_sets(i), mu);
  }
  return out;
}

CoverSelection DecodeHuboSolution(const HuboLayout& layout,
                                  std::span<const uint8_t> y) {
  if (static_cast<int>(y.size()) != layout.num_sets) {
    throw Error(ErrorCode::kLengthMismatch,
                "HUBO assignment length " + std::to_string(y.size()) +
                    " differs from " + std::to_string(layout.num_sets));
  }
  CoverSelection x(y.size());
  for (size_t j = 0; j < y.size(); ++j) x[j] = y[j] ? 0 : 1;
  return x;
}

}  // namespace scp_anneal
