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

#include "scp_anneal/pseudo_boolean_poly.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "scp_anneal/error.h"

namespace scp_anneal {

PseudoBooleanPoly::PseudoBooleanPoly(int num_vars, double zero_tolerance)
    : num_vars_(num_vars), zero_tolerance_(zero_tolerance) {
  if (num_vars < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative variable count");
  }
}

int PseudoBooleanPoly::AddVariables(int count) {
  const int first = num_vars_;
  num_vars_ += count;
  return first;
}

void PseudoBooleanPoly::AddTerm(Term vars, double coeff) {
  if (vars.empty()) {
    constant_ += coeff;
    return;
  }
  std::sort(vars.begin(), vars.end());
  if (vars.front() < 0 || vars.back() >= num_vars_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "term variable outside [0, " + std::to_string(num_vars_) + ")");
  }
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw Error(ErrorCode::kDuplicateIndexInTerm,
                "variable " + std::to_string(*std::adjacent_find(
                                  vars.begin(), vars.end())) +
                    " repeated in a term");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(vars), 0.0);
  it->second += coeff;
  if (std::abs(it->second) <= zero_tolerance_) terms_.erase(it);
}

double PseudoBooleanPoly::Coefficient(Term vars) const {
  if (vars.empty()) return constant_;
  std::sort(vars.begin(), vars.end());
  auto it = terms_.find(vars);
  return it == terms_.end() ? 0.0 : it->second;
}

double PseudoBooleanPoly::Evaluate(std::span<const uint8_t> a) const {
  if (static_cast<int>(a.size()) != num_vars_) {
    throw Error(ErrorCode::kLengthMismatch,
                "assignment has " + std::to_string(a.size()) +
                    " bits, polynomial has " + std::to_string(num_vars_) +
                    " variables");
  }
  double value = constant_;
  for (const auto& [vars, coeff] : terms_) {
    const bool active =
        std::all_of(vars.begin(), vars.end(), [&](int v) { return a[v] != 0; });
    if (active) value += coeff;
  }
  return value;
}

int PseudoBooleanPoly::Degree() const {
  size_t degree = 0;
  for (const auto& [vars, coeff] : terms_) degree = std::max(degree, vars.size());
  return static_cast<int>(degree);
}

int64_t PseudoBooleanPoly::CountTerms(int degree) const {
  int64_t count = 0;
  for (const auto& [vars, coeff] : terms_) {
    if (static_cast<int>(vars.size()) == degree) ++count;
  }
  return count;
}

int64_t PseudoBooleanPoly::CountCouplers() const { return CountTerms(2); }

PseudoBooleanPoly& PseudoBooleanPoly::operator+=(const PseudoBooleanPoly& other) {
  num_vars_ = std::max(num_vars_, other.num_vars_);
  constant_ += other.constant_;
  for (const auto& [vars, coeff] : other.terms_) AddTerm(vars, coeff);
  return *this;
}

PseudoBooleanPoly& PseudoBooleanPoly::operator*=(double factor) {
  constant_ *= factor;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= factor;
    if (std::abs(it->second) <= zero_tolerance_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PseudoBooleanPoly operator+(PseudoBooleanPoly a, const PseudoBooleanPoly& b) {
  a += b;
  return a;
}

std::string PseudoBooleanPoly::DebugString() const {
  std::string out;
  char buf[64];
  for (const auto& [vars, coeff] : terms_) {
    std::snprintf(buf, sizeof(buf), "%.17g:", coeff);
    out += buf;
    for (const int v : vars) out += " " + std::to_string(v);
    out += "\n";
  }
  std::snprintf(buf, sizeof(buf), "constant: %.17g\n", constant_);
  out += buf;
  return out;
}

double IsingModel::Energy(std::span<const int8_t> spins) const {
  if (static_cast<int>(spins.size()) != num_spins) {
    throw Error(ErrorCode::kLengthMismatch, "spin vector length mismatch");
  }
  double energy = offset;
  for (int i = 0; i < num_spins; ++i) energy += fields[i] * spins[i];
  for (const auto& [pair, j] : couplings) {
    energy += j * spins[pair.first] * spins[pair.second];
  }
  return energy;
}

IsingModel ToIsing(const PseudoBooleanPoly& poly) {
  if (poly.Degree() > 2) {
    throw Error(ErrorCode::kDegreeTooHigh,
                "Ising conversion needs degree <= 2, got " +
                    std::to_string(poly.Degree()));
  }
  IsingModel ising;
  ising.num_spins = poly.num_vars();
  ising.fields.assign(poly.num_vars(), 0.0);
  ising.offset = poly.constant();
  for (const auto& [vars, c] : poly.terms()) {
    if (vars.size() == 1) {
      // c x = c/2 s + c/2
      ising.fields[vars[0]] += c / 2;
      ising.offset += c / 2;
    } else {
      // c x_i x_j = c/4 (s_i s_j + s_i + s_j + 1)
      const double q = c / 4;
      ising.couplings[{vars[0], vars[1]}] += q;
      ising.fields[vars[0]] += q;
      ising.fields[vars[1]] += q;
      ising.offset += q;
    }
  }
  std::erase_if(ising.couplings, [](const auto& kv) { return kv.second == 0.0; });
  return ising;
}

}  // namespace scp_anneal
