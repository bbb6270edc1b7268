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

#ifndef SCP_ANNEAL_PSEUDO_BOOLEAN_POLY_H_
#define SCP_ANNEAL_PSEUDO_BOOLEAN_POLY_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace scp_anneal {

// 0/1 values, one per polynomial variable.
using Assignment = std::vector<uint8_t>;

// A multilinear polynomial over binary variables x_0..x_{num_vars-1}:
//
//   p(x) = constant + sum_T coeff_T * prod_{v in T} x_v
//
// Terms are keyed by their sorted, duplicate-free variable list, so two
// polynomials with the same monomials compare equal structurally. Degree-2
// terms are the couplers J_ij and degree-1 terms the fields h_i of a QUBO;
// higher degrees make it a HUBO.
//
// Coefficients whose magnitude falls to `zero_tolerance` or below are erased
// (the default of 0 erases exact zeros only).
class PseudoBooleanPoly {
 public:
  using Term = std::vector<int>;

  explicit PseudoBooleanPoly(int num_vars = 0, double zero_tolerance = 0.0);

  int num_vars() const { return num_vars_; }
  double constant() const { return constant_; }
  double zero_tolerance() const { return zero_tolerance_; }
  const std::map<Term, double>& terms() const { return terms_; }

  // Appends `count` fresh variables and returns the index of the first.
  int AddVariables(int count);

  // Adds `coeff` to the monomial over `vars` (any order). An empty list
  // adds to the constant. Throws Error(kIndexOutOfRange) or
  // Error(kDuplicateIndexInTerm).
  void AddTerm(Term vars, double coeff);
  void AddConstant(double c) { constant_ += c; }

  // Coefficient of the monomial over `vars` (sorted or not); 0 if absent.
  double Coefficient(Term vars) const;

  // Throws Error(kLengthMismatch) unless a.size() == num_vars().
  double Evaluate(std::span<const uint8_t> a) const;

  // Largest term cardinality; 0 for a constant-only polynomial.
  int Degree() const;

  int CountVariables() const { return num_vars_; }
  // Number of stored degree-2 terms.
  int64_t CountCouplers() const;
  int64_t CountTerms(int degree) const;

  // Term-wise sum; the result spans max(num_vars) variables.
  PseudoBooleanPoly& operator+=(const PseudoBooleanPoly& other);
  // Multiplies every coefficient and the constant by `factor`.
  PseudoBooleanPoly& operator*=(double factor);

  // One term per line as "coeff: i j k", then "constant: c". Debug only.
  std::string DebugString() const;

  friend bool operator==(const PseudoBooleanPoly& a,
                         const PseudoBooleanPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.constant_ == b.constant_ &&
           a.terms_ == b.terms_;
  }

 private:
  int num_vars_;
  double zero_tolerance_;
  double constant_ = 0.0;
  std::map<Term, double> terms_;
};

PseudoBooleanPoly operator+(PseudoBooleanPoly a, const PseudoBooleanPoly& b);

// Spin form E(s) = offset + sum_{i<j} J_ij s_i s_j + sum_i h_i s_i with
// s in {-1, +1}.
struct IsingModel {
  int num_spins = 0;
  std::map<std::pair<int, int>, double> couplings;
  std::vector<double> fields;
  double offset = 0.0;

  double Energy(std::span<const int8_t> spins) const;
};

// Substitutes x = (s + 1) / 2 so that poly(x) == ising.Energy(s) for every
// assignment. Throws Error(kDegreeTooHigh) when poly.Degree() > 2.
IsingModel ToIsing(const PseudoBooleanPoly& poly);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_PSEUDO_BOOLEAN_POLY_H_
