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

#ifndef SCP_ANNEAL_SCP_INSTANCE_H_
#define SCP_ANNEAL_SCP_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace scp_anneal {

// Bit vector over the m sets of an instance; entry j is 1 iff set j is
// chosen.
using CoverSelection = std::vector<uint8_t>;

// A weighted set cover instance. Elements and sets are 0-based in this API;
// files and CLI output use 1-based element labels.
//
// Instances are immutable once constructed and the constructor enforces:
//   - m >= 2, n >= 1,
//   - every set is nonempty and lists distinct elements in [0, n),
//   - every weight is finite and > 0,
//   - the union of the sets is the whole universe.
class ScpInstance {
 public:
  // Sets need not be sorted; they are stored sorted. Throws
  // Error(kInvariantViolation) if any invariant fails.
  ScpInstance(int num_elements, std::vector<std::vector<int>> sets,
              std::vector<double> weights);

  int num_elements() const { return num_elements_; }
  int num_sets() const { return static_cast<int>(sets_.size()); }

  const std::vector<int>& set(int j) const { return sets_[j]; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  double weight(int j) const { return weights_[j]; }
  const std::vector<double>& weights() const { return weights_; }

  // Indices of the sets containing `element`, ascending.
  const std::vector<int>& covering_sets(int element) const {
    return sigma_[element];
  }

  double total_weight() const;
  double max_weight() const;
  // Sum of set cardinalities.
  int64_t total_incidence() const;

  friend bool operator==(const ScpInstance&, const ScpInstance&) = default;

 private:
  int num_elements_;
  std::vector<std::vector<int>> sets_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> sigma_;
};

// The sets covering `element`. Throws Error(kElementOutOfRange).
std::vector<int> Sigma(const ScpInstance& inst, int element);

bool IsFeasible(const ScpInstance& inst, std::span<const uint8_t> selection);

// Elements with no selected covering set, ascending.
std::vector<int> UncoveredElements(const ScpInstance& inst,
                                   std::span<const uint8_t> selection);

// Sum of the selected weights, feasible or not.
double CoverCost(const ScpInstance& inst, std::span<const uint8_t> selection);

// CoverCost for feasible selections. Infeasible selections are charged the
// total weight, i.e. the cost of the trivial all-sets cover.
double ReportedCost(const ScpInstance& inst,
                    std::span<const uint8_t> selection);

enum class FillRule {
  kPaperMc,       // sum |S_i| >= m * c
  kPerElementNc,  // sum |S_i| >= n * c
};

struct GeneratorConfig {
  int num_sets = 0;      // m
  int num_elements = 0;  // n
  double coverage = 3.0;  // c
  FillRule fill_rule = FillRule::kPaperMc;
};

// Random instance in which every element lies in at least two sets, every
// set is nonempty and the total incidence reaches the fill-rule threshold.
// Weights are uniform on (0, 1]. Deterministic in (cfg, seed).
// Throws Error(kConfigInfeasible) when the conditions cannot all hold.
ScpInstance GenerateInstance(const GeneratorConfig& cfg, uint64_t seed);

// Incidence threshold the generator must reach for `cfg`.
int64_t IncidenceThreshold(const GeneratorConfig& cfg);

std::string FillRuleName(FillRule rule);
FillRule ParseFillRule(const std::string& name);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_SCP_INSTANCE_H_
