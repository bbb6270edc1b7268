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

#include "scp_anneal/scp_instance.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "scp_anneal/error.h"
#include "scp_anneal/random.h"

namespace scp_anneal {
namespace {

void CheckLength(const ScpInstance& inst, std::span<const uint8_t> selection) {
  if (static_cast<int>(selection.size()) != inst.num_sets()) {
    throw Error(ErrorCode::kLengthMismatch,
                "selection has " + std::to_string(selection.size()) +
                    " entries, instance has " +
                    std::to_string(inst.num_sets()) + " sets");
  }
}

void Violation(const std::string& what) {
  throw Error(ErrorCode::kInvariantViolation, what);
}

}  // namespace

ScpInstance::ScpInstance(int num_elements, std::vector<std::vector<int>> sets,
                         std::vector<double> weights)
    : num_elements_(num_elements),
      sets_(std::move(sets)),
      weights_(std::move(weights)) {
  if (num_elements_ < 1) Violation("universe must have at least one element");
  if (sets_.size() < 2) Violation("instance needs at least two sets");
  if (weights_.size() != sets_.size()) {
    Violation("weights and sets have different lengths");
  }
  for (size_t j = 0; j < sets_.size(); ++j) {
    if (!(weights_[j] > 0.0) || !std::isfinite(weights_[j])) {
      Violation("weight of set " + std::to_string(j) + " is not positive");
    }
    auto& s = sets_[j];
    if (s.empty()) Violation("set " + std::to_string(j) + " is empty");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      Violation("set " + std::to_string(j) + " repeats an element");
    }
    if (s.front() < 0 || s.back() >= num_elements_) {
      Violation("set " + std::to_string(j) + " has an element out of range");
    }
  }
  sigma_.assign(num_elements_, {});
  for (int j = 0; j < num_sets(); ++j) {
    for (const int e : sets_[j]) sigma_[e].push_back(j);
  }
  for (int e = 0; e < num_elements_; ++e) {
    if (sigma_[e].empty()) {
      Violation("element " + std::to_string(e + 1) + " is in no set");
    }
  }
}

double ScpInstance::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double ScpInstance::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

int64_t ScpInstance::total_incidence() const {
  int64_t total = 0;
  for (const auto& s : sets_) total += static_cast<int64_t>(s.size());
  return total;
}

std::vector<int> Sigma(const ScpInstance& inst, int element) {
  if (element < 0 || element >= inst.num_elements()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "element index " + std::to_string(element) +
                    " outside [0, " + std::to_string(inst.num_elements()) +
                    ")");
  }
  return inst.covering_sets(element);
}

std::vector<int> UncoveredElements(const ScpInstance& inst,
                                   std::span<const uint8_t> selection) {
  CheckLength(inst, selection);
  std::vector<int> uncovered;
  for (int e = 0; e < inst.num_elements(); ++e) {
    const auto& cover = inst.covering_sets(e);
    const bool covered = std::any_of(cover.begin(), cover.end(),
                                     [&](int j) { return selection[j] != 0; });
    if (!covered) uncovered.push_back(e);
  }
  return uncovered;
}

bool IsFeasible(const ScpInstance& inst, std::span<const uint8_t> selection) {
  return UncoveredElements(inst, selection).empty();
}

double CoverCost(const ScpInstance& inst, std::span<const uint8_t> selection) {
  CheckLength(inst, selection);
  double cost = 0.0;
  for (int j = 0; j < inst.num_sets(); ++j) {
    if (selection[j]) cost += inst.weight(j);
  }
  return cost;
}

double ReportedCost(const ScpInstance& inst,
                    std::span<const uint8_t> selection) {
  if (IsFeasible(inst, selection)) return CoverCost(inst, selection);
  return inst.total_weight();
}

int64_t IncidenceThreshold(const GeneratorConfig& cfg) {
  const double base = cfg.fill_rule == FillRule::kPaperMc
                          ? static_cast<double>(cfg.num_sets)
                          : static_cast<double>(cfg.num_elements);
  return static_cast<int64_t>(std::ceil(base * cfg.coverage));
}

ScpInstance GenerateInstance(const GeneratorConfig& cfg, uint64_t seed) {
  const int m = cfg.num_sets;
  const int n = cfg.num_elements;
  auto infeasible = [](const std::string& why) {
    throw Error(ErrorCode::kConfigInfeasible, why);
  };
  if (n < 1) infeasible("need at least one element");
  if (m < 2) infeasible("each element must lie in two sets, so m >= 2");
  if (!(cfg.coverage > 0.0) || !std::isfinite(cfg.coverage)) {
    infeasible("coverage must be positive");
  }
  if (cfg.fill_rule == FillRule::kPaperMc && cfg.coverage > n) {
    infeasible("coverage exceeds n under the m*c rule");
  }
  if (cfg.fill_rule == FillRule::kPerElementNc && cfg.coverage > m) {
    infeasible("coverage exceeds m under the n*c rule");
  }
  const int64_t capacity = static_cast<int64_t>(m) * n;
  const int64_t threshold = IncidenceThreshold(cfg);
  if (threshold > capacity) infeasible("incidence threshold exceeds m*n");

  std::mt19937_64 rng(seed);
  // member[j * n + e] marks element e in set j.
  std::vector<uint8_t> member(static_cast<size_t>(capacity), 0);
  std::vector<int> set_size(m, 0);
  int64_t incidence = 0;
  auto place = [&](int e, int j) {
    member[static_cast<size_t>(j) * n + e] = 1;
    ++set_size[j];
    ++incidence;
  };

  // (i) every element into two distinct sets.
  for (int e = 0; e < n; ++e) {
    const int a = static_cast<int>(UniformBelow(rng, m));
    int b = static_cast<int>(UniformBelow(rng, m - 1));
    if (b >= a) ++b;
    place(e, a);
    place(e, b);
  }
  // (ii) one random element into each still-empty set.
  for (int j = 0; j < m; ++j) {
    if (set_size[j] == 0) place(static_cast<int>(UniformBelow(rng, n)), j);
  }
  // (iii) random absent pairs until the threshold is met.
  if (incidence < threshold) {
    std::vector<int64_t> absent;
    absent.reserve(static_cast<size_t>(capacity - incidence));
    for (int64_t p = 0; p < capacity; ++p) {
      if (!member[static_cast<size_t>(p)]) absent.push_back(p);
    }
    const int64_t needed = threshold - incidence;
    // Partial Fisher-Yates: the first `needed` slots become a uniform sample.
    for (int64_t i = 0; i < needed; ++i) {
      const auto r = static_cast<int64_t>(
          UniformBelow(rng, static_cast<uint64_t>(absent.size() - i)));
      std::swap(absent[i], absent[i + r]);
      const int64_t p = absent[i];
      place(static_cast<int>(p % n), static_cast<int>(p / n));
    }
  }

  std::vector<std::vector<int>> sets(m);
  for (int j = 0; j < m; ++j) {
    sets[j].reserve(set_size[j]);
    for (int e = 0; e < n; ++e) {
      if (member[static_cast<size_t>(j) * n + e]) sets[j].push_back(e);
    }
  }
  std::vector<double> weights(m);
  for (double& w : weights) w = UniformOpenClosed(rng);
  return ScpInstance(n, std::move(sets), std::move(weights));
}

std::string FillRuleName(FillRule rule) {
  return rule == FillRule::kPaperMc ? "paper_mc" : "per_element_nc";
}

FillRule ParseFillRule(const std::string& name) {
  if (name == "paper_mc") return FillRule::kPaperMc;
  if (name == "per_element_nc") return FillRule::kPerElementNc;
  throw Error(ErrorCode::kInvalidConfig, "unknown fill rule '" + name + "'");
}

}  // namespace scp_anneal
