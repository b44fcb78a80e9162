// Copyright 2026 The MI Bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mi_bounds/unlearning.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mi_bounds/numeric.h"

namespace mi_bounds {

Probability LOfC(Epsilon eps, double expected_train_size,
                 uint64_t universe_size) {
  CheckFinite(expected_train_size, "expected_train_size");
  if (universe_size == 0) {
    throw std::invalid_argument("universe_size: must be > 0");
  }
  if (!(expected_train_size > 0.0 &&
        expected_train_size < static_cast<double>(universe_size))) {
    throw std::invalid_argument(
        "expected_train_size: must lie in (0, universe_size)");
  }
  const double prior = expected_train_size / static_cast<double>(universe_size);
  // 1/(1 + e^{-eps} p/(1-p)) = logistic(eps - logit(p)).
  return Probability(Logistic(eps.value() - Logit(prior)));
}

UnlearningPolicy::UnlearningPolicy(Probability threshold_b, Epsilon eps,
                                   uint64_t universe_size,
                                   double expected_train_size)
    : threshold_b(threshold_b),
      eps(eps),
      universe_size(universe_size),
      expected_train_size(expected_train_size) {
  CheckOpenUnitInterval(threshold_b.value(), "threshold_b");
  if (universe_size == 0) {
    throw std::invalid_argument("universe_size: must be > 0");
  }
  if (!(expected_train_size > 0.0 &&
        expected_train_size < static_cast<double>(universe_size))) {
    throw std::invalid_argument(
        "expected_train_size: must lie in (0, universe_size)");
  }
}

bool CapacityResult::unbounded() const { return std::isinf(capacity); }

CapacityResult DeletionCapacity(const UnlearningPolicy& policy) {
  const Probability level =
      LOfC(policy.eps, policy.expected_train_size, policy.universe_size);
  if (level.value() == 1.0) {
    return {level, std::numeric_limits<double>::infinity()};
  }
  return {level,
          std::log(policy.threshold_b.value()) / std::log(level.value())};
}

double WholeRequests(const CapacityResult& result) {
  return std::floor(result.capacity);
}

bool GroupRequestCheck(std::span<const Probability> per_point_lowers,
                       Probability threshold_b) {
  double log_product = 0.0;
  for (const Probability& level : per_point_lowers) {
    if (level.value() <= 0.0) {
      throw std::invalid_argument("per_point_lowers: must be in (0, 1]");
    }
    log_product += std::log(level.value());
  }
  return log_product >= std::log(threshold_b.value());
}

std::vector<CurveSeries> CapacityCurve(Epsilon eps, uint64_t universe_size,
                                       Probability b,
                                       std::span<const double> c_grid,
                                       double baseline_slope) {
  CheckFinite(baseline_slope, "baseline_slope");
  CurveSeries capacity{"capacity", "expected_train_size", "deletion_capacity",
                       {}, {}};
  CurveSeries baseline{"linear_baseline", "expected_train_size",
                       "deletion_capacity", {}, {}};
  capacity.x.reserve(c_grid.size());
  capacity.y.reserve(c_grid.size());
  for (const double c : c_grid) {
    const CapacityResult result =
        DeletionCapacity(UnlearningPolicy(b, eps, universe_size, c));
    capacity.x.push_back(c);
    capacity.y.push_back(result.capacity);
    baseline.x.push_back(c);
    baseline.y.push_back(baseline_slope * c);
  }
  ValidateCurveSeries(capacity);
  ValidateCurveSeries(baseline);
  return {std::move(capacity), std::move(baseline)};
}

}  // namespace mi_bounds
