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

#include "mi_bounds/subsample.h"

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "mi_bounds/bounds.h"
#include "mi_bounds/numeric.h"

namespace mi_bounds {

SubsampleRate::SubsampleRate(double t, const char* name) : t_(t) {
  CheckFinite(t, name);
  if (!(t > 0.0 && t <= 1.0)) {
    throw std::invalid_argument(std::string(name) + ": must be in (0, 1]");
  }
}

Probability CertifiedPriorCap(SubsampleRate rate) {
  return Probability(rate.value());
}

std::vector<std::string> Subsample(const std::vector<std::string>& ids,
                                   SubsampleRate rate, uint64_t seed) {
  if (ids.empty()) {
    throw std::invalid_argument("ids: must be nonempty");
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(ids.size());
  for (const std::string& id : ids) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument("ids: duplicate id \"" + id + "\"");
    }
  }

  std::mt19937_64 generator(seed);
  std::vector<std::string> kept;
  for (const std::string& id : ids) {
    if (UniformUnit(generator()) < rate.value()) {
      kept.push_back(id);
    }
  }
  return kept;
}

SubsampleRate MaxRateForTarget(Epsilon eps, Probability target_upper) {
  const double target =
      CheckOpenUnitInterval(target_upper.value(), "target_upper");
  // Inverting upper = logistic(eps + logit(T)) gives T = logistic(logit(target) - eps).
  const double rate = Logistic(Logit(target) - eps.value());
  return SubsampleRate(std::min(rate, 1.0));
}

SubsamplePlan MakePlan(Epsilon eps, SubsampleRate rate,
                       uint64_t original_size) {
  return {rate, eps,
          PositiveAccuracyBounds(eps, Probability(rate.value())).upper,
          static_cast<double>(original_size) * rate.value(), original_size};
}

}  // namespace mi_bounds
