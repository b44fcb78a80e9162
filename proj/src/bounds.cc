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

#include "mi_bounds/bounds.h"

#include <cmath>
#include <stdexcept>

#include "mi_bounds/numeric.h"

namespace mi_bounds {

BoundInterval PositiveAccuracyBounds(Epsilon eps, Probability prior) {
  const double p = prior.value();
  if (p == 0.0) return {Probability(0.0), Probability(0.0)};
  if (p == 1.0) return {Probability(1.0), Probability(1.0)};
  // 1/(1 + e^{-ieps} (1-p)/p) = logistic(ieps + logit(p)).
  const double logit_p = Logit(p);
  return {Probability(Logistic(logit_p - eps.value())),
          Probability(Logistic(logit_p + eps.value()))};
}

BoundInterval NegativeAccuracyBounds(Epsilon eps, Probability prior) {
  const double p = prior.value();
  if (p == 0.0) return {Probability(1.0), Probability(1.0)};
  if (p == 1.0) return {Probability(0.0), Probability(0.0)};
  const double logit_p = Logit(p);
  return {Probability(Logistic(-logit_p - eps.value())),
          Probability(Logistic(-logit_p + eps.value()))};
}

BoundInterval AttackAccuracyBound(Epsilon eps) {
  return PositiveAccuracyBounds(eps, Probability(0.5));
}

BaselineBound BaselineYeom(Epsilon eps) {
  const double raw = std::exp(eps.value()) / 2.0;
  return {raw, Probability(std::min(raw, 1.0))};
}

Probability BaselineErlingsson(Epsilon eps) {
  return Probability(1.0 - std::exp(-eps.value()) / 2.0);
}

BaselineBound BaselineSablayrolles(Epsilon eps, Probability prior) {
  const double raw = prior.value() + eps.value() / 4.0;
  return {raw, Probability(std::min(raw, 1.0))};
}

double MiAdvantageUpper(Epsilon eps, Probability prior) {
  const double p = CheckOpenUnitInterval(prior.value(), "prior");
  return 2.0 * (PositiveAccuracyBounds(eps, prior).upper.value() - p);
}

Probability AdvantageMaximizingPrior(Epsilon eps, int grid_size) {
  if (grid_size < 3) {
    throw std::invalid_argument("grid_size: must be >= 3");
  }
  double best_prior = 0.0;
  double best_advantage = -1.0;
  for (int k = 1; k <= grid_size; ++k) {
    const double p = static_cast<double>(k) / (grid_size + 1);
    const double advantage = MiAdvantageUpper(eps, Probability(p));
    if (advantage > best_advantage) {
      best_advantage = advantage;
      best_prior = p;
    }
  }
  return Probability(best_prior);
}

GeneralizationParams::GeneralizationParams(double loss_bound, double gap)
    : loss_bound(CheckPositiveFinite(loss_bound, "loss_bound")),
      gap(CheckFinite(gap, "gap")) {
  if (std::abs(gap) > loss_bound) {
    throw std::invalid_argument("gap: magnitude exceeds loss_bound");
  }
}

RealInterval GeneralizationGapInterval(Epsilon eps,
                                       const GeneralizationParams& params) {
  // B*(2/(1+e^{-eps}) - 1) = B*tanh(eps/2); the lower end is its negation.
  const double half_width = params.loss_bound * std::tanh(eps.value() / 2.0);
  return {-half_width, half_width};
}

AmplificationParams::AmplificationParams(double q, Epsilon eps0, double t)
    : q(q), eps0(eps0), t(CheckOpenUnitInterval(t, "t")) {
  CheckFinite(q, "q");
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q: must be in (0, 1]");
  }
}

double AmplifiedTerm(const AmplificationParams& params, Probability prior) {
  const double p = CheckOpenUnitInterval(prior.value(), "prior");
  // e^{-q*eps0} (1-p)/p, combined in log space for extreme priors.
  return std::exp(-params.q * params.eps0.value() - Logit(p));
}

AmplificationFactors ComputeAmplificationFactors(double t) {
  CheckOpenUnitInterval(t, "t");
  return {std::exp(-t), (1.0 - t) / t};
}

}  // namespace mi_bounds
