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
//
// Unlearning-by-plausible-deniability arithmetic. A deletion request for x
// is satisfiable without retraining when the posterior probability of
// non-membership P(x not in D | S) stays at least B; with equal inclusion
// priors c/N the per-request level is L(c) = 1/(1 + e^{-eps} (c/N)/(1-c/N))
// and m independent requests are satisfiable while L(c)^m >= B, i.e.
// m <= ln(B)/ln(L(c)). No actual unlearning algorithm lives here, only the
// guarantee arithmetic.

#ifndef MI_BOUNDS_UNLEARNING_H_
#define MI_BOUNDS_UNLEARNING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mi_bounds/curve.h"
#include "mi_bounds/types.h"

namespace mi_bounds {

// The per-request non-membership level L(c) for expected training size c out
// of a universe of n points. Strictly decreasing in c; requires 0 < c < n.
Probability LOfC(Epsilon eps, double expected_train_size,
                 uint64_t universe_size);

// Guarantee level B, privacy budget, and the sampling setup (all points share
// inclusion prior c/N).
struct UnlearningPolicy {
  UnlearningPolicy(Probability threshold_b, Epsilon eps,
                   uint64_t universe_size, double expected_train_size);

  Probability threshold_b;     // B in (0, 1)
  Epsilon eps;
  uint64_t universe_size;      // N
  double expected_train_size;  // c, 0 < c < N
};

struct CapacityResult {
  Probability per_request_lower;  // L(c)
  // ln(B)/ln(L); +infinity when L rounds to exactly 1 (capacity unbounded).
  double capacity;

  bool unbounded() const;
};

// Maximum number of deletion requests satisfiable under the policy. The
// formula is continuous in c; use WholeRequests for a whole-request count.
CapacityResult DeletionCapacity(const UnlearningPolicy& policy);

// floor(capacity): the number of whole requests.
double WholeRequests(const CapacityResult& result);

// Whether a batch of requests with the given per-point non-membership levels
// satisfies the group guarantee: product(levels) >= B, evaluated in log
// space. An empty batch vacuously passes. Levels must lie in (0, 1].
bool GroupRequestCheck(std::span<const Probability> per_point_lowers,
                       Probability threshold_b);

// Capacity m(c) over a grid of expected training sizes, plus a linear
// baseline (slope * c through the origin) for overlay. Grid values must lie
// in (0, universe_size). The baseline slope is illustrative only.
std::vector<CurveSeries> CapacityCurve(Epsilon eps, uint64_t universe_size,
                                       Probability b,
                                       std::span<const double> c_grid,
                                       double baseline_slope = 1.0);

}  // namespace mi_bounds

#endif  // MI_BOUNDS_UNLEARNING_H_
