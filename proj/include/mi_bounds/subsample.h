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
// Defender-side dataset sub-sampling. Keeping each point of a dataset
// independently with probability T caps every point's inclusion prior at T,
// whatever the unknown distribution of the original dataset was, which turns
// the positive-accuracy bound into an enforceable guarantee.

#ifndef MI_BOUNDS_SUBSAMPLE_H_
#define MI_BOUNDS_SUBSAMPLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mi_bounds/types.h"

namespace mi_bounds {

// Per-point keep probability T in (0, 1].
class SubsampleRate {
 public:
  explicit SubsampleRate(double t, const char* name = "rate");

  double value() const { return t_; }

 private:
  double t_;
};

// The certified cap on any point's inclusion prior after sub-sampling at
// `rate`: the prior of "x in original dataset" is at most 1, so the
// two-stage prior is at most T.
Probability CertifiedPriorCap(SubsampleRate rate);

// Keeps each id independently with probability rate, preserving input order.
// Ids must be distinct. Deterministic: one draw per id in input order from a
// std::mt19937_64 seeded with `seed` (the top 53 bits of each draw are mapped
// to [0, 1) and compared against the rate), so output is bit-reproducible
// across platforms.
std::vector<std::string> Subsample(const std::vector<std::string>& ids,
                                   SubsampleRate rate, uint64_t seed);

// Largest rate T with PositiveAccuracyBounds(eps, T).upper <= target_upper;
// the inversion T = 1/(1 + e^eps (1/target - 1)) is exact. Returns rate 1
// (no sub-sampling) if the target is met without it. target_upper in (0, 1).
SubsampleRate MaxRateForTarget(Epsilon eps, Probability target_upper);

// Decision record for a sub-sampling defense.
struct SubsamplePlan {
  SubsampleRate rate;
  Epsilon eps;
  Probability certified_upper;  // positive upper bound at (eps, rate)
  double expected_size;         // original_size * rate
  uint64_t original_size;
};

SubsamplePlan MakePlan(Epsilon eps, SubsampleRate rate,
                       uint64_t original_size);

}  // namespace mi_bounds

#endif  // MI_BOUNDS_SUBSAMPLE_H_
