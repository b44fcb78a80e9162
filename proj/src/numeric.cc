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

#include "mi_bounds/numeric.h"

#include <cmath>
#include <limits>

namespace mi_bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// log(sqrt(2 * pi))
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kInvSqrt2 = 0.70710678118654752440;
// Below this point erfc loses accuracy to underflow; switch to the tail
// expansion of the Mills ratio.
constexpr double kTailThreshold = -36.0;

}  // namespace

double Logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double Logit(double p) { return std::log(p) - std::log1p(-p); }

double Log1pExp(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

void LogSumExpAccumulator::Add(double log_value) {
  if (log_value == -kInf) return;
  if (empty_) {
    max_log_ = log_value;
    scaled_sum_ = 1.0;
    empty_ = false;
    return;
  }
  if (log_value <= max_log_) {
    scaled_sum_ += std::exp(log_value - max_log_);
  } else {
    scaled_sum_ = scaled_sum_ * std::exp(max_log_ - log_value) + 1.0;
    max_log_ = log_value;
  }
}

double LogSumExpAccumulator::LogSum() const {
  if (empty_) return -kInf;
  return max_log_ + std::log(scaled_sum_);
}

double GaussianCdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double GaussianLogCdf(double z) {
  if (z >= kTailThreshold) {
    return std::log(GaussianCdf(z));
  }
  // Phi(z) = phi(z)/|z| * (1 - 1/z^2 + 3/z^4 - 15/z^6 + 105/z^8 - 945/z^10
  // + O(z^-12)); at |z| >= 36 the truncated series is accurate to ~1e-15.
  const double inv_z2 = 1.0 / (z * z);
  const double series =
      inv_z2 * (-1.0 + inv_z2 * (3.0 + inv_z2 * (-15.0 +
                inv_z2 * (105.0 - inv_z2 * 945.0))));
  return -0.5 * z * z - std::log(-z) - kLogSqrt2Pi + std::log1p(series);
}

uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t SubstreamSeed(uint64_t master_seed, uint64_t stream_index) {
  return Mix64(Mix64(master_seed) + stream_index);
}

double UniformUnit(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace mi_bounds
