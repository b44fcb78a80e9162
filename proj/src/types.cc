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

#include "mi_bounds/types.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mi_bounds {

namespace {

[[noreturn]] void FailCheck(double value, const char* name,
                            const char* requirement) {
  std::ostringstream message;
  message << name << ": must be " << requirement << ", got " << value;
  throw std::invalid_argument(message.str());
}

}  // namespace

double CheckFinite(double value, const char* name) {
  if (!std::isfinite(value)) FailCheck(value, name, "finite");
  return value;
}

double CheckNonNegativeFinite(double value, const char* name) {
  if (!std::isfinite(value) || value < 0) {
    FailCheck(value, name, "finite and >= 0");
  }
  return value;
}

double CheckPositiveFinite(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0) {
    FailCheck(value, name, "finite and > 0");
  }
  return value;
}

double CheckUnitInterval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) FailCheck(value, name, "in [0, 1]");
  return value;
}

double CheckOpenUnitInterval(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) FailCheck(value, name, "in (0, 1)");
  return value;
}

Probability Probability::Complement() const {
  return Probability(1.0 - value_);
}

BoundInterval::BoundInterval(Probability lower, Probability upper)
    : lower(lower), upper(upper) {
  if (upper < lower) {
    throw std::invalid_argument("BoundInterval: lower exceeds upper");
  }
}

}  // namespace mi_bounds
