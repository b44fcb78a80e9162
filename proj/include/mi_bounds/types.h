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

#ifndef MI_BOUNDS_TYPES_H_
#define MI_BOUNDS_TYPES_H_

namespace mi_bounds {

// Argument validation. Each check returns the value on success and throws
// std::invalid_argument naming `name` otherwise, so callers (notably the CLI)
// can surface the offending parameter or flag verbatim.
double CheckFinite(double value, const char* name);
double CheckNonNegativeFinite(double value, const char* name);
double CheckPositiveFinite(double value, const char* name);
double CheckUnitInterval(double value, const char* name);      // [0, 1]
double CheckOpenUnitInterval(double value, const char* name);  // (0, 1)

// A probability, guaranteed to lie in [0, 1].
class Probability {
 public:
  explicit Probability(double value, const char* name = "probability")
      : value_(CheckUnitInterval(value, name)) {}

  double value() const { return value_; }
  // 1 - value(), as a Probability.
  Probability Complement() const;

  friend bool operator==(Probability a, Probability b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(Probability a, Probability b) {
    return a.value_ < b.value_;
  }

 private:
  double value_;
};

// A privacy budget epsilon, guaranteed nonnegative and finite.
class Epsilon {
 public:
  explicit Epsilon(double value, const char* name = "epsilon")
      : value_(CheckNonNegativeFinite(value, name)) {}

  double value() const { return value_; }

  friend bool operator==(Epsilon a, Epsilon b) { return a.value_ == b.value_; }

 private:
  double value_;
};

// A lower/upper pair of probabilities with lower <= upper.
struct BoundInterval {
  BoundInterval(Probability lower, Probability upper);

  double Width() const { return upper.value() - lower.value(); }
  bool Contains(double p, double tolerance = 0.0) const {
    return p >= lower.value() - tolerance && p <= upper.value() + tolerance;
  }

  Probability lower;
  Probability upper;
};

// An interval of reals (used for quantities that are not probabilities,
// e.g. the admissible generalization-gap range).
struct RealInterval {
  double lower;
  double upper;
};

}  // namespace mi_bounds

#endif  // MI_BOUNDS_TYPES_H_
