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

#ifndef MI_BOUNDS_CURVE_H_
#define MI_BOUNDS_CURVE_H_

#include <string>
#include <vector>

namespace mi_bounds {

// A labeled curve: parallel x/y arrays with strictly increasing, finite x
// and finite y. Carrier for all figure data and CSV/SVG export.
struct CurveSeries {
  std::string label;
  std::string x_name;
  std::string y_name;
  std::vector<double> x;
  std::vector<double> y;
};

// Throws std::invalid_argument if the series violates its invariants.
void ValidateCurveSeries(const CurveSeries& series);

}  // namespace mi_bounds

#endif  // MI_BOUNDS_CURVE_H_
