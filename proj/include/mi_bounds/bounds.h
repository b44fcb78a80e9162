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
// Closed-form bounds on the accuracy of membership-inference (MI) attacks
// against an eps-DP training function, where each candidate point enters the
// training set independently with a known prior. The central result bounds
// the positive accuracy P(x in D | S) of any attack by
//
//     1/(1 + e^{+eps} (1-p)/p)  <=  P(x in D | S)  <=  1/(1 + e^{-eps} (1-p)/p)
//
// with p the inclusion prior of the point. Everything here is a pure
// function; bounds are evaluated in log space so extreme eps and priors do
// not overflow.

#ifndef MI_BOUNDS_BOUNDS_H_
#define MI_BOUNDS_BOUNDS_H_

#include "mi_bounds/types.h"

namespace mi_bounds {

// Bounds on the accuracy of an attack that predicts "member".
// Degenerate priors are the limits of the formula: p = 0 gives [0, 0] and
// p = 1 gives [1, 1].
BoundInterval PositiveAccuracyBounds(Epsilon eps, Probability prior);

// Bounds on the accuracy of an attack that predicts "non-member". Dual to
// the positive bounds: negative.upper = 1 - positive.lower and vice versa.
BoundInterval NegativeAccuracyBounds(Epsilon eps, Probability prior);

// Bounds on overall attack accuracy (max of positive and negative accuracy).
// Both coincide at prior 1/2, so this is PositiveAccuracyBounds(eps, 0.5).
BoundInterval AttackAccuracyBound(Epsilon eps);

// A prior-work baseline whose formula can exceed 1 for large eps. `raw` is
// the formula value as published; `clamped` caps it at 1.
struct BaselineBound {
  double raw;
  Probability clamped;
};

// e^eps / 2.
BaselineBound BaselineYeom(Epsilon eps);

// 1 - e^{-eps}/2. Always a probability, so no clamping is needed. Direct
// evaluation gives 0.9323 at eps = 2; figures quoting ~95% there do not
// follow from this formula.
Probability BaselineErlingsson(Epsilon eps);

// prior + eps/4. Derived elsewhere under additional assumptions on the
// conditional weight distribution; reproduced here as a formula only.
BaselineBound BaselineSablayrolles(Epsilon eps, Probability prior);

// Upper bound on the positive advantage 2*(positive accuracy - prior).
// Requires prior in (0, 1).
double MiAdvantageUpper(Epsilon eps, Probability prior);

// The prior maximizing MiAdvantageUpper over the grid k/(grid_size+1),
// k = 1..grid_size. Ties resolve to the smallest grid point. grid_size >= 3.
Probability AdvantageMaximizingPrior(Epsilon eps, int grid_size);

// Loss cap B and an observed train/test gap R_g for the generalization
// corollary. |gap| cannot exceed the loss cap.
struct GeneralizationParams {
  explicit GeneralizationParams(double loss_bound, double gap = 0.0);

  double loss_bound;
  double gap;
};

// Admissible generalization-gap range under eps-DP training with losses in
// [0, B]: R_g in [B*(2/(1+e^eps) - 1), B*(2/(1+e^{-eps}) - 1)], i.e.
// +/- B*tanh(eps/2). Symmetric about 0 and {0} at eps = 0.
RealInterval GeneralizationGapInterval(Epsilon eps,
                                       const GeneralizationParams& params);

// Batch sampling rate q, per-step budget eps0, and the sweep variable t used
// when comparing amplification mechanisms.
struct AmplificationParams {
  AmplificationParams(double q, Epsilon eps0, double t);

  double q;       // in (0, 1]
  Epsilon eps0;   // per-step budget
  double t;       // in (0, 1)
};

// The term e^{-q*eps0} * (1-p)/p appearing in the positive upper bound;
// larger values of this term mean a smaller bound. Requires prior in (0, 1).
double AmplifiedTerm(const AmplificationParams& params, Probability prior);

// How much the bound-controlling term above grows when sweeping t downward:
// batch sampling contributes e^{-t}; dataset sub-sampling contributes
// (1-t)/t, which diverges as t -> 0 while e^{-t} stays bounded.
struct AmplificationFactors {
  double batch;    // e^{-t}
  double dataset;  // (1-t)/t
};
AmplificationFactors ComputeAmplificationFactors(double t);

}  // namespace mi_bounds

#endif  // MI_BOUNDS_BOUNDS_H_
