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
// Exact ground truth for small universes. Every subset of a universe of up
// to 20 points is enumerated (masks in ascending order, bit i = point i),
// giving exact membership posteriors P(x in D | outcome) under a
// finite-outcome mechanism, the mechanism's exact DP epsilon, and exhaustive
// containment checks of the accuracy bounds. All probability arithmetic runs
// in log space with fixed reduction order, so results are deterministic.

#ifndef MI_BOUNDS_ORACLE_H_
#define MI_BOUNDS_ORACLE_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mi_bounds/types.h"

namespace mi_bounds {

// Bit i set means point i is in the dataset.
using DatasetMask = uint32_t;

// A finite point set with independent per-point inclusion probabilities.
// Enumeration needs probabilities strictly inside (0, 1); points that are
// certainly in or out carry no membership uncertainty and should simply be
// dropped from the universe before building it.
class Universe {
 public:
  explicit Universe(std::vector<double> inclusion_probs);

  int size() const { return static_cast<int>(probs_.size()); }
  uint32_t mask_count() const { return 1u << probs_.size(); }
  double prob(int point_index) const { return probs_[point_index]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Raised when an operation conditions on an outcome the mechanism can never
// produce; posteriors are undefined there.
class ZeroProbabilityOutcomeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized map from dataset masks to distributions over a finite outcome
// set, stored as a dense 2^N x K table of log probabilities.
class FiniteMechanism {
 public:
  // Builds from plain probability rows, one row per mask in ascending order.
  // Rows must sum to 1 within 1e-9; they are renormalized exactly and the
  // largest deviation seen is kept for inspection. K >= 2.
  static FiniteMechanism FromProbabilities(
      int num_points, const std::vector<std::vector<double>>& rows);

  int num_points() const { return num_points_; }
  uint32_t mask_count() const { return 1u << num_points_; }
  int outcome_count() const { return outcome_count_; }
  double LogProb(DatasetMask mask, int outcome) const {
    return log_probs_[static_cast<size_t>(mask) * outcome_count_ + outcome];
  }
  double max_row_deviation() const { return max_row_deviation_; }

 private:
  friend FiniteMechanism RandomizedResponseMechanism(const Universe&, double);
  FiniteMechanism(int num_points, int outcome_count,
                  std::vector<double> log_probs, double max_row_deviation);

  int num_points_;
  int outcome_count_;
  std::vector<double> log_probs_;  // row-major, 2^N rows of K entries
  double max_row_deviation_;
};

// The canonical eps-DP mechanism for exercising the bounds: outcomes are the
// 2^N noisy membership vectors, each true bit reported faithfully with
// probability 1-flip_prob and flipped with probability flip_prob. Exact
// epsilon is ln((1-flip_prob)/flip_prob). flip_prob in (0, 0.5).
FiniteMechanism RandomizedResponseMechanism(const Universe& universe,
                                            double flip_prob);

// log P(D) for the dataset selected by `mask`: sum over points of
// log(p_i) or log(1 - p_i) according to the mask bit.
double DatasetLogPrior(DatasetMask mask, const Universe& universe);

// Exact Bayes posterior P(point in D | outcome), by log-sum-exp over all
// masks. Throws ZeroProbabilityOutcomeError when the outcome has zero
// marginal probability.
Probability ExactPosterior(const Universe& universe,
                           const FiniteMechanism& mechanism, int point_index,
                           int outcome);

// The smallest eps for which the mechanism is eps-DP, measured as the max
// absolute log-probability gap over all adjacent mask pairs and singleton
// outcomes. Singleton outcomes suffice for finite outcome spaces: a ratio of
// sums never exceeds the max ratio of its terms, so unions of outcomes obey
// the same eps. Returns +infinity when one of an adjacent pair assigns an
// outcome probability 0 and the other does not.
double MechanismEpsilon(const FiniteMechanism& mechanism);

// Pairing of every mask containing a point with its bit-cleared partner,
// checking the prior identity log P(D) + log((1-p)/p) = log P(D') on each
// pair and that the pairing covers every mask exactly once.
struct Lemma1Report {
  int pair_count;
  double max_abs_log_error;
  bool bijection_ok;
  bool holds;  // bijection_ok and max_abs_log_error <= 1e-12
};
Lemma1Report CheckLemma1(const Universe& universe, int point_index);

// One posterior/bound comparison from VerifyBounds.
struct PosteriorReport {
  int point_index;
  int outcome;
  double posterior;
  BoundInterval bounds;  // accuracy bounds at the mechanism's exact epsilon
  bool inside;           // within the interval at tolerance 1e-9
};

// Checks every (point, outcome-with-nonzero-probability) posterior against
// the positive-accuracy interval computed from the mechanism's exact
// epsilon. Any report with inside == false would falsify the bound within
// the tested class.
std::vector<PosteriorReport> VerifyBounds(const Universe& universe,
                                          const FiniteMechanism& mechanism);

// Shared exact analysis: the mechanism's epsilon, per-outcome log marginals
// log P(outcome), and the full point x outcome posterior table (NaN where
// the outcome has zero probability).
struct MechanismAnalysis {
  double epsilon;
  std::vector<double> log_marginals;        // size K
  std::vector<double> posteriors;           // [point * K + outcome]
  int outcome_count;

  double PosteriorAt(int point_index, int outcome) const {
    return posteriors[static_cast<size_t>(point_index) * outcome_count +
                      outcome];
  }
};
MechanismAnalysis AnalyzeMechanism(const Universe& universe,
                                   const FiniteMechanism& mechanism);

// Per-point outcome of the Monte Carlo membership game against the
// Bayes-optimal predictor (predict member iff posterior > 1/2; ties predict
// non-member). `exact_*` are the predictor's true conditional accuracies
// derived from the posterior table; `empirical_*` are the observed ones.
// Values are NaN when the predictor never emits that prediction.
struct PointAccuracy {
  int point_index;
  double exact_positive;
  double exact_negative;
  uint64_t predicted_positive;
  uint64_t correct_positive;
  uint64_t predicted_negative;
  uint64_t correct_negative;
  double empirical_positive;
  double empirical_negative;
  double positive_stderr;  // binomial, around exact_positive
  double negative_stderr;
};

struct SimulationResult {
  uint64_t trials;
  uint64_t seed;
  std::vector<PointAccuracy> points;
};

// Samples `trials` datasets from the prior and outcomes from the mechanism,
// then scores the Bayes-optimal predictor per point. Each trial uses an
// independent substream derived from the seed, so serial and parallel
// schedules would produce identical results.
SimulationResult SimulateMiGame(const Universe& universe,
                                const FiniteMechanism& mechanism,
                                uint64_t trials, uint64_t seed);

}  // namespace mi_bounds

#endif  // MI_BOUNDS_ORACLE_H_
