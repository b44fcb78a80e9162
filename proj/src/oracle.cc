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

#include "mi_bounds/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "mi_bounds/bounds.h"
#include "mi_bounds/numeric.h"

namespace mi_bounds {

namespace {

constexpr int kMaxUniversePoints = 20;
// Dense tables are capped at 4M entries (32 MiB of log probabilities).
constexpr size_t kMaxTableEntries = size_t{1} << 22;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kRowSumTolerance = 1e-9;
constexpr double kContainmentTolerance = 1e-9;
constexpr double kLemma1Tolerance = 1e-12;

void CheckSameShape(const Universe& universe,
                    const FiniteMechanism& mechanism) {
  if (universe.size() != mechanism.num_points()) {
    throw std::invalid_argument(
        "mechanism: table width does not match universe size");
  }
}

void CheckPointIndex(const Universe& universe, int point_index) {
  if (point_index < 0 || point_index >= universe.size()) {
    throw std::invalid_argument("point_index: out of range");
  }
}

}  // namespace

Universe::Universe(std::vector<double> inclusion_probs)
    : probs_(std::move(inclusion_probs)) {
  if (probs_.empty() ||
      probs_.size() > static_cast<size_t>(kMaxUniversePoints)) {
    throw std::invalid_argument("inclusion_probs: need 1 to 20 points");
  }
  for (const double p : probs_) {
    CheckOpenUnitInterval(p, "inclusion_probs");
  }
}

FiniteMechanism::FiniteMechanism(int num_points, int outcome_count,
                                 std::vector<double> log_probs,
                                 double max_row_deviation)
    : num_points_(num_points),
      outcome_count_(outcome_count),
      log_probs_(std::move(log_probs)),
      max_row_deviation_(max_row_deviation) {}

FiniteMechanism FiniteMechanism::FromProbabilities(
    int num_points, const std::vector<std::vector<double>>& rows) {
  if (num_points < 1 || num_points > kMaxUniversePoints) {
    throw std::invalid_argument("num_points: need 1 to 20 points");
  }
  const size_t mask_count = size_t{1} << num_points;
  if (rows.size() != mask_count) {
    throw std::invalid_argument(
        "rows: need one row per dataset mask, in ascending mask order");
  }
  const size_t outcome_count = rows[0].size();
  if (outcome_count < 2) {
    throw std::invalid_argument("rows: need at least 2 outcomes");
  }
  if (mask_count * outcome_count > kMaxTableEntries) {
    throw std::invalid_argument("rows: mechanism table too large");
  }

  std::vector<double> log_probs(mask_count * outcome_count);
  double max_deviation = 0.0;
  for (size_t mask = 0; mask < mask_count; ++mask) {
    const std::vector<double>& row = rows[mask];
    if (row.size() != outcome_count) {
      throw std::invalid_argument("rows: ragged outcome counts");
    }
    double sum = 0.0;
    for (const double p : row) {
      if (!std::isfinite(p) || p < 0.0) {
        throw std::invalid_argument("rows: probabilities must be finite and >= 0");
      }
      sum += p;
    }
    max_deviation = std::max(max_deviation, std::abs(sum - 1.0));
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("rows: row does not sum to 1 within 1e-9");
    }
    for (size_t k = 0; k < outcome_count; ++k) {
      log_probs[mask * outcome_count + k] = std::log(row[k] / sum);
    }
  }
  return FiniteMechanism(num_points, static_cast<int>(outcome_count),
                         std::move(log_probs), max_deviation);
}

FiniteMechanism RandomizedResponseMechanism(const Universe& universe,
                                            double flip_prob) {
  CheckFinite(flip_prob, "flip_prob");
  if (!(flip_prob > 0.0 && flip_prob < 0.5)) {
    throw std::invalid_argument("flip_prob: must be in (0, 0.5)");
  }
  const int n = universe.size();
  const size_t mask_count = size_t{1} << n;
  if (mask_count * mask_count > kMaxTableEntries) {
    throw std::invalid_argument(
        "flip_prob: randomized-response table too large for this universe");
  }
  const double log_flip = std::log(flip_prob);
  const double log_keep = std::log1p(-flip_prob);
  std::vector<double> log_probs(mask_count * mask_count);
  for (size_t mask = 0; mask < mask_count; ++mask) {
    for (size_t outcome = 0; outcome < mask_count; ++outcome) {
      const int flipped = std::popcount(static_cast<uint32_t>(mask ^ outcome));
      log_probs[mask * mask_count + outcome] =
          flipped * log_flip + (n - flipped) * log_keep;
    }
  }
  return FiniteMechanism(n, static_cast<int>(mask_count),
                         std::move(log_probs), 0.0);
}

double DatasetLogPrior(DatasetMask mask, const Universe& universe) {
  if (mask >= universe.mask_count()) {
    throw std::invalid_argument("mask: wider than the universe");
  }
  double log_prior = 0.0;
  for (int i = 0; i < universe.size(); ++i) {
    const double p = universe.prob(i);
    log_prior += (mask >> i) & 1u ? std::log(p) : std::log1p(-p);
  }
  return log_prior;
}

Probability ExactPosterior(const Universe& universe,
                           const FiniteMechanism& mechanism, int point_index,
                           int outcome) {
  CheckSameShape(universe, mechanism);
  CheckPointIndex(universe, point_index);
  if (outcome < 0 || outcome >= mechanism.outcome_count()) {
    throw std::invalid_argument("outcome: out of range");
  }
  LogSumExpAccumulator member;
  LogSumExpAccumulator total;
  for (DatasetMask mask = 0; mask < universe.mask_count(); ++mask) {
    const double weight =
        mechanism.LogProb(mask, outcome) + DatasetLogPrior(mask, universe);
    total.Add(weight);
    if ((mask >> point_index) & 1u) member.Add(weight);
  }
  if (total.LogSum() == -kInf) {
    throw ZeroProbabilityOutcomeError(
        "outcome: has zero probability under every dataset");
  }
  return Probability(std::exp(member.LogSum() - total.LogSum()));
}

double MechanismEpsilon(const FiniteMechanism& mechanism) {
  const uint32_t mask_count = mechanism.mask_count();
  const int outcomes = mechanism.outcome_count();
  double max_gap = 0.0;
  for (DatasetMask mask = 0; mask < mask_count; ++mask) {
    for (int i = 0; i < mechanism.num_points(); ++i) {
      if ((mask >> i) & 1u) continue;
      const DatasetMask neighbor = mask | (1u << i);
      for (int k = 0; k < outcomes; ++k) {
        const double a = mechanism.LogProb(mask, k);
        const double b = mechanism.LogProb(neighbor, k);
        if (a == -kInf && b == -kInf) continue;  // 0 <= e^eps * 0 for any eps
        if (a == -kInf || b == -kInf) return kInf;
        max_gap = std::max(max_gap, std::abs(a - b));
      }
    }
  }
  return max_gap;
}

Lemma1Report CheckLemma1(const Universe& universe, int point_index) {
  CheckPointIndex(universe, point_index);
  const DatasetMask bit = 1u << point_index;
  const double p = universe.prob(point_index);
  const double log_ratio = std::log1p(-p) - std::log(p);  // log((1-p)/p)

  std::vector<bool> used(universe.mask_count(), false);
  Lemma1Report report{0, 0.0, true, false};
  for (DatasetMask mask = 0; mask < universe.mask_count(); ++mask) {
    if (!(mask & bit)) continue;
    const DatasetMask partner = mask ^ bit;
    if (used[mask] || used[partner]) {
      report.bijection_ok = false;
      continue;
    }
    used[mask] = used[partner] = true;
    ++report.pair_count;
    const double error = DatasetLogPrior(mask, universe) + log_ratio -
                         DatasetLogPrior(partner, universe);
    report.max_abs_log_error =
        std::max(report.max_abs_log_error, std::abs(error));
  }
  report.bijection_ok =
      report.bijection_ok &&
      std::all_of(used.begin(), used.end(), [](bool u) { return u; });
  report.holds =
      report.bijection_ok && report.max_abs_log_error <= kLemma1Tolerance;
  return report;
}

MechanismAnalysis AnalyzeMechanism(const Universe& universe,
                                   const FiniteMechanism& mechanism) {
  CheckSameShape(universe, mechanism);
  const int n = universe.size();
  const int outcomes = mechanism.outcome_count();

  std::vector<double> log_priors(universe.mask_count());
  for (DatasetMask mask = 0; mask < universe.mask_count(); ++mask) {
    log_priors[mask] = DatasetLogPrior(mask, universe);
  }

  MechanismAnalysis analysis;
  analysis.epsilon = MechanismEpsilon(mechanism);
  analysis.outcome_count = outcomes;
  analysis.log_marginals.resize(outcomes);
  analysis.posteriors.resize(static_cast<size_t>(n) * outcomes);

  std::vector<LogSumExpAccumulator> member(n);
  for (int k = 0; k < outcomes; ++k) {
    LogSumExpAccumulator total;
    std::fill(member.begin(), member.end(), LogSumExpAccumulator());
    for (DatasetMask mask = 0; mask < universe.mask_count(); ++mask) {
      const double weight = mechanism.LogProb(mask, k) + log_priors[mask];
      total.Add(weight);
      uint32_t bits = mask;
      while (bits != 0) {
        const int i = std::countr_zero(bits);
        member[i].Add(weight);
        bits &= bits - 1;
      }
    }
    analysis.log_marginals[k] = total.LogSum();
    for (int i = 0; i < n; ++i) {
      analysis.posteriors[static_cast<size_t>(i) * outcomes + k] =
          analysis.log_marginals[k] == -kInf
              ? kNan
              : std::exp(member[i].LogSum() - analysis.log_marginals[k]);
    }
  }
  return analysis;
}

std::vector<PosteriorReport> VerifyBounds(const Universe& universe,
                                          const FiniteMechanism& mechanism) {
  const MechanismAnalysis analysis = AnalyzeMechanism(universe, mechanism);
  std::vector<PosteriorReport> reports;
  reports.reserve(static_cast<size_t>(universe.size()) *
                  mechanism.outcome_count());
  for (int i = 0; i < universe.size(); ++i) {
    const BoundInterval bounds =
        std::isinf(analysis.epsilon)
            ? BoundInterval(Probability(0.0), Probability(1.0))
            : PositiveAccuracyBounds(Epsilon(analysis.epsilon),
                                     Probability(universe.prob(i)));
    for (int k = 0; k < mechanism.outcome_count(); ++k) {
      if (analysis.log_marginals[k] == -kInf) continue;
      const double posterior = analysis.PosteriorAt(i, k);
      reports.push_back(
          {i, k, posterior, bounds,
           bounds.Contains(posterior, kContainmentTolerance)});
    }
  }
  return reports;
}

SimulationResult SimulateMiGame(const Universe& universe,
                                const FiniteMechanism& mechanism,
                                uint64_t trials, uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("trials: must be >= 1");
  }
  const MechanismAnalysis analysis = AnalyzeMechanism(universe, mechanism);
  const int n = universe.size();
  const int outcomes = mechanism.outcome_count();

  // Per-row outcome CDFs for inverse-transform sampling.
  std::vector<double> cdf(static_cast<size_t>(universe.mask_count()) *
                          outcomes);
  for (DatasetMask mask = 0; mask < universe.mask_count(); ++mask) {
    double running = 0.0;
    for (int k = 0; k < outcomes; ++k) {
      running += std::exp(mechanism.LogProb(mask, k));
      cdf[static_cast<size_t>(mask) * outcomes + k] = running;
    }
  }

  SimulationResult result{trials, seed, {}};
  result.points.resize(n);
  for (int i = 0; i < n; ++i) {
    PointAccuracy& acc = result.points[i];
    acc = {i, kNan, kNan, 0, 0, 0, 0, kNan, kNan, kNan, kNan};

    // Exact conditional accuracies of the Bayes predictor.
    double positive_mass = 0.0, positive_correct = 0.0;
    double negative_mass = 0.0, negative_correct = 0.0;
    for (int k = 0; k < outcomes; ++k) {
      if (analysis.log_marginals[k] == -kInf) continue;
      const double marginal = std::exp(analysis.log_marginals[k]);
      const double posterior = analysis.PosteriorAt(i, k);
      if (posterior > 0.5) {
        positive_mass += marginal;
        positive_correct += marginal * posterior;
      } else {
        negative_mass += marginal;
        negative_correct += marginal * (1.0 - posterior);
      }
    }
    if (positive_mass > 0.0) acc.exact_positive = positive_correct / positive_mass;
    if (negative_mass > 0.0) acc.exact_negative = negative_correct / negative_mass;
  }

  for (uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 generator(SubstreamSeed(seed, trial));
    DatasetMask mask = 0;
    for (int i = 0; i < n; ++i) {
      if (UniformUnit(generator()) < universe.prob(i)) mask |= 1u << i;
    }
    const double u = UniformUnit(generator());
    const double* row = &cdf[static_cast<size_t>(mask) * outcomes];
    const int outcome = std::min<int>(
        outcomes - 1,
        static_cast<int>(std::upper_bound(row, row + outcomes, u) - row));

    for (int i = 0; i < n; ++i) {
      PointAccuracy& acc = result.points[i];
      const bool is_member = (mask >> i) & 1u;
      if (analysis.PosteriorAt(i, outcome) > 0.5) {
        ++acc.predicted_positive;
        if (is_member) ++acc.correct_positive;
      } else {
        ++acc.predicted_negative;
        if (!is_member) ++acc.correct_negative;
      }
    }
  }

  for (PointAccuracy& acc : result.points) {
    if (acc.predicted_positive > 0) {
      acc.empirical_positive = static_cast<double>(acc.correct_positive) /
                               static_cast<double>(acc.predicted_positive);
      acc.positive_stderr =
          std::sqrt(acc.exact_positive * (1.0 - acc.exact_positive) /
                    static_cast<double>(acc.predicted_positive));
    }
    if (acc.predicted_negative > 0) {
      acc.empirical_negative = static_cast<double>(acc.correct_negative) /
                               static_cast<double>(acc.predicted_negative);
      acc.negative_stderr =
          std::sqrt(acc.exact_negative * (1.0 - acc.exact_negative) /
                    static_cast<double>(acc.predicted_negative));
    }
  }
  return result;
}

}  // namespace mi_bounds
