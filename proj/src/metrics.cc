/* Copyright 2026 The pncc-features Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pncc/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pncc/error.h"

namespace pncc {

DetCurve ComputeDetCurve(std::span<const TrialScore> trials) {
  std::vector<TrialScore> sorted(trials.begin(), trials.end());
  std::size_t num_targets = 0;
  for (const TrialScore& trial : sorted) {
    if (!std::isfinite(trial.score)) {
      throw Error(ErrorCode::kInvalidParameter, "non-finite score");
    }
    if (trial.label == TrialLabel::kTarget) ++num_targets;
  }
  const std::size_t num_nontargets = sorted.size() - num_targets;
  if (num_targets == 0 || num_nontargets == 0) {
    throw Error(ErrorCode::kMissingClass,
                num_targets == 0 ? "no target trials" : "no nontarget trials");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const TrialScore& a, const TrialScore& b) { return a.score < b.score; });

  const double inf = std::numeric_limits<double>::infinity();
  const auto nt = static_cast<double>(num_targets);
  const auto nn = static_cast<double>(num_nontargets);

  DetCurve curve;
  curve.points.reserve(sorted.size() + 2);
  curve.points.push_back({-inf, 0.0, 1.0});
  // Walking up the sorted scores, everything strictly below the current
  // threshold is rejected.
  std::size_t targets_below = 0;
  std::size_t nontargets_below = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double threshold = sorted[i].score;
    curve.points.push_back({threshold, targets_below / nt,
                            (nn - static_cast<double>(nontargets_below)) / nn});
    for (; i < sorted.size() && sorted[i].score == threshold; ++i) {
      if (sorted[i].label == TrialLabel::kTarget) {
        ++targets_below;
      } else {
        ++nontargets_below;
      }
    }
  }
  curve.points.push_back({inf, 1.0, 0.0});
  return curve;
}

double EerFromCurve(const DetCurve& curve) {
  const auto& pts = curve.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double gap = pts[i].p_miss - pts[i].p_fa;
    if (gap == 0.0) return pts[i].p_miss;
    if (gap > 0.0) {
      // gap was negative at i - 1 (the first point always has gap -1).
      const DetPoint& a = pts[i - 1];
      const DetPoint& b = pts[i];
      const double gap_a = a.p_miss - a.p_fa;
      const double frac = -gap_a / (gap - gap_a);
      return a.p_miss + frac * (b.p_miss - a.p_miss);
    }
  }
  return pts.back().p_miss;
}

double ComputeEer(std::span<const TrialScore> trials) {
  return EerFromCurve(ComputeDetCurve(trials));
}

double MinDcfFromCurve(const DetCurve& curve, const DcfParams& params) {
  if (!(params.p_target > 0.0 && params.p_target < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "p_target must lie in (0, 1)");
  }
  if (!(params.c_miss > 0.0 && params.c_fa > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "costs must be positive");
  }
  const double miss_weight = params.c_miss * params.p_target;
  const double fa_weight = params.c_fa * (1.0 - params.p_target);
  double best = std::numeric_limits<double>::infinity();
  for (const DetPoint& p : curve.points) {
    best = std::min(best, miss_weight * p.p_miss + fa_weight * p.p_fa);
  }
  return params.normalize ? best / std::min(miss_weight, fa_weight) : best;
}

double ComputeMinDcf(std::span<const TrialScore> trials, const DcfParams& params) {
  return MinDcfFromCurve(ComputeDetCurve(trials), params);
}

}  // namespace pncc
