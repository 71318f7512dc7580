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

#ifndef PNCC_METRICS_H_
#define PNCC_METRICS_H_

#include <span>
#include <vector>

namespace pncc {

enum class TrialLabel { kTarget, kNontarget };

struct TrialScore {
  TrialLabel label;
  double score;  // higher means more likely the same speaker
};

struct DetPoint {
  double threshold;
  double p_miss;
  double p_fa;
};

// Operating points in order of increasing threshold. A trial is accepted
// when score >= threshold. The first point (threshold -inf) accepts every
// trial, the last (+inf) rejects every trial; in between there is one point
// per distinct score.
struct DetCurve {
  std::vector<DetPoint> points;
};

struct DcfParams {
  double p_target = 0.01;
  double c_miss = 1.0;
  double c_fa = 1.0;
  // Divide by min(c_miss p_target, c_fa (1 - p_target)), the cost of the
  // better trivial decision.
  bool normalize = true;
};

// Throws kMissingClass unless both labels are present, kInvalidParameter on
// non-finite scores.
DetCurve ComputeDetCurve(std::span<const TrialScore> trials);

// Rate at which p_miss = p_fa, linearly interpolated between the two DET
// points bracketing the crossing.
double ComputeEer(std::span<const TrialScore> trials);
double EerFromCurve(const DetCurve& curve);

// Minimum detection cost over every DET point including both endpoints.
double ComputeMinDcf(std::span<const TrialScore> trials,
                     const DcfParams& params = {});
double MinDcfFromCurve(const DetCurve& curve, const DcfParams& params);

}  // namespace pncc

#endif  // PNCC_METRICS_H_
