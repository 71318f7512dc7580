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

#ifndef PNCC_MEDIUM_TIME_H_
#define PNCC_MEDIUM_TIME_H_

#include <span>
#include <vector>

#include "pncc/matrix.h"
#include "pncc/spectral_frontend.h"

namespace pncc {

// Constants of the medium-time processor. Every value is overridable.
struct MediumTimeConfig {
  int window_halfwidth = 2;        // M, frames on each side
  double ans_lambda_a = 0.999;     // rising-input pole of the floor tracker
  double ans_lambda_b = 0.5;       // falling-input pole of the floor tracker
  double floor_factor = 2.0;       // c, excitation test Q >= c * Q_le
  double masking_lambda_t = 0.85;  // peak decay
  double masking_mu_t = 0.2;       // post-peak floor relative to the peak
  int smoothing_halfwidth = 4;     // N, channels on each side
  // Replaces suppression and masking with R = Q, making the transfer
  // function identically one wherever Q exceeds the division guard.
  bool pass_through = false;

  void Validate() const;
};

// Dimensionless per-bin gain S[t, f].
struct TransferFunction {
  Matrix values;
};

inline constexpr double kDivisionGuard = 1e-12;

// Edge-clipped moving average over [t - M, t + M] along time.
MelEnergies MediumTimePower(const MelEnergies& energies, int halfwidth);

// y[0] = init; y[t] = a y[t-1] + (1-a) x[t] when x[t] >= y[t-1], otherwise
// the same with b.
std::vector<double> AsymmetricLowpass(std::span<const double> input,
                                      double lambda_a, double lambda_b,
                                      double init);

// Intermediate signals of the suppression stage, all T x F.
struct SuppressionTrace {
  Matrix noise_floor;     // Q_le
  Matrix rectified;       // Q0
  Matrix rectified_floor; // Q_f
  Matrix masked;
  Matrix output;          // R
};

// Asymmetric noise suppression with temporal masking. Returns R.
MelEnergies NoiseSuppressAndMask(const MelEnergies& medium_power,
                                 const MediumTimeConfig& config);

// Same computation, keeping every intermediate.
SuppressionTrace NoiseSuppressAndMaskTrace(const MelEnergies& medium_power,
                                           const MediumTimeConfig& config);

// Average over channels [f - N, f + N] of R / max(Q, guard).
TransferFunction WeightSmoothing(const MelEnergies& suppressed,
                                 const MelEnergies& medium_power,
                                 int halfwidth);

// Elementwise E * S.
MelEnergies TimeFrequencyNormalize(const MelEnergies& energies,
                                   const TransferFunction& transfer);

// The four steps above, E -> E * S.
MelEnergies ApplyMediumTime(const MelEnergies& energies,
                            const MediumTimeConfig& config);

}  // namespace pncc

#endif  // PNCC_MEDIUM_TIME_H_
