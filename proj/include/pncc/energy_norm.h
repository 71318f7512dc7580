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

#ifndef PNCC_ENERGY_NORM_H_
#define PNCC_ENERGY_NORM_H_

#include <optional>
#include <vector>

#include "pncc/matrix.h"
#include "pncc/spectral_frontend.h"

namespace pncc {

struct MeanPowerConfig {
  double lambda_mu = 0.999;  // forgetting factor
  // Initial state mu[-1]. Unset means the mean channel energy of frame 0,
  // which normalizes a stationary input to one from the first frame.
  std::optional<double> mu_init;

  void Validate() const;
};

struct PcenConfig {
  double alpha = 0.98;
  double delta = 2.0;
  double r = 0.5;
  double epsilon = 1e-6;
  // Smoother coefficient. Unset means 1 / number of channels.
  std::optional<double> s;

  double SmootherCoefficient(Eigen::Index num_channels) const;
  void Validate() const;
};

inline constexpr double kMeanPowerGuard = 1e-12;
inline constexpr double kDefaultLogFloor = 1e-10;

struct MeanPowerResult {
  MelEnergies normalized;
  std::vector<double> mu;  // one entry per frame
};

// mu[t] = l mu[t-1] + (1 - l) mean_f E[t, f]; out = E / max(mu[t], guard).
MeanPowerResult MeanPowerNormalizeWithTrace(const MelEnergies& energies,
                                            const MeanPowerConfig& config);
MelEnergies MeanPowerNormalize(const MelEnergies& energies,
                               const MeanPowerConfig& config);

// Per-channel energy normalization:
//   M[t] = (1 - s) M[t-1] + s E[t],  M[0] = E[0]
//   out  = (E / (M + eps)^alpha + delta)^r - delta^r
MelEnergies Pcen(const MelEnergies& energies, const PcenConfig& config);

// Pointwise transfer of the PCEN compressor for a given smoother state.
double PcenValue(double energy, double smoothed, const PcenConfig& config);

MelEnergies PowerLaw(const MelEnergies& energies, double exponent);

// ln(max(E, floor)); the result is no longer an energy.
Matrix LogCompress(const MelEnergies& energies,
                   double floor = kDefaultLogFloor);

}  // namespace pncc

#endif  // PNCC_ENERGY_NORM_H_
