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

#include "pncc/energy_norm.h"

#include <algorithm>
#include <cmath>

#include "pncc/error.h"

namespace pncc {

void MeanPowerConfig::Validate() const {
  if (!(lambda_mu > 0.0 && lambda_mu < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "lambda_mu must lie in (0, 1)");
  }
  if (mu_init && !(*mu_init > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "fixed mu_init must be positive");
  }
}

double PcenConfig::SmootherCoefficient(Eigen::Index num_channels) const {
  return s.value_or(1.0 / static_cast<double>(num_channels));
}

void PcenConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kInvalidParameter, what);
  };
  require(alpha > 0.0 && alpha <= 1.0, "pcen.alpha must lie in (0, 1]");
  require(delta >= 0.0, "pcen.delta must be >= 0");
  require(r > 0.0 && r <= 1.0, "pcen.r must lie in (0, 1]");
  require(epsilon > 0.0, "pcen.epsilon must be positive");
  require(!s || (*s > 0.0 && *s <= 1.0), "pcen.s must lie in (0, 1]");
}

MeanPowerResult MeanPowerNormalizeWithTrace(const MelEnergies& energies,
                                            const MeanPowerConfig& config) {
  config.Validate();
  const Matrix& e = energies.values;
  if (e.rows() == 0 || e.cols() == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "mean power normalization needs at least one frame");
  }
  const auto num_channels = static_cast<double>(e.cols());
  const double lambda = config.lambda_mu;

  MeanPowerResult result;
  result.mu.resize(static_cast<std::size_t>(e.rows()));
  result.normalized.values.resize(e.rows(), e.cols());
  double mu = config.mu_init.value_or(e.row(0).sum() / num_channels);
  for (Eigen::Index t = 0; t < e.rows(); ++t) {
    mu = lambda * mu + (1.0 - lambda) * (e.row(t).sum() / num_channels);
    result.mu[t] = mu;
    result.normalized.values.row(t) = e.row(t) / std::max(mu, kMeanPowerGuard);
  }
  return result;
}

MelEnergies MeanPowerNormalize(const MelEnergies& energies,
                               const MeanPowerConfig& config) {
  return MeanPowerNormalizeWithTrace(energies, config).normalized;
}

double PcenValue(double energy, double smoothed, const PcenConfig& config) {
  const double gain = std::pow(smoothed + config.epsilon, config.alpha);
  return std::pow(energy / gain + config.delta, config.r) -
         std::pow(config.delta, config.r);
}

MelEnergies Pcen(const MelEnergies& energies, const PcenConfig& config) {
  config.Validate();
  const Matrix& e = energies.values;
  MelEnergies out;
  out.values.resize(e.rows(), e.cols());
  if (e.rows() == 0) return out;
  const double s = config.SmootherCoefficient(e.cols());
  Eigen::RowVectorXd smoothed = e.row(0);
  for (Eigen::Index t = 0; t < e.rows(); ++t) {
    if (t > 0) smoothed = (1.0 - s) * smoothed + s * e.row(t);
    for (Eigen::Index f = 0; f < e.cols(); ++f) {
      out.values(t, f) = PcenValue(e(t, f), smoothed(f), config);
    }
  }
  return out;
}

MelEnergies PowerLaw(const MelEnergies& energies, double exponent) {
  if (!(exponent > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "power-law exponent must be positive");
  }
  MelEnergies out;
  out.values = energies.values.array().pow(exponent);
  return out;
}

Matrix LogCompress(const MelEnergies& energies, double floor) {
  if (!(floor > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "log floor must be positive");
  }
  return energies.values.array().max(floor).log();
}

}  // namespace pncc
