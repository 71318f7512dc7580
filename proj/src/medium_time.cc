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

#include "pncc/medium_time.h"

#include <algorithm>
#include <string>

#include "pncc/error.h"

namespace pncc {

void MediumTimeConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kInvalidParameter, what);
  };
  require(window_halfwidth >= 0, "medium_time.window_halfwidth must be >= 0");
  require(smoothing_halfwidth >= 0,
          "medium_time.smoothing_halfwidth must be >= 0");
  require(ans_lambda_b > 0.0 && ans_lambda_b <= ans_lambda_a &&
              ans_lambda_a < 1.0,
          "need 0 < ans_lambda_b <= ans_lambda_a < 1");
  require(masking_lambda_t > 0.0 && masking_lambda_t < 1.0,
          "masking_lambda_t must lie in (0, 1)");
  require(masking_mu_t >= 0.0 && masking_mu_t <= 1.0,
          "masking_mu_t must lie in [0, 1]");
  require(floor_factor >= 1.0, "floor_factor must be >= 1");
}

MelEnergies MediumTimePower(const MelEnergies& energies, int halfwidth) {
  if (halfwidth < 0) {
    throw Error(ErrorCode::kInvalidParameter, "halfwidth must be >= 0");
  }
  const Eigen::Index num_frames = energies.num_frames();
  MelEnergies out;
  out.values.resize(num_frames, energies.num_channels());
  for (Eigen::Index t = 0; t < num_frames; ++t) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, t - halfwidth);
    const Eigen::Index hi = std::min<Eigen::Index>(num_frames - 1, t + halfwidth);
    out.values.row(t) =
        energies.values.middleRows(lo, hi - lo + 1).colwise().sum() /
        static_cast<double>(hi - lo + 1);
  }
  return out;
}

std::vector<double> AsymmetricLowpass(std::span<const double> input,
                                      double lambda_a, double lambda_b,
                                      double init) {
  std::vector<double> out(input.size());
  if (input.empty()) return out;
  out[0] = init;
  for (std::size_t t = 1; t < input.size(); ++t) {
    const double lambda = input[t] >= out[t - 1] ? lambda_a : lambda_b;
    out[t] = lambda * out[t - 1] + (1.0 - lambda) * input[t];
  }
  return out;
}

SuppressionTrace NoiseSuppressAndMaskTrace(const MelEnergies& medium_power,
                                           const MediumTimeConfig& config) {
  config.Validate();
  const Matrix& q = medium_power.values;
  const Eigen::Index num_frames = q.rows();
  const Eigen::Index num_channels = q.cols();

  SuppressionTrace trace;
  trace.noise_floor.resize(num_frames, num_channels);
  trace.rectified.resize(num_frames, num_channels);
  trace.rectified_floor.resize(num_frames, num_channels);
  trace.masked.resize(num_frames, num_channels);
  trace.output.resize(num_frames, num_channels);
  if (num_frames == 0) return trace;

  const double lambda_t = config.masking_lambda_t;
  const double mu_t = config.masking_mu_t;
  std::vector<double> column(static_cast<std::size_t>(num_frames));

  for (Eigen::Index f = 0; f < num_channels; ++f) {
    for (Eigen::Index t = 0; t < num_frames; ++t) column[t] = q(t, f);
    const std::vector<double> floor =
        AsymmetricLowpass(column, config.ans_lambda_a, config.ans_lambda_b,
                          0.9 * column[0]);

    std::vector<double> rectified(column.size());
    for (Eigen::Index t = 0; t < num_frames; ++t) {
      rectified[t] = std::max(column[t] - floor[t], 0.0);
    }
    const std::vector<double> rectified_floor =
        AsymmetricLowpass(rectified, config.ans_lambda_a, config.ans_lambda_b,
                          rectified[0]);

    double peak = rectified[0];
    trace.masked(0, f) = rectified[0];
    for (Eigen::Index t = 1; t < num_frames; ++t) {
      const double decayed = lambda_t * peak;
      trace.masked(t, f) = rectified[t] >= decayed ? rectified[t] : mu_t * peak;
      peak = std::max(decayed, rectified[t]);
    }

    for (Eigen::Index t = 0; t < num_frames; ++t) {
      trace.noise_floor(t, f) = floor[t];
      trace.rectified(t, f) = rectified[t];
      trace.rectified_floor(t, f) = rectified_floor[t];
      const bool excitation = column[t] >= config.floor_factor * floor[t];
      trace.output(t, f) = excitation
                               ? std::max(trace.masked(t, f), rectified_floor[t])
                               : rectified_floor[t];
    }
  }
  return trace;
}

MelEnergies NoiseSuppressAndMask(const MelEnergies& medium_power,
                                 const MediumTimeConfig& config) {
  MelEnergies out;
  out.values = NoiseSuppressAndMaskTrace(medium_power, config).output;
  return out;
}

TransferFunction WeightSmoothing(const MelEnergies& suppressed,
                                 const MelEnergies& medium_power,
                                 int halfwidth) {
  if (suppressed.values.rows() != medium_power.values.rows() ||
      suppressed.values.cols() != medium_power.values.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "suppressed and medium-time power differ in shape");
  }
  if (halfwidth < 0) {
    throw Error(ErrorCode::kInvalidParameter, "halfwidth must be >= 0");
  }
  const Matrix ratio = suppressed.values.array() /
                       medium_power.values.array().max(kDivisionGuard);
  const Eigen::Index num_channels = ratio.cols();
  TransferFunction transfer;
  transfer.values.resize(ratio.rows(), num_channels);
  for (Eigen::Index f = 0; f < num_channels; ++f) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, f - halfwidth);
    const Eigen::Index hi = std::min<Eigen::Index>(num_channels - 1, f + halfwidth);
    transfer.values.col(f) = ratio.middleCols(lo, hi - lo + 1).rowwise().sum() /
                             static_cast<double>(hi - lo + 1);
  }
  return transfer;
}

MelEnergies TimeFrequencyNormalize(const MelEnergies& energies,
                                   const TransferFunction& transfer) {
  if (energies.values.rows() != transfer.values.rows() ||
      energies.values.cols() != transfer.values.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "energies are " + std::to_string(energies.values.rows()) + "x" +
                    std::to_string(energies.values.cols()) +
                    ", transfer function is " +
                    std::to_string(transfer.values.rows()) + "x" +
                    std::to_string(transfer.values.cols()));
  }
  MelEnergies out;
  out.values = energies.values.cwiseProduct(transfer.values);
  return out;
}

MelEnergies ApplyMediumTime(const MelEnergies& energies,
                            const MediumTimeConfig& config) {
  config.Validate();
  const MelEnergies medium = MediumTimePower(energies, config.window_halfwidth);
  const MelEnergies suppressed =
      config.pass_through ? medium : NoiseSuppressAndMask(medium, config);
  const TransferFunction transfer =
      WeightSmoothing(suppressed, medium, config.smoothing_halfwidth);
  return TimeFrequencyNormalize(energies, transfer);
}

}  // namespace pncc
