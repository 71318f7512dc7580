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

#include "pncc/cepstral_pipeline.h"

#include <cmath>
#include <numbers>

#include "pncc/error.h"

namespace pncc {

std::string_view FeatureTypeName(FeatureType type) {
  switch (type) {
    case FeatureType::kMfcc:
      return "mfcc";
    case FeatureType::kPncc:
      return "pncc";
    case FeatureType::kSpncc:
      return "spncc";
    case FeatureType::kCpncc:
      return "cpncc";
    case FeatureType::kScpncc:
      return "scpncc";
  }
  return "unknown";
}

std::optional<FeatureType> ParseFeatureType(std::string_view name) {
  for (FeatureType type : kAllFeatureTypes) {
    if (FeatureTypeName(type) == name) return type;
  }
  return std::nullopt;
}

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kLogCompress:
      return "log";
    case Stage::kMediumTimePower:
      return "medium_time_power";
    case Stage::kNoiseSuppressAndMask:
      return "noise_suppress_mask";
    case Stage::kWeightSmoothing:
      return "weight_smoothing";
    case Stage::kTimeFrequencyNormalize:
      return "tf_normalize";
    case Stage::kMeanPowerNormalize:
      return "mean_power";
    case Stage::kPowerLaw:
      return "power_law";
    case Stage::kPcen:
      return "pcen";
    case Stage::kDct:
      return "dct";
  }
  return "unknown";
}

std::vector<Stage> StageList(FeatureType type) {
  switch (type) {
    case FeatureType::kMfcc:
      return {Stage::kLogCompress, Stage::kDct};
    case FeatureType::kPncc:
      return {Stage::kMediumTimePower, Stage::kNoiseSuppressAndMask,
              Stage::kWeightSmoothing, Stage::kTimeFrequencyNormalize,
              Stage::kMeanPowerNormalize, Stage::kPowerLaw, Stage::kDct};
    case FeatureType::kSpncc:
      return {Stage::kMeanPowerNormalize, Stage::kPowerLaw, Stage::kDct};
    case FeatureType::kCpncc:
      return {Stage::kMeanPowerNormalize, Stage::kPcen, Stage::kDct};
    case FeatureType::kScpncc:
      return {Stage::kPcen, Stage::kDct};
  }
  throw Error(ErrorCode::kInvalidParameter, "unknown feature type");
}

std::string StageFingerprint(FeatureType type) {
  std::string out;
  for (Stage stage : StageList(type)) {
    if (!out.empty()) out += '>';
    out += StageName(stage);
  }
  return out;
}

void PipelineConfig::Validate(int sample_rate_hz) const {
  frontend.Validate(sample_rate_hz);
  medium_time.Validate();
  mean_power.Validate();
  pcen.Validate();
  if (num_ceps < 1 || num_ceps > frontend.num_filters) {
    throw Error(ErrorCode::kInvalidParameter,
                "num_ceps must lie in [1, num_filters]");
  }
  if (!(power_exponent > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "power_exponent must be positive");
  }
}

Matrix DctBasis(int num_channels, int num_ceps) {
  if (num_channels < 1 || num_ceps < 1 || num_ceps > num_channels) {
    throw Error(ErrorCode::kInvalidParameter,
                "DCT needs 1 <= num_ceps <= num_channels");
  }
  Matrix basis(num_ceps, num_channels);
  const double w0 = std::sqrt(1.0 / num_channels);
  const double wn = std::sqrt(2.0 / num_channels);
  for (int n = 0; n < num_ceps; ++n) {
    const double w = n == 0 ? w0 : wn;
    for (int f = 0; f < num_channels; ++f) {
      basis(n, f) =
          w * std::cos(std::numbers::pi * n * (2.0 * f + 1.0) / (2.0 * num_channels));
    }
  }
  return basis;
}

Matrix DctII(const Matrix& input, int num_ceps) {
  const Matrix basis = DctBasis(static_cast<int>(input.cols()), num_ceps);
  return input * basis.transpose();
}

Matrix ApplyStages(const MelEnergies& energies, FeatureType type,
                   const PipelineConfig& config) {
  MelEnergies current = energies;
  Matrix log_energies;
  bool have_log = false;
  for (Stage stage : StageList(type)) {
    switch (stage) {
      case Stage::kLogCompress:
        log_energies = LogCompress(current);
        have_log = true;
        break;
      case Stage::kMediumTimePower:
        // The four medium-time stages share intermediates, so they run as
        // one unit here and the remaining three entries are no-ops.
        current = ApplyMediumTime(current, config.medium_time);
        break;
      case Stage::kNoiseSuppressAndMask:
      case Stage::kWeightSmoothing:
      case Stage::kTimeFrequencyNormalize:
        break;
      case Stage::kMeanPowerNormalize:
        current = MeanPowerNormalize(current, config.mean_power);
        break;
      case Stage::kPowerLaw:
        current = PowerLaw(current, config.power_exponent);
        break;
      case Stage::kPcen:
        current = Pcen(current, config.pcen);
        break;
      case Stage::kDct:
        if (config.apply_dct) {
          return DctII(have_log ? log_energies : current.values, config.num_ceps);
        }
        break;
    }
  }
  return have_log ? log_energies : current.values;
}

FeatureMatrix Extract(const Waveform& wave, FeatureType type,
                      const PipelineConfig& config) {
  ValidateWaveform(wave);
  config.Validate(wave.sample_rate_hz);
  FeatureMatrix features;
  features.type = type;
  features.config_fingerprint = ConfigFingerprint(config);
  features.values =
      ApplyStages(ComputeMelEnergies(wave, config.frontend), type, config);
  return features;
}

}  // namespace pncc
