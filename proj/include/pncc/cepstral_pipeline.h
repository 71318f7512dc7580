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

#ifndef PNCC_CEPSTRAL_PIPELINE_H_
#define PNCC_CEPSTRAL_PIPELINE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pncc/audio_io.h"
#include "pncc/energy_norm.h"
#include "pncc/matrix.h"
#include "pncc/medium_time.h"
#include "pncc/spectral_frontend.h"

namespace pncc {

enum class FeatureType : std::uint8_t {
  kMfcc = 0,
  kPncc = 1,
  kSpncc = 2,
  kCpncc = 3,
  kScpncc = 4,
};

inline constexpr std::array<FeatureType, 5> kAllFeatureTypes = {
    FeatureType::kMfcc, FeatureType::kPncc, FeatureType::kSpncc,
    FeatureType::kCpncc, FeatureType::kScpncc};

// Lower-case names as used on the command line ("mfcc", "pncc", ...).
std::string_view FeatureTypeName(FeatureType type);
std::optional<FeatureType> ParseFeatureType(std::string_view name);

enum class Stage {
  kLogCompress,
  kMediumTimePower,
  kNoiseSuppressAndMask,
  kWeightSmoothing,
  kTimeFrequencyNormalize,
  kMeanPowerNormalize,
  kPowerLaw,
  kPcen,
  kDct,
};

std::string_view StageName(Stage stage);

// Stages applied after mel integration, in order. The trailing kDct is
// skipped when PipelineConfig::apply_dct is false.
std::vector<Stage> StageList(FeatureType type);

// Stage names joined with '>' (e.g. "mean_power>power_law>dct").
std::string StageFingerprint(FeatureType type);

struct PipelineConfig {
  FrontendConfig frontend;
  MediumTimeConfig medium_time;
  MeanPowerConfig mean_power;
  PcenConfig pcen;
  int num_ceps = 30;
  double power_exponent = 1.0 / 15.0;
  bool apply_dct = true;

  void Validate(int sample_rate_hz) const;
};

// Flat "section.key = value" text, one line per field, in a fixed order.
std::string ConfigToText(const PipelineConfig& config);

// Parses the format written by ConfigToText. Keys may appear in any order
// and any subset; missing keys keep their defaults. Blank lines and '#'
// comments are ignored. Unknown keys and unparsable values raise
// kMalformedInput naming the line.
PipelineConfig ParseConfigText(std::string_view text);

// 64-bit FNV-1a hash of ConfigToText(config).
std::uint64_t ConfigFingerprint(const PipelineConfig& config);

struct FeatureMatrix {
  Matrix values;  // T x num_ceps, or T x num_filters without the DCT
  FeatureType type = FeatureType::kMfcc;
  std::uint64_t config_fingerprint = 0;
};

// Orthonormal DCT-II of every row, first `num_ceps` coefficients:
//   c[n] = w(n) sum_f x[f] cos(pi n (2f + 1) / (2F)),
//   w(0) = sqrt(1/F), w(n > 0) = sqrt(2/F).
Matrix DctII(const Matrix& input, int num_ceps);

// num_ceps x F orthonormal DCT-II basis (rows are basis vectors).
Matrix DctBasis(int num_channels, int num_ceps);

// Applies the stage list of `type` to mel energies.
Matrix ApplyStages(const MelEnergies& energies, FeatureType type,
                   const PipelineConfig& config);

FeatureMatrix Extract(const Waveform& wave, FeatureType type,
                      const PipelineConfig& config);

}  // namespace pncc

#endif  // PNCC_CEPSTRAL_PIPELINE_H_
