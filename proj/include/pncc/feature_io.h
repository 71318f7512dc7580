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

#ifndef PNCC_FEATURE_IO_H_
#define PNCC_FEATURE_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include "pncc/cepstral_pipeline.h"

namespace pncc {

// Binary feature file, all integers little-endian:
//   "FEAT" | u8 version (1) | u8 feature type | u32 rows | u32 cols |
//   u64 config fingerprint | rows * cols f32, row-major
inline constexpr std::uint8_t kFeatFormatVersion = 1;
inline constexpr std::size_t kFeatHeaderBytes = 22;

std::string EncodeFeatures(const FeatureMatrix& features);
FeatureMatrix DecodeFeatures(const std::string& bytes);

void WriteFeatureFile(const std::filesystem::path& path,
                      const FeatureMatrix& features);
FeatureMatrix ReadFeatureFile(const std::filesystem::path& path);

// One frame per line, comma-separated, %.9g of the float32 value.
std::string EncodeFeaturesCsv(const FeatureMatrix& features);

// Binary PGM (P5) of a T x F matrix: width T, height F, low channels at the
// bottom, min-max scaled to 0..255. A constant matrix renders all zero.
std::string RenderPgm(const Matrix& values);

}  // namespace pncc

#endif  // PNCC_FEATURE_IO_H_
