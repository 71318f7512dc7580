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

#include "pncc/feature_io.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

#include "pncc/error.h"

namespace pncc {
namespace {

template <typename T>
void PutLittleEndian(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
  }
}

template <typename T>
T GetLittleEndian(const std::string& bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(static_cast<unsigned char>(bytes[offset + i]))
             << (8 * i);
  }
  return value;
}

void WriteBytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

}  // namespace

std::string EncodeFeatures(const FeatureMatrix& features) {
  const auto rows = static_cast<std::uint32_t>(features.values.rows());
  const auto cols = static_cast<std::uint32_t>(features.values.cols());
  std::string out = "FEAT";
  out.reserve(kFeatHeaderBytes + 4ULL * rows * cols);
  out.push_back(static_cast<char>(kFeatFormatVersion));
  out.push_back(static_cast<char>(features.type));
  PutLittleEndian<std::uint32_t>(out, rows);
  PutLittleEndian<std::uint32_t>(out, cols);
  PutLittleEndian<std::uint64_t>(out, features.config_fingerprint);
  for (std::uint32_t t = 0; t < rows; ++t) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const auto v = static_cast<float>(features.values(t, c));
      PutLittleEndian<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
    }
  }
  return out;
}

FeatureMatrix DecodeFeatures(const std::string& bytes) {
  if (bytes.size() < kFeatHeaderBytes || bytes.compare(0, 4, "FEAT") != 0) {
    throw Error(ErrorCode::kMalformedInput, "missing FEAT header");
  }
  const auto version = static_cast<std::uint8_t>(bytes[4]);
  if (version != kFeatFormatVersion) {
    throw Error(ErrorCode::kMalformedInput,
                "unsupported FEAT version " + std::to_string(version));
  }
  const auto type = static_cast<std::uint8_t>(bytes[5]);
  if (type >= kAllFeatureTypes.size()) {
    throw Error(ErrorCode::kMalformedInput,
                "unknown feature type byte " + std::to_string(type));
  }
  const auto rows = GetLittleEndian<std::uint32_t>(bytes, 6);
  const auto cols = GetLittleEndian<std::uint32_t>(bytes, 10);
  const std::uint64_t expected = kFeatHeaderBytes + 4ULL * rows * cols;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::kMalformedInput,
                "FEAT payload is " + std::to_string(bytes.size()) +
                    " bytes, header implies " + std::to_string(expected));
  }
  FeatureMatrix features;
  features.type = static_cast<FeatureType>(type);
  features.config_fingerprint = GetLittleEndian<std::uint64_t>(bytes, 14);
  features.values.resize(rows, cols);
  std::size_t offset = kFeatHeaderBytes;
  for (std::uint32_t t = 0; t < rows; ++t) {
    for (std::uint32_t c = 0; c < cols; ++c, offset += 4) {
      features.values(t, c) =
          std::bit_cast<float>(GetLittleEndian<std::uint32_t>(bytes, offset));
    }
  }
  return features;
}

void WriteFeatureFile(const std::filesystem::path& path,
                      const FeatureMatrix& features) {
  WriteBytes(path, EncodeFeatures(features));
}

FeatureMatrix ReadFeatureFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kNotFound, path.string());
  const std::string bytes((std::istreambuf_iterator<char>(file)),
                          std::istreambuf_iterator<char>());
  return DecodeFeatures(bytes);
}

std::string EncodeFeaturesCsv(const FeatureMatrix& features) {
  std::string out;
  char buf[32];
  for (Eigen::Index t = 0; t < features.values.rows(); ++t) {
    for (Eigen::Index c = 0; c < features.values.cols(); ++c) {
      if (c > 0) out += ',';
      std::snprintf(buf, sizeof(buf), "%.9g",
                    static_cast<double>(static_cast<float>(features.values(t, c))));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string RenderPgm(const Matrix& values) {
  const auto width = values.rows();
  const auto height = values.cols();
  std::string out = "P5\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n255\n";
  if (width == 0 || height == 0) return out;
  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  const double range = hi - lo;
  const std::size_t header = out.size();
  out.resize(header + static_cast<std::size_t>(width * height), '\0');
  if (!(range > 0.0) || !std::isfinite(range)) return out;
  for (Eigen::Index y = 0; y < height; ++y) {
    const Eigen::Index channel = height - 1 - y;
    for (Eigen::Index x = 0; x < width; ++x) {
      const double level = std::round(255.0 * (values(x, channel) - lo) / range);
      out[header + static_cast<std::size_t>(y * width + x)] =
          static_cast<char>(static_cast<unsigned char>(level));
    }
  }
  return out;
}

}  // namespace pncc
