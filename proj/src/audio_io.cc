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

#include "pncc/audio_io.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <string>

#include "pncc/error.h"

namespace pncc {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t ReadU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t ReadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void PutU16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

struct FormatChunk {
  std::uint16_t audio_format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

void WriteContainer(const std::filesystem::path& path, const Waveform& wave,
                    std::uint16_t format, std::uint16_t bits,
                    const std::string& data) {
  std::string out;
  out.reserve(44 + data.size());
  out += "RIFF";
  PutU32(out, static_cast<std::uint32_t>(36 + data.size()));
  out += "WAVEfmt ";
  PutU32(out, 16);
  PutU16(out, format);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(wave.sample_rate_hz));
  PutU32(out, static_cast<std::uint32_t>(wave.sample_rate_hz * bits / 8));
  PutU16(out, static_cast<std::uint16_t>(bits / 8));
  PutU16(out, bits);
  out += "data";
  PutU32(out, static_cast<std::uint32_t>(data.size()));
  out += data;

  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

}  // namespace

void ValidateWaveform(const Waveform& wave) {
  if (wave.sample_rate_hz <= 0) {
    throw Error(ErrorCode::kInvalidParameter, "sample rate must be positive");
  }
  if (wave.samples.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "waveform is empty");
  }
  if (!std::all_of(wave.samples.begin(), wave.samples.end(),
                   [](double x) { return std::isfinite(x); })) {
    throw Error(ErrorCode::kInvalidParameter, "waveform has non-finite samples");
  }
}

Waveform LoadWav(const std::filesystem::path& path, int expected_rate_hz) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kNotFound, path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                        std::istreambuf_iterator<char>());

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                path.string() + ": not a RIFF/WAVE file");
  }

  FormatChunk fmt;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::size_t size = ReadU32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > available) {
        throw Error(ErrorCode::kUnsupportedEncoding,
                    path.string() + ": truncated fmt chunk");
      }
      const std::uint8_t* p = bytes.data() + body;
      fmt.audio_format = ReadU16(p);
      fmt.channels = ReadU16(p + 2);
      fmt.sample_rate = ReadU32(p + 4);
      fmt.bits_per_sample = ReadU16(p + 14);
      if (fmt.audio_format == kFormatExtensible && size >= 26) {
        // First two bytes of the sub-format GUID carry the real format tag.
        fmt.audio_format = ReadU16(p + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      // Streaming writers sometimes leave the size field unset.
      data_size = std::min(size, available);
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt || data == nullptr) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                path.string() + ": missing fmt or data chunk");
  }

  const bool pcm16 = fmt.audio_format == kFormatPcm && fmt.bits_per_sample == 16;
  const bool float32 =
      fmt.audio_format == kFormatFloat && fmt.bits_per_sample == 32;
  if (!pcm16 && !float32) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                path.string() + ": format " + std::to_string(fmt.audio_format) +
                    " with " + std::to_string(fmt.bits_per_sample) +
                    " bits per sample");
  }
  if (fmt.channels != 1) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                path.string() + ": " + std::to_string(fmt.channels) +
                    " channels, expected mono");
  }
  if (static_cast<int>(fmt.sample_rate) != expected_rate_hz) {
    throw Error(ErrorCode::kSampleRateMismatch,
                path.string() + ": " + std::to_string(fmt.sample_rate) +
                    " Hz, expected " + std::to_string(expected_rate_hz));
  }

  Waveform wave;
  wave.sample_rate_hz = expected_rate_hz;
  if (pcm16) {
    const std::size_t n = data_size / 2;
    wave.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::int16_t>(ReadU16(data + 2 * i));
      wave.samples[i] = v / 32768.0;
    }
  } else {
    const std::size_t n = data_size / 4;
    const double upper = std::nextafter(1.0, 0.0);
    wave.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const float v = std::bit_cast<float>(ReadU32(data + 4 * i));
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kMalformedInput,
                    path.string() + ": non-finite float sample");
      }
      wave.samples[i] = std::clamp(static_cast<double>(v), -1.0, upper);
    }
  }
  return wave;
}

void WriteWav16(const std::filesystem::path& path, const Waveform& wave) {
  std::string data;
  data.reserve(wave.size() * 2);
  for (double x : wave.samples) {
    const double scaled = std::clamp(std::round(x * 32768.0), -32768.0, 32767.0);
    PutU16(data, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
  }
  WriteContainer(path, wave, kFormatPcm, 16, data);
}

void WriteWavFloat(const std::filesystem::path& path, const Waveform& wave) {
  std::string data;
  data.reserve(wave.size() * 4);
  for (double x : wave.samples) {
    PutU32(data, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
  }
  WriteContainer(path, wave, kFormatFloat, 32, data);
}

Waveform SynthTone(double freq_hz, double duration_s, int sample_rate_hz,
                   double amplitude) {
  if (sample_rate_hz <= 0) {
    throw Error(ErrorCode::kInvalidParameter, "sample rate must be positive");
  }
  if (!(freq_hz > 0.0 && freq_hz < sample_rate_hz / 2.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "tone frequency must lie in (0, sample_rate / 2)");
  }
  if (!(amplitude > 0.0 && amplitude <= 0.999)) {
    throw Error(ErrorCode::kInvalidParameter, "amplitude must lie in (0, 0.999]");
  }
  if (!(duration_s > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "duration must be positive");
  }
  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
  Waveform wave;
  wave.sample_rate_hz = sample_rate_hz;
  wave.samples.resize(n);
  const double step = 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
  for (std::size_t i = 0; i < n; ++i) {
    wave.samples[i] = amplitude * std::sin(step * static_cast<double>(i));
  }
  return wave;
}

Waveform SynthNoise(double duration_s, int sample_rate_hz, double amplitude,
                    unsigned seed) {
  if (sample_rate_hz <= 0 || !(duration_s > 0.0) ||
      !(amplitude > 0.0 && amplitude <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "bad noise parameters");
  }
  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  Waveform wave;
  wave.sample_rate_hz = sample_rate_hz;
  wave.samples.resize(n);
  for (double& x : wave.samples) x = dist(gen);
  return wave;
}

}  // namespace pncc
