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

#ifndef PNCC_AUDIO_IO_H_
#define PNCC_AUDIO_IO_H_

#include <filesystem>
#include <span>
#include <vector>

namespace pncc {

inline constexpr int kDefaultSampleRateHz = 16000;

// Mono PCM signal. Samples loaded from disk or synthesized lie in [-1, 1);
// downstream stages only require them to be finite, so scaled copies of a
// waveform remain valid pipeline input.
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = kDefaultSampleRateHz;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// Checks the invariants every pipeline entry point relies on: non-empty,
// positive sample rate, finite samples. Throws kInvalidParameter.
void ValidateWaveform(const Waveform& wave);

// Reads a RIFF/WAVE file holding mono 16-bit PCM or 32-bit IEEE float
// samples at `expected_rate_hz`. 16-bit samples are scaled by 1/32768;
// float samples outside [-1, 1) are clamped into range. No resampling is
// performed: any other rate raises kSampleRateMismatch.
Waveform LoadWav(const std::filesystem::path& path,
                 int expected_rate_hz = kDefaultSampleRateHz);

// Writes mono 16-bit PCM. Samples are rounded to the nearest step of 1/32768
// and saturated to the int16 range.
void WriteWav16(const std::filesystem::path& path, const Waveform& wave);

// Writes mono 32-bit IEEE float.
void WriteWavFloat(const std::filesystem::path& path, const Waveform& wave);

// amplitude * sin(2 pi f n / sr) for n in [0, round(duration * sr)).
Waveform SynthTone(double freq_hz, double duration_s, int sample_rate_hz,
                   double amplitude);

// Uniform white noise in [-amplitude, amplitude) from a seeded generator.
Waveform SynthNoise(double duration_s, int sample_rate_hz, double amplitude,
                    unsigned seed);

}  // namespace pncc

#endif  // PNCC_AUDIO_IO_H_
