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

#ifndef PNCC_SPECTRAL_FRONTEND_H_
#define PNCC_SPECTRAL_FRONTEND_H_

#include <optional>
#include <string_view>
#include <vector>

#include "pncc/audio_io.h"
#include "pncc/matrix.h"

namespace pncc {

enum class WindowType { kHamming, kHann, kRectangular };

std::string_view WindowTypeName(WindowType type);
std::optional<WindowType> ParseWindowType(std::string_view name);

struct FrontendConfig {
  double frame_length_ms = 25.0;
  double hop_ms = 10.0;
  double preemphasis = 0.97;
  WindowType window = WindowType::kHamming;
  int fft_size = 512;
  int num_filters = 60;
  double fmin_hz = 20.0;
  // Unset means the Nyquist frequency of the signal being processed.
  std::optional<double> fmax_hz;

  int FrameLengthSamples(int sample_rate_hz) const;
  int HopSamples(int sample_rate_hz) const;
  double UpperEdgeHz(int sample_rate_hz) const;

  // Throws kInvalidParameter when the configuration cannot be realized at
  // this sample rate.
  void Validate(int sample_rate_hz) const;
};

// |DFT|^2 of each windowed frame, bins 0..fft_size/2, unnormalized.
struct PowerSpectrogram {
  Matrix values;  // T x (fft_size / 2 + 1)
  int fft_size = 0;
  int hop_samples = 0;
  int sample_rate_hz = 0;
};

// Mel-integrated short-time energies E[t, f].
struct MelEnergies {
  Matrix values;  // T x num_filters

  Eigen::Index num_frames() const { return values.rows(); }
  Eigen::Index num_channels() const { return values.cols(); }
};

struct Filterbank {
  Matrix weights;  // num_filters x (fft_size / 2 + 1)
  std::vector<double> center_freqs_hz;
};

// m = 2595 log10(1 + f / 700).
double HzToMel(double hz);
double MelToHz(double mel);

std::vector<double> MakeWindow(WindowType type, int length);

// out[0] = in[0]; out[n] = in[n] - coeff * in[n - 1].
Waveform PreEmphasize(const Waveform& wave, double coeff);

// Number of full frames: 1 + floor((len - frame) / hop), or 0 if the signal
// is shorter than one frame.
int NumFrames(std::size_t num_samples, int frame_length, int hop);

// Windowed T x N frame matrix. Throws kInputTooShort when the waveform holds
// fewer samples than one frame.
Matrix FrameSignal(const Waveform& wave, const FrontendConfig& config);

// Zero-pads each frame to fft_size.
PowerSpectrogram PowerSpectrum(const Matrix& frames, int fft_size,
                               int hop_samples = 0, int sample_rate_hz = 0);

// Triangular filters with centers equally spaced in mel between fmin and
// fmax. Throws kDegenerateFilter if a triangle covers no FFT bin.
Filterbank BuildMelFilterbank(const FrontendConfig& config, int sample_rate_hz);

MelEnergies ApplyFilterbank(const PowerSpectrogram& spectrogram,
                            const Filterbank& filterbank);

// Pre-emphasis, framing, power spectrum and mel integration in one call.
MelEnergies ComputeMelEnergies(const Waveform& wave,
                               const FrontendConfig& config);

}  // namespace pncc

#endif  // PNCC_SPECTRAL_FRONTEND_H_
