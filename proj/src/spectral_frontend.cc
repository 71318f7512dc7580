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

#include "pncc/spectral_frontend.h"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "pncc/error.h"

namespace pncc {
namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

class RealFft {
 public:
  explicit RealFft(int size) : size_(size) {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    in_ = fftw_alloc_real(static_cast<std::size_t>(size));
    out_ = fftw_alloc_complex(static_cast<std::size_t>(size / 2 + 1));
    // ESTIMATE keeps the chosen algorithm, and hence the rounding, identical
    // from run to run.
    plan_ = fftw_plan_dft_r2c_1d(size, in_, out_, FFTW_ESTIMATE);
  }

  ~RealFft() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  double* input() { return in_; }

  // Writes |X_k|^2 for k = 0..size/2 into `power`.
  template <typename Row>
  void PowerInto(Row&& power) {
    fftw_execute(plan_);
    for (int k = 0; k <= size_ / 2; ++k) {
      power(k) = out_[k][0] * out_[k][0] + out_[k][1] * out_[k][1];
    }
  }

 private:
  int size_;
  double* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

bool IsPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string_view WindowTypeName(WindowType type) {
  switch (type) {
    case WindowType::kHamming:
      return "hamming";
    case WindowType::kHann:
      return "hann";
    case WindowType::kRectangular:
      return "rectangular";
  }
  return "unknown";
}

std::optional<WindowType> ParseWindowType(std::string_view name) {
  if (name == "hamming") return WindowType::kHamming;
  if (name == "hann") return WindowType::kHann;
  if (name == "rectangular") return WindowType::kRectangular;
  return std::nullopt;
}

int FrontendConfig::FrameLengthSamples(int sample_rate_hz) const {
  return static_cast<int>(std::lround(frame_length_ms * sample_rate_hz / 1000.0));
}

int FrontendConfig::HopSamples(int sample_rate_hz) const {
  return static_cast<int>(std::lround(hop_ms * sample_rate_hz / 1000.0));
}

double FrontendConfig::UpperEdgeHz(int sample_rate_hz) const {
  return fmax_hz.value_or(sample_rate_hz / 2.0);
}

void FrontendConfig::Validate(int sample_rate_hz) const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidParameter, what);
  };
  if (sample_rate_hz <= 0) fail("sample rate must be positive");
  if (!IsPowerOfTwo(fft_size)) fail("fft_size must be a power of two");
  const int frame = FrameLengthSamples(sample_rate_hz);
  if (frame < 1) fail("frame length must cover at least one sample");
  if (frame > fft_size) {
    fail("frame of " + std::to_string(frame) + " samples exceeds fft_size " +
         std::to_string(fft_size));
  }
  if (HopSamples(sample_rate_hz) < 1) fail("hop must cover at least one sample");
  if (!(preemphasis >= 0.0 && preemphasis < 1.0)) {
    fail("preemphasis must lie in [0, 1)");
  }
  if (num_filters < 2) fail("num_filters must be at least 2");
  const double fmax = UpperEdgeHz(sample_rate_hz);
  if (!(fmin_hz >= 0.0 && fmin_hz < fmax && fmax <= sample_rate_hz / 2.0)) {
    fail("need 0 <= fmin < fmax <= sample_rate / 2");
  }
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> MakeWindow(WindowType type, int length) {
  std::vector<double> window(static_cast<std::size_t>(length), 1.0);
  if (length < 2 || type == WindowType::kRectangular) return window;
  const double a0 = type == WindowType::kHamming ? 0.54 : 0.5;
  const double a1 = 1.0 - a0;
  for (int n = 0; n < length; ++n) {
    window[n] = a0 - a1 * std::cos(2.0 * std::numbers::pi * n / (length - 1));
  }
  return window;
}

Waveform PreEmphasize(const Waveform& wave, double coeff) {
  if (!(coeff >= 0.0 && coeff < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "preemphasis must lie in [0, 1)");
  }
  Waveform out;
  out.sample_rate_hz = wave.sample_rate_hz;
  out.samples.resize(wave.size());
  if (wave.samples.empty()) return out;
  out.samples[0] = wave.samples[0];
  for (std::size_t n = 1; n < wave.size(); ++n) {
    out.samples[n] = wave.samples[n] - coeff * wave.samples[n - 1];
  }
  return out;
}

int NumFrames(std::size_t num_samples, int frame_length, int hop) {
  if (frame_length <= 0 || hop <= 0 ||
      num_samples < static_cast<std::size_t>(frame_length)) {
    return 0;
  }
  return 1 + static_cast<int>((num_samples - frame_length) / hop);
}

Matrix FrameSignal(const Waveform& wave, const FrontendConfig& config) {
  const int frame = config.FrameLengthSamples(wave.sample_rate_hz);
  const int hop = config.HopSamples(wave.sample_rate_hz);
  const int num_frames = NumFrames(wave.size(), frame, hop);
  if (num_frames == 0) {
    throw Error(ErrorCode::kInputTooShort,
                std::to_string(wave.size()) + " samples, need at least " +
                    std::to_string(frame));
  }
  const std::vector<double> window = MakeWindow(config.window, frame);
  Matrix frames(num_frames, frame);
  for (int t = 0; t < num_frames; ++t) {
    const double* src = wave.samples.data() + static_cast<std::size_t>(t) * hop;
    for (int n = 0; n < frame; ++n) frames(t, n) = src[n] * window[n];
  }
  return frames;
}

PowerSpectrogram PowerSpectrum(const Matrix& frames, int fft_size,
                               int hop_samples, int sample_rate_hz) {
  if (!IsPowerOfTwo(fft_size)) {
    throw Error(ErrorCode::kInvalidParameter, "fft_size must be a power of two");
  }
  if (frames.cols() > fft_size) {
    throw Error(ErrorCode::kDimensionMismatch, "frame longer than fft_size");
  }
  PowerSpectrogram spec;
  spec.fft_size = fft_size;
  spec.hop_samples = hop_samples;
  spec.sample_rate_hz = sample_rate_hz;
  spec.values.resize(frames.rows(), fft_size / 2 + 1);
  if (frames.rows() == 0) return spec;

  RealFft fft(fft_size);
  double* in = fft.input();
  for (Eigen::Index t = 0; t < frames.rows(); ++t) {
    for (Eigen::Index n = 0; n < frames.cols(); ++n) in[n] = frames(t, n);
    for (Eigen::Index n = frames.cols(); n < fft_size; ++n) in[n] = 0.0;
    fft.PowerInto(spec.values.row(t));
  }
  return spec;
}

Filterbank BuildMelFilterbank(const FrontendConfig& config, int sample_rate_hz) {
  config.Validate(sample_rate_hz);
  const int num_filters = config.num_filters;
  const int num_bins = config.fft_size / 2 + 1;
  const double mel_lo = HzToMel(config.fmin_hz);
  const double mel_hi = HzToMel(config.UpperEdgeHz(sample_rate_hz));
  const double mel_step = (mel_hi - mel_lo) / (num_filters + 1);

  std::vector<double> edges_hz(static_cast<std::size_t>(num_filters) + 2);
  for (int i = 0; i < num_filters + 2; ++i) {
    edges_hz[i] = MelToHz(mel_lo + i * mel_step);
  }

  Filterbank fb;
  fb.weights = Matrix::Zero(num_filters, num_bins);
  fb.center_freqs_hz.assign(edges_hz.begin() + 1, edges_hz.end() - 1);
  const double bin_hz = static_cast<double>(sample_rate_hz) / config.fft_size;
  for (int f = 0; f < num_filters; ++f) {
    const double left = edges_hz[f];
    const double center = edges_hz[f + 1];
    const double right = edges_hz[f + 2];
    bool covered = false;
    for (int k = 0; k < num_bins; ++k) {
      const double hz = k * bin_hz;
      double w = 0.0;
      if (hz > left && hz <= center) {
        w = (hz - left) / (center - left);
      } else if (hz > center && hz < right) {
        w = (right - hz) / (right - center);
      }
      if (w > 0.0) {
        fb.weights(f, k) = w;
        covered = true;
      }
    }
    if (!covered) {
      throw Error(ErrorCode::kDegenerateFilter,
                  "filter " + std::to_string(f) + " centred at " +
                      std::to_string(center) +
                      " Hz covers no FFT bin; increase fft_size or reduce "
                      "num_filters");
    }
  }
  return fb;
}

MelEnergies ApplyFilterbank(const PowerSpectrogram& spectrogram,
                            const Filterbank& filterbank) {
  if (spectrogram.values.cols() != filterbank.weights.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "spectrogram has " + std::to_string(spectrogram.values.cols()) +
                    " bins, filterbank expects " +
                    std::to_string(filterbank.weights.cols()));
  }
  MelEnergies mel;
  mel.values = spectrogram.values * filterbank.weights.transpose();
  return mel;
}

MelEnergies ComputeMelEnergies(const Waveform& wave,
                               const FrontendConfig& config) {
  ValidateWaveform(wave);
  const Filterbank fb = BuildMelFilterbank(config, wave.sample_rate_hz);
  const Waveform emphasized = PreEmphasize(wave, config.preemphasis);
  const Matrix frames = FrameSignal(emphasized, config);
  const PowerSpectrogram spec =
      PowerSpectrum(frames, config.fft_size,
                    config.HopSamples(wave.sample_rate_hz), wave.sample_rate_hz);
  return ApplyFilterbank(spec, fb);
}

}  // namespace pncc
