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

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "pncc/audio_io.h"
#include "pncc/cepstral_pipeline.h"
#include "pncc/energy_norm.h"
#include "pncc/error.h"
#include "pncc/feature_io.h"
#include "pncc/metrics.h"
#include "pncc/spectral_frontend.h"

namespace py = pybind11;

namespace pncc {
namespace {

using Samples = py::array_t<double, py::array::c_style | py::array::forcecast>;

Waveform ToWaveform(const Samples& samples, int sample_rate_hz) {
  if (samples.ndim() != 1) throw Error(ErrorCode::kDimensionMismatch, "samples must be 1-D");
  Waveform wave;
  wave.samples.assign(samples.data(), samples.data() + samples.size());
  wave.sample_rate_hz = sample_rate_hz;
  return wave;
}

py::array_t<double> ToArray(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

PipelineConfig ToConfig(const std::optional<std::string>& text) {
  return text ? ParseConfigText(*text) : PipelineConfig{};
}

FeatureType ToFeatureType(const std::string& name) {
  const auto type = ParseFeatureType(name);
  if (!type) throw Error(ErrorCode::kInvalidParameter, "unknown feature type " + name);
  return *type;
}

std::vector<TrialScore> ToTrials(const std::vector<bool>& is_target,
                                 const std::vector<double>& scores) {
  if (is_target.size() != scores.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "labels and scores differ in length");
  }
  std::vector<TrialScore> trials(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    trials[i] = {is_target[i] ? TrialLabel::kTarget : TrialLabel::kNontarget, scores[i]};
  }
  return trials;
}

MelEnergies ToEnergies(const Matrix& values) { return MelEnergies{values}; }

}  // namespace
}  // namespace pncc

PYBIND11_MODULE(_core, m) {
  using namespace pncc;
  m.doc() = "Cepstral speech features and verification metrics.";

  py::register_exception<Error>(m, "PnccError", PyExc_ValueError);

  m.def("feature_types", [] {
    std::vector<std::string> names;
    for (FeatureType t : kAllFeatureTypes) names.emplace_back(FeatureTypeName(t));
    return names;
  });
  m.def("default_config_text", [] { return ConfigToText(PipelineConfig{}); });
  m.def("config_fingerprint",
        [](std::optional<std::string> config) { return ConfigFingerprint(ToConfig(config)); },
        py::arg("config") = py::none());

  m.def("load_wav",
        [](const std::filesystem::path& path, int expected_rate) {
          const Waveform wave = LoadWav(path, expected_rate);
          return py::make_tuple(ToArray(wave.samples), wave.sample_rate_hz);
        },
        py::arg("path"), py::arg("expected_rate") = kDefaultSampleRateHz);
  m.def("write_wav",
        [](const std::filesystem::path& path, const Samples& samples, int rate) {
          WriteWav16(path, ToWaveform(samples, rate));
        },
        py::arg("path"), py::arg("samples"), py::arg("sample_rate") = kDefaultSampleRateHz);
  m.def("synth_tone",
        [](double freq, double duration, int rate, double amplitude) {
          return ToArray(SynthTone(freq, duration, rate, amplitude).samples);
        },
        py::arg("freq_hz"), py::arg("duration_s"),
        py::arg("sample_rate") = kDefaultSampleRateHz, py::arg("amplitude") = 0.5);
  m.def("synth_noise",
        [](double duration, int rate, double amplitude, unsigned seed) {
          return ToArray(SynthNoise(duration, rate, amplitude, seed).samples);
        },
        py::arg("duration_s"), py::arg("sample_rate") = kDefaultSampleRateHz,
        py::arg("amplitude") = 0.5, py::arg("seed") = 0u);

  m.def("mel_filterbank",
        [](std::optional<std::string> config, int rate) {
          const Filterbank fb = BuildMelFilterbank(ToConfig(config).frontend, rate);
          return py::make_tuple(fb.weights, ToArray(fb.center_freqs_hz));
        },
        py::arg("config") = py::none(), py::arg("sample_rate") = kDefaultSampleRateHz);
  m.def("mel_energies",
        [](const Samples& samples, int rate, std::optional<std::string> config) {
          return ComputeMelEnergies(ToWaveform(samples, rate), ToConfig(config).frontend)
              .values;
        },
        py::arg("samples"), py::arg("sample_rate") = kDefaultSampleRateHz,
        py::arg("config") = py::none());
  m.def("extract",
        [](const Samples& samples, const std::string& feature, int rate,
           std::optional<std::string> config) {
          const Waveform wave = ToWaveform(samples, rate);
          const PipelineConfig cfg = ToConfig(config);
          py::gil_scoped_release release;
          return Extract(wave, ToFeatureType(feature), cfg).values;
        },
        py::arg("samples"), py::arg("feature") = "pncc",
        py::arg("sample_rate") = kDefaultSampleRateHz, py::arg("config") = py::none());
  m.def("apply_stages",
        [](const Matrix& energies, const std::string& feature,
           std::optional<std::string> config) {
          return ApplyStages(ToEnergies(energies), ToFeatureType(feature), ToConfig(config));
        },
        py::arg("energies"), py::arg("feature"), py::arg("config") = py::none());

  m.def("mean_power_normalize",
        [](const Matrix& energies, double lambda_mu, std::optional<double> mu_init) {
          MeanPowerConfig cfg;
          cfg.lambda_mu = lambda_mu;
          cfg.mu_init = mu_init;
          MeanPowerResult r = MeanPowerNormalizeWithTrace(ToEnergies(energies), cfg);
          return py::make_tuple(r.normalized.values, ToArray(r.mu));
        },
        py::arg("energies"), py::arg("lambda_mu") = MeanPowerConfig{}.lambda_mu,
        py::arg("mu_init") = py::none());
  m.def("pcen",
        [](const Matrix& energies, double alpha, double delta, double r, double epsilon,
           std::optional<double> s) {
          PcenConfig cfg;
          cfg.alpha = alpha;
          cfg.delta = delta;
          cfg.r = r;
          cfg.epsilon = epsilon;
          cfg.s = s;
          return Pcen(ToEnergies(energies), cfg).values;
        },
        py::arg("energies"), py::arg("alpha") = PcenConfig{}.alpha,
        py::arg("delta") = PcenConfig{}.delta, py::arg("r") = PcenConfig{}.r,
        py::arg("epsilon") = PcenConfig{}.epsilon, py::arg("s") = py::none());
  m.def("power_law",
        [](const Matrix& energies, double exponent) {
          return PowerLaw(ToEnergies(energies), exponent).values;
        },
        py::arg("energies"), py::arg("exponent") = PipelineConfig{}.power_exponent);
  m.def("dct_ii", &DctII, py::arg("values"), py::arg("num_ceps"));

  m.def("det_curve",
        [](const std::vector<bool>& is_target, const std::vector<double>& scores) {
          const DetCurve curve = ComputeDetCurve(ToTrials(is_target, scores));
          std::vector<double> th, miss, fa;
          for (const DetPoint& p : curve.points) {
            th.push_back(p.threshold);
            miss.push_back(p.p_miss);
            fa.push_back(p.p_fa);
          }
          return py::make_tuple(ToArray(th), ToArray(miss), ToArray(fa));
        },
        py::arg("is_target"), py::arg("scores"));
  m.def("eer",
        [](const std::vector<bool>& is_target, const std::vector<double>& scores) {
          return ComputeEer(ToTrials(is_target, scores));
        },
        py::arg("is_target"), py::arg("scores"));
  m.def("min_dcf",
        [](const std::vector<bool>& is_target, const std::vector<double>& scores,
           double p_target, double c_miss, double c_fa, bool normalize) {
          return ComputeMinDcf(ToTrials(is_target, scores),
                               DcfParams{p_target, c_miss, c_fa, normalize});
        },
        py::arg("is_target"), py::arg("scores"), py::arg("p_target") = 0.01,
        py::arg("c_miss") = 1.0, py::arg("c_fa") = 1.0, py::arg("normalize") = true);

  m.def("read_features",
        [](const std::filesystem::path& path) {
          const FeatureMatrix f = ReadFeatureFile(path);
          return py::make_tuple(f.values, std::string(FeatureTypeName(f.type)),
                                f.config_fingerprint);
        },
        py::arg("path"));
}
