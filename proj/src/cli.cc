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

#include "pncc/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "pncc/audio_io.h"
#include "pncc/error.h"
#include "pncc/feature_io.h"

namespace pncc {
namespace {

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kNotFound, path.string());
  return std::string((std::istreambuf_iterator<char>(file)),
                     std::istreambuf_iterator<char>());
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool IsWavPath(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".wav";
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> FeatureTypeNames() {
  std::vector<std::string> names;
  for (FeatureType type : kAllFeatureTypes) {
    names.emplace_back(FeatureTypeName(type));
  }
  return names;
}

struct ExtractOptions {
  std::string feature;
  std::string input;
  std::string out_dir;
  std::string config;
  std::string format = "bin";
  bool no_dct = false;
  int jobs = 1;
};

struct RenderOptions {
  std::string feature;
  std::string input;
  std::string output;
  std::string config;
};

struct EvalOptions {
  std::string scores;
  double p_target = 0.01;
  double c_miss = 1.0;
  double c_fa = 1.0;
  std::string det;
};

PipelineConfig ResolveConfig(const std::string& config_path) {
  return config_path.empty() ? PipelineConfig{} : LoadConfigFile(config_path);
}

int RunExtract(const ExtractOptions& opts, std::ostream& out, std::ostream& err) {
  const FeatureType type = *ParseFeatureType(opts.feature);
  std::vector<ExtractJob> manifest;
  PipelineConfig config;
  try {
    config = ResolveConfig(opts.config);
    if (opts.no_dct) config.apply_dct = false;
    config.Validate(kDefaultSampleRateHz);
    const std::filesystem::path in(opts.input);
    const std::vector<std::filesystem::path> inputs =
        IsWavPath(in) ? std::vector<std::filesystem::path>{in}
                      : ReadInputList(in);
    manifest = BuildManifest(inputs, opts.out_dir,
                             opts.format == "csv" ? ".csv" : ".feat");
    std::filesystem::create_directories(opts.out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  std::vector<std::optional<std::string>> failures(manifest.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < manifest.size();
         i = next.fetch_add(1)) {
      try {
        const Waveform wave = LoadWav(manifest[i].input);
        const FeatureMatrix features = Extract(wave, type, config);
        if (opts.format == "csv") {
          WriteTextFile(manifest[i].output, EncodeFeaturesCsv(features));
        } else {
          WriteFeatureFile(manifest[i].output, features);
        }
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const std::size_t num_workers =
      std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), manifest.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < num_workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::size_t failed = 0;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    if (failures[i]) {
      ++failed;
      err << manifest[i].input.string() << ": " << *failures[i] << "\n";
    }
  }
  out << "extracted " << manifest.size() - failed << " of " << manifest.size()
      << " files (" << opts.feature << ")\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int RunRender(const RenderOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    PipelineConfig config = ResolveConfig(opts.config);
    config.apply_dct = false;
    const Waveform wave = LoadWav(opts.input);
    const FeatureMatrix features =
        Extract(wave, *ParseFeatureType(opts.feature), config);
    WriteTextFile(opts.output, RenderPgm(features.values));
    out << "wrote " << features.values.rows() << "x" << features.values.cols()
        << " image to " << opts.output << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int RunEval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<TrialScore> trials = ParseScoreText(ReadTextFile(opts.scores));
    const DetCurve curve = ComputeDetCurve(trials);
    DcfParams params;
    params.p_target = opts.p_target;
    params.c_miss = opts.c_miss;
    params.c_fa = opts.c_fa;
    const double eer = EerFromCurve(curve);
    const double min_dcf = MinDcfFromCurve(curve, params);
    if (!opts.det.empty()) {
      std::string csv = "threshold,p_miss,p_fa\n";
      for (const DetPoint& p : curve.points) {
        csv += FormatDouble(p.threshold) + "," + FormatDouble(p.p_miss) + "," +
               FormatDouble(p.p_fa) + "\n";
      }
      WriteTextFile(opts.det, csv);
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "EER(%%) %.4f\nminDCF %.4f\n", 100.0 * eer,
                  min_dcf);
    out << buf;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

std::vector<ExtractJob> BuildManifest(
    const std::vector<std::filesystem::path>& inputs,
    const std::filesystem::path& out_dir, std::string_view extension) {
  std::vector<ExtractJob> jobs;
  std::set<std::filesystem::path> seen;
  for (const auto& input : inputs) {
    std::filesystem::path output =
        out_dir / (input.stem().string() + std::string(extension));
    if (!seen.insert(output).second) {
      throw Error(ErrorCode::kInvalidParameter,
                  "duplicate output " + output.string() + " (from " +
                      input.string() + ")");
    }
    jobs.push_back({input, std::move(output)});
  }
  return jobs;
}

std::vector<std::filesystem::path> ReadInputList(
    const std::filesystem::path& list_path) {
  const std::string text = ReadTextFile(list_path);
  const std::filesystem::path base = list_path.parent_path();
  std::vector<std::filesystem::path> inputs;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    std::string_view entry = line;
    if (const auto hash = entry.find('#'); hash != std::string_view::npos) {
      entry = entry.substr(0, hash);
    }
    entry = Trim(entry);
    if (entry.empty()) continue;
    std::filesystem::path path(entry);
    inputs.push_back(path.is_absolute() ? path : base / path);
  }
  return inputs;
}

std::vector<TrialScore> ParseScoreText(std::string_view text) {
  std::vector<TrialScore> trials;
  int line_number = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string label;
    std::string score_text;
    std::string extra;
    if (!(fields >> label)) continue;
    const std::string where = "score line " + std::to_string(line_number);
    if (!(fields >> score_text) || (fields >> extra)) {
      throw Error(ErrorCode::kMalformedInput,
                  where + ": expected '<label> <score>'");
    }
    TrialScore trial{};
    if (label == "target") {
      trial.label = TrialLabel::kTarget;
    } else if (label == "nontarget") {
      trial.label = TrialLabel::kNontarget;
    } else {
      throw Error(ErrorCode::kMalformedInput,
                  where + ": unknown label '" + label + "'");
    }
    const char* end = score_text.data() + score_text.size();
    auto [ptr, ec] = std::from_chars(score_text.data(), end, trial.score);
    if (ec != std::errc() || ptr != end || !std::isfinite(trial.score)) {
      throw Error(ErrorCode::kMalformedInput,
                  where + ": bad score '" + score_text + "'");
    }
    trials.push_back(trial);
  }
  return trials;
}

PipelineConfig LoadConfigFile(const std::filesystem::path& path) {
  return ParseConfigText(ReadTextFile(path));
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Cepstral feature extraction and verification scoring"};
  app.require_subcommand(1);
  if (!args.empty()) app.name(std::filesystem::path(args[0]).filename().string());

  ExtractOptions extract;
  CLI::App* extract_cmd =
      app.add_subcommand("extract", "Extract features for one wav or a list");
  extract_cmd->add_option("--feature", extract.feature, "Feature type")
      ->required()
      ->check(CLI::IsMember(FeatureTypeNames()));
  extract_cmd->add_option("--in", extract.input, "Input wav or list file")
      ->required();
  extract_cmd->add_option("--out-dir", extract.out_dir, "Output directory")
      ->required();
  extract_cmd->add_option("--config", extract.config, "Pipeline config file");
  extract_cmd->add_option("--format", extract.format, "Output format")
      ->check(CLI::IsMember({"bin", "csv"}));
  extract_cmd->add_flag("--no-dct", extract.no_dct, "Emit mel-domain features");
  extract_cmd->add_option("--jobs", extract.jobs, "Worker threads")
      ->check(CLI::Range(1, 1024));

  RenderOptions render;
  CLI::App* render_cmd =
      app.add_subcommand("render", "Render a feature map as a PGM image");
  render_cmd->add_option("--feature", render.feature, "Feature type")
      ->required()
      ->check(CLI::IsMember(FeatureTypeNames()));
  render_cmd->add_option("--in", render.input, "Input wav")->required();
  render_cmd->add_option("--out", render.output, "Output image")->required();
  render_cmd->add_option("--config", render.config, "Pipeline config file");

  EvalOptions eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Compute EER and minDCF");
  eval_cmd->add_option("--scores", eval.scores, "Score file")->required();
  eval_cmd->add_option("--p-tar", eval.p_target, "Target prior")->capture_default_str();
  eval_cmd->add_option("--c-miss", eval.c_miss, "Miss cost")->capture_default_str();
  eval_cmd->add_option("--c-fa", eval.c_fa, "False-alarm cost")->capture_default_str();
  eval_cmd->add_option("--det", eval.det, "Write DET points as CSV");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and friends carry exit code 0.
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*extract_cmd) return RunExtract(extract, out, err);
  if (*render_cmd) return RunRender(render, out, err);
  return RunEval(eval, out, err);
}

}  // namespace pncc
