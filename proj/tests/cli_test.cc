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

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "pncc/audio_io.h"
#include "pncc/feature_io.h"
#include "test_util.h"

namespace pncc {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult RunPncc(std::vector<std::string> args) {
  args.insert(args.begin(), "pncc");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(file)), {});
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST(CliExtractTest, SingleFileHappyPath) {
  testing::TempDir dir;
  WriteWav16(dir.path() / "a.wav", SynthNoise(1.0, 16000, 0.5, 1));
  const auto out_dir = dir.path() / "d";
  const CliResult r = RunPncc({"extract", "--feature", "spncc", "--in",
                           (dir.path() / "a.wav").string(), "--out-dir",
                           out_dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const FeatureMatrix features = ReadFeatureFile(out_dir / "a.feat");
  EXPECT_EQ(features.values.rows(), 98);
  EXPECT_EQ(features.values.cols(), 30);
  EXPECT_EQ(features.type, FeatureType::kSpncc);
  EXPECT_EQ(features.config_fingerprint, ConfigFingerprint(PipelineConfig{}));
}

TEST(CliExtractTest, PartialFailureStillProcessesOtherFiles) {
  testing::TempDir dir;
  WriteWav16(dir.path() / "good1.wav", SynthNoise(0.5, 16000, 0.5, 2));
  WriteWav16(dir.path() / "good2.wav", SynthNoise(0.5, 16000, 0.5, 3));
  WriteText(dir.path() / "list.txt", "good1.wav\nmissing.wav\n# comment\n\ngood2.wav\n");
  const auto out_dir = dir.path() / "out";
  const CliResult r = RunPncc({"extract", "--feature", "pncc", "--in",
                           (dir.path() / "list.txt").string(), "--out-dir",
                           out_dir.string(), "--jobs", "2"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("missing.wav"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(out_dir / "good1.feat"));
  EXPECT_TRUE(std::filesystem::exists(out_dir / "good2.feat"));
  EXPECT_FALSE(std::filesystem::exists(out_dir / "missing.feat"));
}

TEST(CliExtractTest, CsvNoDctAndConfig) {
  testing::TempDir dir;
  WriteWav16(dir.path() / "a.wav", SynthNoise(0.5, 16000, 0.5, 4));
  WriteText(dir.path() / "cfg.txt", "frontend.num_filters = 40\npcen.alpha = 0.9\n");
  const CliResult r = RunPncc({"extract", "--feature", "scpncc", "--in",
                           (dir.path() / "a.wav").string(), "--out-dir",
                           dir.path().string(), "--format", "csv", "--no-dct",
                           "--config", (dir.path() / "cfg.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = Slurp(dir.path() / "a.csv");
  const std::string first_line = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(std::count(first_line.begin(), first_line.end(), ','), 39);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 48);
}

TEST(CliExtractTest, BadFlagsExitTwo) {
  EXPECT_EQ(RunPncc({"extract", "--feature", "plp", "--in", "a.wav", "--out-dir", "d"}).code,
            kExitUsage);
  EXPECT_EQ(RunPncc({"extract", "--in", "a.wav", "--out-dir", "d"}).code, kExitUsage);
  EXPECT_EQ(RunPncc({"extract", "--feature", "mfcc", "--in", "a.wav", "--out-dir", "d",
                 "--jobs", "0"}).code,
            kExitUsage);
  EXPECT_EQ(RunPncc({}).code, kExitUsage);
  EXPECT_EQ(RunPncc({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunPncc({"--help"}).code, kExitOk);
}

TEST(CliExtractTest, BadConfigExitsOne) {
  testing::TempDir dir;
  WriteWav16(dir.path() / "a.wav", SynthNoise(0.5, 16000, 0.5, 4));
  WriteText(dir.path() / "cfg.txt", "pcen.alhpa = 0.9\n");
  const CliResult r = RunPncc({"extract", "--feature", "cpncc", "--in",
                           (dir.path() / "a.wav").string(), "--out-dir",
                           dir.path().string(), "--config",
                           (dir.path() / "cfg.txt").string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("alhpa"), std::string::npos);
}

TEST(ManifestTest, DuplicateOutputsRejected) {
  EXPECT_PNCC_ERROR(BuildManifest({"x/a.wav", "y/a.wav"}, "out", ".feat"),
                    ErrorCode::kInvalidParameter);
  const auto jobs = BuildManifest({"x/a.wav", "y/b.wav"}, "out", ".feat");
  ASSERT_EQ(jobs.size(), 2u);
  EXPECT_EQ(jobs[1].output, std::filesystem::path("out/b.feat"));
}

TEST(CliExtractTest, JobsDoNotChangeOutput) {
  testing::TempDir dir;
  std::string list;
  for (int i = 0; i < 8; ++i) {
    const std::string name = "u" + std::to_string(i) + ".wav";
    WriteWav16(dir.path() / name, SynthNoise(0.4 + 0.1 * i, 16000, 0.5, 100 + i));
    list += name + "\n";
  }
  WriteText(dir.path() / "list.txt", list);
  for (const char* jobs : {"1", "4"}) {
    const CliResult r = RunPncc({"extract", "--feature", "pncc", "--in",
                             (dir.path() / "list.txt").string(), "--out-dir",
                             (dir.path() / (std::string("j") + jobs)).string(),
                             "--jobs", jobs});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  for (int i = 0; i < 8; ++i) {
    const std::string name = "u" + std::to_string(i) + ".feat";
    EXPECT_EQ(Slurp(dir.path() / "j1" / name), Slurp(dir.path() / "j4" / name));
  }
}

TEST(CliRenderTest, ToneMakesBrightBand) {
  testing::TempDir dir;
  WriteWav16(dir.path() / "tone.wav", SynthTone(1000.0, 1.0, 16000, 0.5));
  const auto image = dir.path() / "tone.pgm";
  const CliResult r = RunPncc({"render", "--feature", "mfcc", "--in",
                           (dir.path() / "tone.wav").string(), "--out", image.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string pgm = Slurp(image);
  const std::string header = "P5\n98 60\n255\n";
  ASSERT_EQ(pgm.substr(0, header.size()), header);
  // Row brightness: the brightest row should sit at the 1 kHz filter.
  const auto* px = reinterpret_cast<const unsigned char*>(pgm.data() + header.size());
  int best_row = -1;
  double best = -1.0;
  for (int y = 0; y < 60; ++y) {
    double sum = 0.0;
    for (int x = 0; x < 98; ++x) sum += px[y * 98 + x];
    if (sum > best) {
      best = sum;
      best_row = y;
    }
  }
  const Filterbank fb = BuildMelFilterbank(FrontendConfig{}, 16000);
  int nearest = 0;
  for (int f = 0; f < 60; ++f) {
    if (std::abs(fb.center_freqs_hz[f] - 1000.0) <
        std::abs(fb.center_freqs_hz[nearest] - 1000.0)) {
      nearest = f;
    }
  }
  EXPECT_EQ(59 - best_row, nearest);
}

TEST(CliRenderTest, SilenceIsUniform) {
  testing::TempDir dir;
  Waveform silence;
  silence.samples.assign(8000, 0.0);
  WriteWav16(dir.path() / "s.wav", silence);
  const auto image = dir.path() / "s.pgm";
  for (const char* type : {"mfcc", "pncc", "spncc", "cpncc", "scpncc"}) {
    ASSERT_EQ(RunPncc({"render", "--feature", type, "--in",
                   (dir.path() / "s.wav").string(), "--out", image.string()})
                  .code,
              kExitOk);
    const std::string pgm = Slurp(image);
    const std::string header = "P5\n48 60\n255\n";
    ASSERT_EQ(pgm.substr(0, header.size()), header);
    for (std::size_t i = header.size(); i < pgm.size(); ++i) ASSERT_EQ(pgm[i], 0);
  }
}

TEST(CliRenderTest, MissingInputExitsOne) {
  testing::TempDir dir;
  EXPECT_EQ(RunPncc({"render", "--feature", "pncc", "--in", "/nonexistent.wav", "--out",
                 (dir.path() / "x.pgm").string()})
                .code,
            kExitFailure);
}

TEST(CliEvalTest, PerfectAndInterleaved) {
  testing::TempDir dir;
  WriteText(dir.path() / "perfect.txt",
            "# label score\ntarget 2.0\ntarget 1.5\nnontarget -1\nnontarget 0.1\n");
  CliResult r = RunPncc({"eval", "--scores", (dir.path() / "perfect.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "EER(%) 0.0000\nminDCF 0.0000\n");

  WriteText(dir.path() / "inter.txt",
            "target 4\nnontarget 3\ntarget 2\nnontarget 1\n");
  r = RunPncc({"eval", "--scores", (dir.path() / "inter.txt").string(), "--det",
           (dir.path() / "det.csv").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 15), "EER(%) 50.0000\n");
  const std::string det = Slurp(dir.path() / "det.csv");
  EXPECT_EQ(det.substr(0, det.find('\n')), "threshold,p_miss,p_fa");
  EXPECT_EQ(std::count(det.begin(), det.end(), '\n'), 7);
  EXPECT_NE(det.find("-inf,0,1\n"), std::string::npos);
  EXPECT_NE(det.find("inf,1,0\n"), std::string::npos);
}

TEST(CliEvalTest, OperatingPointFlags) {
  testing::TempDir dir;
  WriteText(dir.path() / "s.txt",
            "target 0.8\ntarget 0.6\ntarget 0.4\n"
            "nontarget 0.7\nnontarget 0.3\nnontarget 0.1\n");
  const auto path = (dir.path() / "s.txt").string();
  EXPECT_EQ(RunPncc({"eval", "--scores", path}).out, "EER(%) 33.3333\nminDCF 0.6667\n");
  // p_tar 0.5: threshold 0.4 misses nothing and takes one impostor,
  // (0.5 / 3) / 0.5.
  EXPECT_EQ(RunPncc({"eval", "--scores", path, "--p-tar", "0.5"}).out,
            "EER(%) 33.3333\nminDCF 0.3333\n");
  // c_miss 10: threshold 0.8, 10 * 0.01 * 2/3 over 0.1.
  EXPECT_EQ(RunPncc({"eval", "--scores", path, "--c-miss", "10"}).out,
            "EER(%) 33.3333\nminDCF 0.6667\n");
}

TEST(CliEvalTest, MalformedAndMissingClass) {
  testing::TempDir dir;
  WriteText(dir.path() / "bad.txt", "target 1\nnontarget zero\n");
  CliResult r = RunPncc({"eval", "--scores", (dir.path() / "bad.txt").string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  WriteText(dir.path() / "label.txt", "target 1\nimpostor 0\n");
  r = RunPncc({"eval", "--scores", (dir.path() / "label.txt").string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  WriteText(dir.path() / "one.txt", "target 1\ntarget 2\n");
  r = RunPncc({"eval", "--scores", (dir.path() / "one.txt").string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("MissingClass"), std::string::npos);
}

TEST(ScoreParseTest, AcceptsCommentsAndWhitespace) {
  const auto trials = ParseScoreText("  target\t1.5  # strong\n\nnontarget -2e-1\n");
  ASSERT_EQ(trials.size(), 2u);
  EXPECT_EQ(trials[0].label, TrialLabel::kTarget);
  EXPECT_EQ(trials[0].score, 1.5);
  EXPECT_EQ(trials[1].score, -0.2);
  EXPECT_PNCC_ERROR(ParseScoreText("target 1 2\n"), ErrorCode::kMalformedInput);
  EXPECT_PNCC_ERROR(ParseScoreText("target\n"), ErrorCode::kMalformedInput);
}

}  // namespace
}  // namespace pncc
