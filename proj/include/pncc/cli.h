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

#ifndef PNCC_CLI_H_
#define PNCC_CLI_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pncc/cepstral_pipeline.h"
#include "pncc/metrics.h"

namespace pncc {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ExtractJob {
  std::filesystem::path input;
  std::filesystem::path output;
};

// Input wav paths become <out_dir>/<stem><extension>. Throws
// kInvalidParameter when two inputs map to the same output.
std::vector<ExtractJob> BuildManifest(
    const std::vector<std::filesystem::path>& inputs,
    const std::filesystem::path& out_dir, std::string_view extension);

// Reads a list file: one wav path per line, blanks and '#' comments skipped.
// Relative paths resolve against the list file's directory.
std::vector<std::filesystem::path> ReadInputList(
    const std::filesystem::path& list_path);

// "<label> <score>" per line, label in {target, nontarget}; '#' starts a
// comment. Throws kMalformedInput naming the offending line.
std::vector<TrialScore> ParseScoreText(std::string_view text);

PipelineConfig LoadConfigFile(const std::filesystem::path& path);

// Entry point shared by the executable and the tests. argv[0] is the
// program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace pncc

#endif  // PNCC_CLI_H_
