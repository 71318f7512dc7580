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

#include <charconv>
#include <cstdio>
#include <functional>
#include <string>
#include <system_error>

#include "pncc/cepstral_pipeline.h"
#include "pncc/error.h"

namespace pncc {
namespace {

struct Field {
  std::string_view key;
  std::function<std::string(const PipelineConfig&)> get;
  // Returns false when the value does not parse.
  std::function<bool(PipelineConfig&, std::string_view)> set;
};

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool ParseDouble(std::string_view text, double& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool ParseInt(std::string_view text, int& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool ParseBool(std::string_view text, bool& out) {
  if (text == "true" || text == "1") {
    out = true;
    return true;
  }
  if (text == "false" || text == "0") {
    out = false;
    return true;
  }
  return false;
}

// Accessors return mutable references; getters only read through them.
Field Double(std::string_view key, std::function<double&(PipelineConfig&)> ref) {
  return {key,
          [ref](const PipelineConfig& c) {
            return FormatDouble(ref(const_cast<PipelineConfig&>(c)));
          },
          [ref](PipelineConfig& c, std::string_view v) {
            return ParseDouble(v, ref(c));
          }};
}

Field Int(std::string_view key, std::function<int&(PipelineConfig&)> ref) {
  return {key,
          [ref](const PipelineConfig& c) {
            return std::to_string(ref(const_cast<PipelineConfig&>(c)));
          },
          [ref](PipelineConfig& c, std::string_view v) {
            return ParseInt(v, ref(c));
          }};
}

Field Bool(std::string_view key, std::function<bool&(PipelineConfig&)> ref) {
  return {key,
          [ref](const PipelineConfig& c) {
            return std::string(ref(const_cast<PipelineConfig&>(c)) ? "true"
                                                                     : "false");
          },
          [ref](PipelineConfig& c, std::string_view v) {
            return ParseBool(v, ref(c));
          }};
}

// An optional double whose unset state is spelled `unset_name`.
Field OptionalDouble(std::string_view key, std::string_view unset_name,
                     std::function<std::optional<double>&(PipelineConfig&)> ref) {
  return {key,
          [ref, unset_name](const PipelineConfig& c) {
            const auto& v = ref(const_cast<PipelineConfig&>(c));
            return v ? FormatDouble(*v) : std::string(unset_name);
          },
          [ref, unset_name](PipelineConfig& c, std::string_view v) {
            if (v == unset_name) {
              ref(c).reset();
              return true;
            }
            double d = 0.0;
            if (!ParseDouble(v, d)) return false;
            ref(c) = d;
            return true;
          }};
}

const std::vector<Field>& Fields() {
  using C = PipelineConfig;
  static const std::vector<Field> fields = {
      Double("frontend.frame_length_ms",
             [](C& c) -> double& { return c.frontend.frame_length_ms; }),
      Double("frontend.hop_ms", [](C& c) -> double& { return c.frontend.hop_ms; }),
      Double("frontend.preemphasis",
             [](C& c) -> double& { return c.frontend.preemphasis; }),
      {"frontend.window",
       [](const C& c) { return std::string(WindowTypeName(c.frontend.window)); },
       [](C& c, std::string_view v) {
         auto w = ParseWindowType(v);
         if (!w) return false;
         c.frontend.window = *w;
         return true;
       }},
      Int("frontend.fft_size", [](C& c) -> int& { return c.frontend.fft_size; }),
      Int("frontend.num_filters",
          [](C& c) -> int& { return c.frontend.num_filters; }),
      Double("frontend.fmin_hz", [](C& c) -> double& { return c.frontend.fmin_hz; }),
      OptionalDouble("frontend.fmax_hz", "nyquist",
                     [](C& c) -> std::optional<double>& { return c.frontend.fmax_hz; }),
      Int("medium_time.window_halfwidth",
          [](C& c) -> int& { return c.medium_time.window_halfwidth; }),
      Double("medium_time.ans_lambda_a",
             [](C& c) -> double& { return c.medium_time.ans_lambda_a; }),
      Double("medium_time.ans_lambda_b",
             [](C& c) -> double& { return c.medium_time.ans_lambda_b; }),
      Double("medium_time.floor_factor",
             [](C& c) -> double& { return c.medium_time.floor_factor; }),
      Double("medium_time.masking_lambda_t",
             [](C& c) -> double& { return c.medium_time.masking_lambda_t; }),
      Double("medium_time.masking_mu_t",
             [](C& c) -> double& { return c.medium_time.masking_mu_t; }),
      Int("medium_time.smoothing_halfwidth",
          [](C& c) -> int& { return c.medium_time.smoothing_halfwidth; }),
      Bool("medium_time.pass_through",
           [](C& c) -> bool& { return c.medium_time.pass_through; }),
      Double("mean_power.lambda_mu",
             [](C& c) -> double& { return c.mean_power.lambda_mu; }),
      OptionalDouble("mean_power.mu_init", "first_frame_mean",
                     [](C& c) -> std::optional<double>& { return c.mean_power.mu_init; }),
      Double("pcen.alpha", [](C& c) -> double& { return c.pcen.alpha; }),
      Double("pcen.delta", [](C& c) -> double& { return c.pcen.delta; }),
      Double("pcen.r", [](C& c) -> double& { return c.pcen.r; }),
      Double("pcen.epsilon", [](C& c) -> double& { return c.pcen.epsilon; }),
      OptionalDouble("pcen.s", "inverse_channels",
                     [](C& c) -> std::optional<double>& { return c.pcen.s; }),
      Int("pipeline.num_ceps", [](C& c) -> int& { return c.num_ceps; }),
      Double("pipeline.power_exponent",
             [](C& c) -> double& { return c.power_exponent; }),
      Bool("pipeline.apply_dct", [](C& c) -> bool& { return c.apply_dct; }),
  };
  return fields;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string ConfigToText(const PipelineConfig& config) {
  std::string out;
  for (const Field& field : Fields()) {
    out += field.key;
    out += " = ";
    out += field.get(config);
    out += '\n';
  }
  return out;
}

PipelineConfig ParseConfigText(std::string_view text) {
  PipelineConfig config;
  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{}
                                             : text.substr(newline + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const std::string where = "config line " + std::to_string(line_number);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedInput, where + ": expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    const Field* match = nullptr;
    for (const Field& field : Fields()) {
      if (field.key == key) match = &field;
    }
    if (match == nullptr) {
      throw Error(ErrorCode::kMalformedInput,
                  where + ": unknown key '" + std::string(key) + "'");
    }
    if (!match->set(config, value)) {
      throw Error(ErrorCode::kMalformedInput,
                  where + ": bad value '" + std::string(value) + "' for " +
                      std::string(key));
    }
  }
  return config;
}

std::uint64_t ConfigFingerprint(const PipelineConfig& config) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char ch : ConfigToText(config)) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace pncc
