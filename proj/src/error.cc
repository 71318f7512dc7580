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

#include "pncc/error.h"

namespace pncc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return "NotFound";
    case ErrorCode::kUnsupportedEncoding:
      return "UnsupportedEncoding";
    case ErrorCode::kSampleRateMismatch:
      return "SampleRateMismatch";
    case ErrorCode::kInvalidParameter:
      return "InvalidParameter";
    case ErrorCode::kInputTooShort:
      return "InputTooShort";
    case ErrorCode::kDegenerateFilter:
      return "DegenerateFilter";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kMissingClass:
      return "MissingClass";
    case ErrorCode::kMalformedInput:
      return "MalformedInput";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace pncc
