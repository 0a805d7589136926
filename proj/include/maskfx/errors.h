// Copyright 2026 The maskfx Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MASKFX_ERRORS_H_
#define MASKFX_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace maskfx {

enum class ErrorCode {
  kFileNotFound,
  kIo,
  kMalformedHeader,
  kTruncatedData,
  kUnsupportedFormat,
  kInvalidArgument,
  kDimensionMismatch,
  kSchemaViolation,
  kUnknownMaskEncoding,
  kScoreOutOfRange,
  kRleCountMismatch,
  kRleNegativeCount,
  kUnknownClass,
  kSegmenterLaunch,
  kSegmenterFailed,
  kUnknownFilter,
  kParameterOutOfRange,
  kUnknownParameter,
  kDuplicateFilter,
  kConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as Error; code() distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace maskfx

#endif  // MASKFX_ERRORS_H_
