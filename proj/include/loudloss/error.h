// Copyright 2026 The Loudloss Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOUDLOSS_ERROR_H_
#define LOUDLOSS_ERROR_H_

#include <stdexcept>
#include <string>

namespace loudloss {

enum class ErrorCode {
  kMalformedWav,
  kUnsupportedFormat,
  kSampleRateMismatch,
  kIoFailure,
  kClipTooShort,
  kShapeMismatch,
  kNegativeFrequency,
  kNegativeMel,
  kDegenerateBand,
  kBinOutOfRange,
  kEmptyBand,
  kWeightCountMismatch,
  kInvalidAlpha,
  kLengthMismatch,
  kSilentReference,
  kOrthogonalEstimate,
  kDivergenceDetected,
  kInvalidConfig,
};

// All domain and input failures surface as this one exception type; callers
// that care about the cause branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace loudloss

#endif  // LOUDLOSS_ERROR_H_
