// Copyright 2026 The mtcgen Authors
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

#ifndef MTCGEN_COMMON_ERROR_HPP_
#define MTCGEN_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtcgen {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kCorpus,
  kConfig,
  kUnknownMethod,
  kProviderUnavailable,
  kFixtureMiss,
  kNotExtractable,
  kNotAnAssertion,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Exception type used across the core library. The C API maps `code()` onto
// its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mtcgen

#endif  // MTCGEN_COMMON_ERROR_HPP_
