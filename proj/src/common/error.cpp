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

#include "common/error.hpp"

namespace mtcgen {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kIo:
      return "IO_ERROR";
    case ErrorCode::kCorpus:
      return "CORPUS_ERROR";
    case ErrorCode::kConfig:
      return "CONFIG_ERROR";
    case ErrorCode::kUnknownMethod:
      return "UNKNOWN_METHOD";
    case ErrorCode::kProviderUnavailable:
      return "PROVIDER_UNAVAILABLE";
    case ErrorCode::kFixtureMiss:
      return "FIXTURE_MISS";
    case ErrorCode::kNotExtractable:
      return "NOT_EXTRACTABLE";
    case ErrorCode::kNotAnAssertion:
      return "NOT_AN_ASSERTION";
    case ErrorCode::kInternal:
      return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace mtcgen
