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

#ifndef MTCGEN_VALIDATION_PROPERTIES_HPP_
#define MTCGEN_VALIDATION_PROPERTIES_HPP_

#include <cstddef>

#include "coupling/coupling.hpp"
#include "json.hpp"
#include "minilang/program.hpp"

namespace mtcgen::validation {

struct MtcPropertyReport {
  // Calls to either pair method over all test methods.
  std::size_t invocation_count = 0;
  // Some assertion's operands derive from two or more distinct pair
  // invocations, following def-use chains over the top-level statements.
  bool has_relating_assertion = false;
  bool is_mtc = false;
};

MtcPropertyReport CheckMtcProperties(const minilang::Program& program,
                                     const minilang::CheckedTestClass& test,
                                     const coupling::CoupledPair& pair);

nlohmann::json PropertiesToJson(const MtcPropertyReport& report);

}  // namespace mtcgen::validation

#endif  // MTCGEN_VALIDATION_PROPERTIES_HPP_
