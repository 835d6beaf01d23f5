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

#ifndef MTCGEN_MINILANG_INTERPRETER_HPP_
#define MTCGEN_MINILANG_INTERPRETER_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "minilang/ast.hpp"
#include "minilang/program.hpp"

namespace mtcgen::minilang {

struct Limits {
  std::uint64_t max_steps = 1'000'000;
  std::chrono::milliseconds per_test_timeout{2000};
  int max_call_depth = 512;
};

struct TestOutcome {
  enum class Kind { kPass, kAssertFail, kRuntimeError, kTimeout, kCompileError };

  Kind kind = Kind::kPass;
  std::string message;
  std::optional<NodeId> failed_assertion;

  bool operator==(const TestOutcome&) const = default;
};

std::string_view OutcomeKindName(TestOutcome::Kind kind);

// Test method name to outcome. A class that does not type-check yields a
// single COMPILE_ERROR entry keyed by the class name.
using TestOutcomes = std::map<std::string, TestOutcome>;

// Runs every @Test method of `tests` in isolation: each one gets fresh static
// state and a fresh instance of the test class.
TestOutcomes RunTestClass(const Program& program, const TestClass& tests,
                          const Limits& limits = {});
TestOutcomes RunCheckedTestClass(const Program& program, const CheckedTestClass& tests,
                                 const Limits& limits = {});

// Runs a single @Test method; the name must exist in `tests`.
TestOutcome RunTestMethod(const Program& program, const CheckedTestClass& tests,
                          const std::string& method, const Limits& limits = {});

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_INTERPRETER_HPP_
