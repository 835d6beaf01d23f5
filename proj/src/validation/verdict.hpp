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

#ifndef MTCGEN_VALIDATION_VERDICT_HPP_
#define MTCGEN_VALIDATION_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minilang/interpreter.hpp"
#include "minilang/program.hpp"
#include "validation/mutation.hpp"

namespace mtcgen::validation {

struct PassRate {
  double rate = 0.0;
  std::size_t passed = 0;
  std::size_t total = 0;
  // Set when the class does not type-check against the program.
  std::string note;
  minilang::TestOutcomes outcomes;
};

// PASS outcomes over test methods; 0 when the class does not check.
PassRate ComputePassRate(const minilang::Program& program, const minilang::TestClass& tests,
                         const minilang::Limits& limits = {});

enum class Decision { kRetained, kFiltered, kRetainedNoMutants };

const char* DecisionName(Decision decision);

// kEveryMutant: retain only if the clause holds against every mutant.
// kMajority: retain if it holds against more than half of them.
enum class Aggregation { kEveryMutant, kMajority };

// retain_j <=> p > p'_j or p = p'_j = 1.
bool RetainAgainst(double p, double p_prime);

struct RuleOutcome {
  Decision decision = Decision::kRetainedNoMutants;
  // First mutant index for which the clause fails.
  std::optional<std::size_t> first_violation;
};

RuleOutcome ApplyRule(double p, const std::vector<double>& p_primes,
                      Aggregation aggregation = Aggregation::kEveryMutant);

struct MutantRate {
  std::string id;
  MutationOperator op = MutationOperator::kAor;
  double p_prime = 0.0;
};

struct ValidationVerdict {
  std::string candidate;
  double p = 0.0;
  std::vector<MutantRate> per_mutant;
  Decision decision = Decision::kRetainedNoMutants;
  std::string reason;
};

ValidationVerdict Validate(const std::string& candidate, const minilang::TestClass& tests,
                           const minilang::Program& program, const std::vector<Mutant>& mutants,
                           const minilang::Limits& limits = {},
                           Aggregation aggregation = Aggregation::kEveryMutant);

nlohmann::json VerdictToJson(const ValidationVerdict& verdict);

}  // namespace mtcgen::validation

#endif  // MTCGEN_VALIDATION_VERDICT_HPP_
