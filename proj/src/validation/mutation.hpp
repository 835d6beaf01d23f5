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

#ifndef MTCGEN_VALIDATION_MUTATION_HPP_
#define MTCGEN_VALIDATION_MUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coupling/coupling.hpp"
#include "minilang/program.hpp"

namespace mtcgen::validation {

enum class MutationOperator { kAor, kRor, kCor, kLvr, kSdl };

const char* OperatorName(MutationOperator op);
std::optional<MutationOperator> ParseOperator(std::string_view name);

struct Mutant {
  // "m<k>", k the 1-based position in the full enumeration.
  std::string id;
  MutationOperator op = MutationOperator::kAor;
  minilang::MethodRef method;
  minilang::NodeId target_node = 0;
  std::string before;
  std::string after;
  minilang::ProgramPtr program;
};

struct MutationConfig {
  std::size_t cap = 20;
  std::uint64_t seed = 0;
};

// Every single-node mutation of the two pair methods that still type-checks,
// in pre-order (target method first). Above the cap, a seeded sample that
// keeps enumeration order.
std::vector<Mutant> GenerateMutants(const minilang::Program& program,
                                    const coupling::CoupledPair& pair,
                                    const MutationConfig& config = {});

// Mutants of one method; the building block of GenerateMutants.
std::vector<Mutant> MutateMethod(const minilang::Program& program,
                                 const minilang::MethodRef& method);

// Unified diff of the pretty-printed sources of the mutated class.
std::string MutantDiff(const minilang::Program& original, const Mutant& mutant);

}  // namespace mtcgen::validation

#endif  // MTCGEN_VALIDATION_MUTATION_HPP_
