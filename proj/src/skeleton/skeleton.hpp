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

#ifndef MTCGEN_SKELETON_SKELETON_HPP_
#define MTCGEN_SKELETON_SKELETON_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coupling/coupling.hpp"
#include "json.hpp"
#include "minilang/program.hpp"

namespace mtcgen::skeleton {

enum class AssertionKind { kEq, kNe, kTruePred, kFalsePred, kOrderLt, kOrderLe };
enum class Role { kSourceInput, kSourceOutput, kFollowupInput, kFollowupOutput, kConstant, kOther };

const char* AssertionKindName(AssertionKind kind);
const char* RoleName(Role role);
std::optional<AssertionKind> ParseAssertionKind(std::string_view name);
std::optional<Role> ParseRole(std::string_view name);

struct NormalizedAssertion {
  AssertionKind kind = AssertionKind::kEq;
  std::vector<minilang::Expr> operands;
  // The original predicate for TRUE_PRED / FALSE_PRED.
  std::optional<minilang::Expr> predicate;

  bool operator==(const NormalizedAssertion&) const = default;
};

// Throws Error(kNotAnAssertion) unless `call` is a builtin assertion call.
NormalizedAssertion NormalizeAssertion(const minilang::Expr& call);

// The canonical assertion call for a normalized assertion.
minilang::Expr ToAssertionCall(const NormalizedAssertion& normalized);

struct MrSkeleton {
  // Sorted by MethodRef::ToString.
  std::vector<minilang::MethodRef> method_pair;
  std::vector<std::string> input_relation;
  AssertionKind assertion_kind = AssertionKind::kEq;
  // Sorted; a multiset.
  std::vector<Role> assertion_elements;
  std::string test_method;
  std::vector<std::string> warnings;
};

// Throws Error(kNotExtractable) with the cause.
MrSkeleton ExtractSkeleton(const minilang::Program& program, const minilang::CheckedTestClass& test,
                           const coupling::CoupledPair& pair);

// For a human-written test: the first coupled pair of `target` whose members
// the test invokes.
MrSkeleton ExtractReferenceSkeleton(const minilang::Program& program,
                                    const minilang::CheckedTestClass& test,
                                    const minilang::MethodRef& target);

struct SimilarityResult {
  bool l1 = false;
  bool l2 = false;
  std::vector<std::string> mismatches;
};

SimilarityResult Compare(const MrSkeleton& generated, const MrSkeleton& reference);

nlohmann::json SkeletonToJson(const MrSkeleton& skeleton);
MrSkeleton SkeletonFromJson(const nlohmann::json& j);
nlohmann::json SimilarityToJson(const SimilarityResult& result);

}  // namespace mtcgen::skeleton

#endif  // MTCGEN_SKELETON_SKELETON_HPP_
