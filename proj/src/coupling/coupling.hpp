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

#ifndef MTCGEN_COUPLING_COUPLING_HPP_
#define MTCGEN_COUPLING_COUPLING_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "code_model/facts.hpp"
#include "json.hpp"
#include "minilang/program.hpp"

namespace mtcgen::coupling {

enum class FeatureCategory { kIntention, kBehavior, kState };

// Declared in rendering order. Within a category the first label is the
// stronger one and suppresses the second.
enum class FeatureLabel {
  kOverloading,
  kSharedSigTokensAndTypes,
  kDirectCall,
  kSharedCalls,
  kDirectDataDep,
  kSharedState,
};

enum class Direction { kNone, kTargetToCandidate, kCandidateToTarget, kBoth };

const char* CategoryName(FeatureCategory category);
const char* LabelName(FeatureLabel label);
const char* DirectionName(Direction direction);
std::optional<FeatureLabel> ParseLabel(std::string_view name);
FeatureCategory CategoryOf(FeatureLabel label);

struct CouplingFeature {
  FeatureLabel label = FeatureLabel::kOverloading;
  // Set only for kDirectCall and kDirectDataDep.
  Direction direction = Direction::kNone;
  // Sorted, never empty.
  std::vector<std::string> evidence;

  FeatureCategory category() const { return CategoryOf(label); }
  bool operator==(const CouplingFeature&) const = default;
};

struct CoupledPair {
  minilang::MethodRef target;
  minilang::MethodRef candidate;
  // Ordered by label; never empty.
  std::vector<CouplingFeature> features;

  bool HasLabel(FeatureLabel label) const;
  bool operator==(const CoupledPair&) const = default;
};

const std::set<std::string>& DefaultIgnoredBuiltins();

struct CouplingConfig {
  // When false, shared name tokens alone are enough for the signature feature.
  bool signature_requires_type_overlap = true;
  // Builtin callees that never count as shared calls.
  std::set<std::string> ignored_builtins = DefaultIgnoredBuiltins();
  code_model::FactsOptions facts;
};

// Features between `target` and `candidate`; empty when nothing matched.
std::vector<CouplingFeature> MatchFeatures(const code_model::MethodFacts& target,
                                           const code_model::MethodFacts& candidate,
                                           const CouplingConfig& config = {});

// Pairs every other method of the target's class with the target. Sorted by
// feature count (descending), then candidate name, then candidate signature.
std::vector<CoupledPair> AnalyzeCoupling(const minilang::Program& program,
                                         const minilang::MethodRef& target,
                                         const CouplingConfig& config = {});

// Same, from precomputed facts for every method of the class.
std::vector<CoupledPair> AnalyzeCouplingFacts(const code_model::MethodFacts& target,
                                              const std::vector<code_model::MethodFacts>& members,
                                              const CouplingConfig& config = {});

std::string FeatureSummary(const CoupledPair& pair);

nlohmann::json PairToJson(const CoupledPair& pair);
CoupledPair PairFromJson(const nlohmann::json& json);

}  // namespace mtcgen::coupling

#endif  // MTCGEN_COUPLING_COUPLING_HPP_
