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

#include "coupling/coupling.hpp"

#include <algorithm>
#include <iterator>

#include "common/error.hpp"
#include "minilang/builtins.hpp"

namespace mtcgen::coupling {
namespace {

using code_model::FieldRef;
using code_model::MethodFacts;
using minilang::MethodRef;

constexpr FeatureLabel kAllLabels[] = {
    FeatureLabel::kOverloading, FeatureLabel::kSharedSigTokensAndTypes,
    FeatureLabel::kDirectCall,  FeatureLabel::kSharedCalls,
    FeatureLabel::kDirectDataDep, FeatureLabel::kSharedState,
};

template <typename T>
std::set<T> Intersect(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<std::string> FieldStrings(const std::set<FieldRef>& fields) {
  std::set<std::string> out;
  for (const auto& f : fields) out.insert(f.ToString());
  return {out.begin(), out.end()};
}

Direction Combine(bool target_to_candidate, bool candidate_to_target) {
  if (target_to_candidate && candidate_to_target) return Direction::kBoth;
  if (target_to_candidate) return Direction::kTargetToCandidate;
  return Direction::kCandidateToTarget;
}

std::set<MethodRef> CountedCalls(const MethodFacts& facts, const CouplingConfig& config) {
  std::set<MethodRef> out;
  for (const auto& c : facts.calls) {
    if (c.class_name == minilang::kBuiltinOwner && config.ignored_builtins.count(c.name)) continue;
    out.insert(c);
  }
  return out;
}

std::optional<CouplingFeature> Intention(const MethodFacts& t, const MethodFacts& c,
                                         const CouplingConfig& config) {
  if (t.method.name == c.method.name) {
    return CouplingFeature{FeatureLabel::kOverloading, Direction::kNone, {t.method.name}};
  }
  auto tokens = Intersect(t.name_tokens, c.name_tokens);
  auto types = Intersect(t.para_ret_types, c.para_ret_types);
  if (tokens.empty()) return std::nullopt;
  if (config.signature_requires_type_overlap && types.empty()) return std::nullopt;
  std::set<std::string> evidence;
  for (const auto& tok : tokens) evidence.insert("token:" + tok);
  for (const auto& ty : types) evidence.insert("type:" + ty.ToString());
  return CouplingFeature{FeatureLabel::kSharedSigTokensAndTypes, Direction::kNone,
                         {evidence.begin(), evidence.end()}};
}

std::optional<CouplingFeature> Behavior(const MethodFacts& t, const MethodFacts& c,
                                        const CouplingConfig& config) {
  bool t_calls_c = t.calls.count(c.method) > 0;
  bool c_calls_t = c.calls.count(t.method) > 0;
  if (t_calls_c || c_calls_t) {
    std::vector<std::string> evidence;
    if (c_calls_t) evidence.push_back(c.method.ToString() + " -> " + t.method.ToString());
    if (t_calls_c) evidence.push_back(t.method.ToString() + " -> " + c.method.ToString());
    std::sort(evidence.begin(), evidence.end());
    return CouplingFeature{FeatureLabel::kDirectCall, Combine(t_calls_c, c_calls_t),
                           std::move(evidence)};
  }
  auto shared = Intersect(CountedCalls(t, config), CountedCalls(c, config));
  if (shared.empty()) return std::nullopt;
  std::set<std::string> evidence;
  for (const auto& m : shared) evidence.insert(m.ToString());
  return CouplingFeature{FeatureLabel::kSharedCalls, Direction::kNone,
                         {evidence.begin(), evidence.end()}};
}

std::optional<CouplingFeature> State(const MethodFacts& t, const MethodFacts& c) {
  auto t_to_c = Intersect(t.write_fields, c.read_fields);
  auto c_to_t = Intersect(c.write_fields, t.read_fields);
  if (!t_to_c.empty() || !c_to_t.empty()) {
    std::set<FieldRef> fields = t_to_c;
    fields.insert(c_to_t.begin(), c_to_t.end());
    return CouplingFeature{FeatureLabel::kDirectDataDep, Combine(!t_to_c.empty(), !c_to_t.empty()),
                           FieldStrings(fields)};
  }
  std::set<FieldRef> fields = Intersect(t.read_fields, c.read_fields);
  auto writes = Intersect(t.write_fields, c.write_fields);
  fields.insert(writes.begin(), writes.end());
  if (fields.empty()) return std::nullopt;
  return CouplingFeature{FeatureLabel::kSharedState, Direction::kNone, FieldStrings(fields)};
}

std::string LabelText(const CouplingFeature& f) {
  switch (f.label) {
    case FeatureLabel::kOverloading:
      return "Overloading method";
    case FeatureLabel::kSharedSigTokensAndTypes:
      return "Consuming/producing the same types of data (shared name tokens and types)";
    case FeatureLabel::kDirectCall:
      return "Direct call dependency";
    case FeatureLabel::kSharedCalls:
      return "Invoking the same APIs";
    case FeatureLabel::kDirectDataDep:
      return "Direct data dependency";
    case FeatureLabel::kSharedState:
      return "Sharing the same dependent/dependency";
  }
  return "";
}

const char* SectionTitle(FeatureCategory category) {
  switch (category) {
    case FeatureCategory::kIntention:
      return "Intention";
    case FeatureCategory::kBehavior:
      return "Behavior";
    case FeatureCategory::kState:
      return "State";
  }
  return "";
}

}  // namespace

const char* CategoryName(FeatureCategory category) {
  switch (category) {
    case FeatureCategory::kIntention:
      return "INTENTION";
    case FeatureCategory::kBehavior:
      return "BEHAVIOR";
    case FeatureCategory::kState:
      return "STATE";
  }
  return "";
}

const char* LabelName(FeatureLabel label) {
  switch (label) {
    case FeatureLabel::kOverloading:
      return "OVERLOADING";
    case FeatureLabel::kSharedSigTokensAndTypes:
      return "SHARED_SIG_TOKENS_AND_TYPES";
    case FeatureLabel::kDirectCall:
      return "DIRECT_CALL";
    case FeatureLabel::kSharedCalls:
      return "SHARED_CALLS";
    case FeatureLabel::kDirectDataDep:
      return "DIRECT_DATA_DEP";
    case FeatureLabel::kSharedState:
      return "SHARED_STATE";
  }
  return "";
}

const char* DirectionName(Direction direction) {
  switch (direction) {
    case Direction::kNone:
      return "NONE";
    case Direction::kTargetToCandidate:
      return "TARGET_TO_CANDIDATE";
    case Direction::kCandidateToTarget:
      return "CANDIDATE_TO_TARGET";
    case Direction::kBoth:
      return "BOTH";
  }
  return "";
}

std::optional<FeatureLabel> ParseLabel(std::string_view name) {
  for (FeatureLabel l : kAllLabels) {
    if (name == LabelName(l)) return l;
  }
  return std::nullopt;
}

FeatureCategory CategoryOf(FeatureLabel label) {
  switch (label) {
    case FeatureLabel::kOverloading:
    case FeatureLabel::kSharedSigTokensAndTypes:
      return FeatureCategory::kIntention;
    case FeatureLabel::kDirectCall:
    case FeatureLabel::kSharedCalls:
      return FeatureCategory::kBehavior;
    case FeatureLabel::kDirectDataDep:
    case FeatureLabel::kSharedState:
      return FeatureCategory::kState;
  }
  return FeatureCategory::kIntention;
}

bool CoupledPair::HasLabel(FeatureLabel label) const {
  return std::any_of(features.begin(), features.end(),
                     [&](const CouplingFeature& f) { return f.label == label; });
}

const std::set<std::string>& DefaultIgnoredBuiltins() {
  static const std::set<std::string> kIgnored = {"print",      "length",          "assertEquals",
                                                 "assertTrue", "assertNotEquals", "assertFalse"};
  return kIgnored;
}

std::vector<CouplingFeature> MatchFeatures(const MethodFacts& target, const MethodFacts& candidate,
                                           const CouplingConfig& config) {
  std::vector<CouplingFeature> out;
  if (auto f = Intention(target, candidate, config)) out.push_back(std::move(*f));
  if (auto f = Behavior(target, candidate, config)) out.push_back(std::move(*f));
  if (auto f = State(target, candidate)) out.push_back(std::move(*f));
  return out;
}

std::vector<CoupledPair> AnalyzeCouplingFacts(const MethodFacts& target,
                                              const std::vector<MethodFacts>& members,
                                              const CouplingConfig& config) {
  std::vector<CoupledPair> pairs;
  for (const auto& m : members) {
    if (m.method == target.method) continue;
    auto features = MatchFeatures(target, m, config);
    if (features.empty()) continue;
    pairs.push_back(CoupledPair{target.method, m.method, std::move(features)});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const CoupledPair& a, const CoupledPair& b) {
    if (a.features.size() != b.features.size()) return a.features.size() > b.features.size();
    if (a.candidate.name != b.candidate.name) return a.candidate.name < b.candidate.name;
    return a.candidate.ToString() < b.candidate.ToString();
  });
  return pairs;
}

std::vector<CoupledPair> AnalyzeCoupling(const minilang::Program& program, const MethodRef& target,
                                         const CouplingConfig& config) {
  MethodFacts target_facts = code_model::ExtractFacts(program, target, config.facts);
  auto members = code_model::ExtractClassFacts(program, target.class_name, config.facts);
  return AnalyzeCouplingFacts(target_facts, members, config);
}

std::string FeatureSummary(const CoupledPair& pair) {
  std::string out = "Coupled methods: " + pair.target.ToString() + " and " +
                    pair.candidate.ToString() + "\n";
  for (FeatureCategory category :
       {FeatureCategory::kIntention, FeatureCategory::kBehavior, FeatureCategory::kState}) {
    bool header = false;
    for (const auto& f : pair.features) {
      if (f.category() != category) continue;
      if (!header) {
        out += std::string("### ") + SectionTitle(category) + ":\n";
        header = true;
      }
      out += "    * " + LabelText(f);
      if (f.direction != Direction::kNone) {
        out += " (" + std::string(DirectionName(f.direction)) + ")";
      }
      out += "\n";
      for (const auto& e : f.evidence) out += "        * " + e + "\n";
    }
  }
  return out;
}

nlohmann::json PairToJson(const CoupledPair& pair) {
  nlohmann::json features = nlohmann::json::array();
  for (const auto& f : pair.features) {
    nlohmann::json j;
    j["category"] = CategoryName(f.category());
    j["label"] = LabelName(f.label);
    j["evidence"] = f.evidence;
    if (f.direction != Direction::kNone) j["direction"] = DirectionName(f.direction);
    features.push_back(std::move(j));
  }
  return {{"target", pair.target.ToString()},
          {"candidate", pair.candidate.ToString()},
          {"features", std::move(features)}};
}

CoupledPair PairFromJson(const nlohmann::json& json) {
  auto ref = [&](const char* key) {
    auto parsed = minilang::ParseMethodRef(json.at(key).get<std::string>());
    if (!parsed) throw Error(ErrorCode::kInvalidArgument, std::string("bad method ref in ") + key);
    return *parsed;
  };
  CoupledPair pair{ref("target"), ref("candidate"), {}};
  for (const auto& j : json.at("features")) {
    auto label = ParseLabel(j.at("label").get<std::string>());
    if (!label) throw Error(ErrorCode::kInvalidArgument, "unknown coupling label");
    CouplingFeature f{*label, Direction::kNone, j.at("evidence").get<std::vector<std::string>>()};
    if (j.contains("direction")) {
      std::string d = j["direction"].get<std::string>();
      for (Direction candidate : {Direction::kTargetToCandidate, Direction::kCandidateToTarget,
                                  Direction::kBoth}) {
        if (d == DirectionName(candidate)) f.direction = candidate;
      }
    }
    pair.features.push_back(std::move(f));
  }
  return pair;
}

}  // namespace mtcgen::coupling
