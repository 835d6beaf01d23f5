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

#ifndef MTCGEN_PIPELINE_PIPELINE_HPP_
#define MTCGEN_PIPELINE_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "code_model/corpus.hpp"
#include "coupling/coupling.hpp"
#include "json.hpp"
#include "llm_gateway/provider.hpp"
#include "minilang/interpreter.hpp"
#include "minilang/program.hpp"
#include "validation/verdict.hpp"

namespace mtcgen::pipeline {

inline constexpr int kSchemaVersion = 1;

struct PipelineConfig {
  std::filesystem::path corpus_path;
  // Method refs; empty means every method of every source class.
  std::vector<std::string> targets;
  llm::ProviderConfig provider;
  int attempts = 5;
  int amplified_inputs = 10;
  int llm_revisions = 1;
  std::size_t mutant_cap = 20;
  std::uint64_t seed = 0;
  minilang::Limits limits;
  std::filesystem::path output_dir = "out";
  int workers = 1;
  int max_in_flight = 4;
  validation::Aggregation aggregation = validation::Aggregation::kEveryMutant;
  std::vector<std::string> excluded_example_paths;

  // Throws Error(kConfig). The provider is checked separately, when it is
  // built from this config.
  void Validate() const;
};

// Relative paths resolve against `base_dir`.
PipelineConfig PipelineConfigFromJson(const nlohmann::json& json,
                                      const std::filesystem::path& base_dir);
PipelineConfig LoadPipelineConfig(const std::filesystem::path& path);
nlohmann::json PipelineConfigToJson(const PipelineConfig& config);

// Accepts `Class.name(types)` or an unambiguous `Class.name`. Throws
// Error(kUnknownMethod).
minilang::MethodRef ResolveMethod(const minilang::Program& program, const std::string& text);
std::vector<minilang::MethodRef> ResolveTargets(const minilang::Program& program,
                                                const std::vector<std::string>& targets);

// `()<>,` replaced by `_`.
std::string Slug(const std::string& text);

struct Metrics {
  int num_generated = 0;
  int executable = 0;
  int valid = 0;
  int false_alarms = 0;
  double pct_executable_mtc = 0.0;
  double pct_valid_mtc = 0.0;
  double pct_false_alarm = 0.0;
  bool task_successful = false;
};

// Recomputed from the per-candidate flags of one task record.
Metrics ComputeMetrics(const nlohmann::json& task);
nlohmann::json MetricsToJson(const Metrics& metrics);

struct RunResult {
  nlohmann::json report;
  // Some pair recorded a provider failure or a pair-level error.
  bool partial = false;
};

// Full pipeline. Writes the output tree and `report.json` under the output
// directory.
RunResult RunPipeline(const PipelineConfig& config, llm::ChatProvider& provider);
RunResult RunPipeline(const PipelineConfig& config);

// Generation only: candidates and refinement logs, no amplification.
RunResult GenerateCandidates(const PipelineConfig& config, llm::ChatProvider& provider);

// The metrics block of every task in a prior report.
nlohmann::json RenderMetrics(const nlohmann::json& report);

nlohmann::json AnalyzeJson(const code_model::Corpus& corpus,
                           const std::vector<minilang::MethodRef>& targets);
nlohmann::json FactsJson(const code_model::Corpus& corpus,
                         const std::vector<minilang::MethodRef>& methods);
nlohmann::json MutateJson(const code_model::Corpus& corpus, const coupling::CoupledPair& pair,
                          std::size_t cap, std::uint64_t seed);

struct ValidateRequest {
  std::string test_path;
  std::string test_source;
  std::size_t mutant_cap = 20;
  std::uint64_t seed = 0;
  minilang::Limits limits;
  validation::Aggregation aggregation = validation::Aggregation::kEveryMutant;
};

// Validates a hand-written or generated test class against the mutants of
// `pair`. Throws Error(kInvalidArgument) when the class does not check.
nlohmann::json ValidateJson(const code_model::Corpus& corpus, const coupling::CoupledPair& pair,
                            const ValidateRequest& request);

// The coupled pair (target, candidate); throws Error(kInvalidArgument) when
// the two methods are not coupled.
coupling::CoupledPair FindPair(const minilang::Program& program, const minilang::MethodRef& target,
                               const minilang::MethodRef& candidate);

// Per target: whether any retained MTC matches the skeleton of the corpus's
// own test for that target.
nlohmann::json CompareAgainstReference(const nlohmann::json& report,
                                       const code_model::Corpus& corpus);

}  // namespace mtcgen::pipeline

#endif  // MTCGEN_PIPELINE_PIPELINE_HPP_
