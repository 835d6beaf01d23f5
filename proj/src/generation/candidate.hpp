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

#ifndef MTCGEN_GENERATION_CANDIDATE_HPP_
#define MTCGEN_GENERATION_CANDIDATE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "code_model/corpus.hpp"
#include "common/error.hpp"
#include "coupling/coupling.hpp"
#include "generation/prompt.hpp"
#include "json.hpp"
#include "llm_gateway/chat.hpp"
#include "llm_gateway/provider.hpp"
#include "minilang/interpreter.hpp"
#include "minilang/program.hpp"

namespace mtcgen::generation {

enum class ExtractionError { kNone, kNoCodeBlock, kParseFailed, kNoTestMethods };

const char* ExtractionErrorName(ExtractionError error);

struct Extraction {
  ExtractionError error = ExtractionError::kNone;
  std::string code;
  // First class with a @Test method, when the code parsed.
  std::optional<minilang::TestClass> parsed;
  // Set iff error == kNone.
  std::optional<minilang::CheckedTestClass> checked;
  minilang::DiagnosticList diagnostics;

  bool ok() const { return error == ExtractionError::kNone; }
  std::string Describe() const;
};

// The first fenced code block, or the whole reply when it has no fence but
// declares a class. Nullopt for prose.
std::optional<std::string> FindCode(std::string_view reply);

Extraction ExtractTestClass(std::string_view reply, const minilang::Program& program,
                            const std::string& path = "generated.mini");

// Parses and type-checks `code` directly.
Extraction CheckTestCode(const std::string& code, const minilang::Program& program,
                         const std::string& path = "generated.mini");

enum class RefinementStage { kInitial, kLlmRevision, kStaticRepair };

const char* RefinementStageName(RefinementStage stage);

struct RefinementEntry {
  RefinementStage stage = RefinementStage::kInitial;
  bool ok = false;
  std::string detail;
};

struct CandidateMtc {
  coupling::CoupledPair pair;
  int attempt = 0;
  // Pretty-printed when the class parsed, the raw code otherwise.
  std::string code;
  std::optional<minilang::CheckedTestClass> test_class;
  // Outcomes on the corpus program; empty when the class does not check.
  minilang::TestOutcomes outcomes;
  // Type-checks and not every test ends in RUNTIME_ERROR or TIMEOUT.
  bool executable = false;
  std::vector<RefinementEntry> log;
  std::optional<llm::ChatSession> session;
};

struct AmplifiedMtc {
  coupling::CoupledPair pair;
  int attempt = 0;
  std::string code;
  minilang::CheckedTestClass test_class;
  int requested = 0;
  int effective = 0;
  bool degraded = false;
  std::string note;
  std::vector<std::string> dropped;
};

struct GenerationConfig {
  int attempts = 5;
  int amplified_inputs = 10;
  int llm_revisions = 1;
  PromptConfig prompt;
  minilang::Limits limits;
  llm::ProviderConfig provider;
};

struct AttemptFailure {
  int attempt = 0;
  ErrorCode code = ErrorCode::kInternal;
  std::string message;
};

struct PairGeneration {
  PromptBundle prompt;
  std::vector<CandidateMtc> candidates;
  std::vector<AttemptFailure> failures;
};

std::string AttemptMessage(const PromptBundle& bundle, int attempt, int attempts);
std::string RevisionMessage(const std::string& problem);
std::string AmplificationMessage(int inputs);

// Runs an extraction against the program and fills the executable verdict.
void Evaluate(CandidateMtc& candidate, const Extraction& extraction,
              const minilang::Program& program, const minilang::Limits& limits);

// One LLM revision round, then static symbol repair when the revision still
// fails on unresolved symbols. A no-op for executable candidates.
void Refine(CandidateMtc& candidate, const Extraction& initial, llm::ChatProvider& provider,
            const minilang::Program& program, const GenerationConfig& config);

bool IsAmplifiedTestName(std::string_view name, int max_index, int* index = nullptr);

// Extends the candidate's conversation with the amplification request. Never
// fails: without at least two usable amplified tests the candidate's own test
// is wrapped as MTC_input1 and the result is marked degraded.
AmplifiedMtc Amplify(CandidateMtc& candidate, llm::ChatProvider& provider,
                     const minilang::Program& program, int inputs);

PairGeneration GenerateForPair(const coupling::CoupledPair& pair,
                               const code_model::Corpus& corpus, llm::ChatProvider& provider,
                               const GenerationConfig& config);

nlohmann::json CandidateToJson(const CandidateMtc& candidate);

}  // namespace mtcgen::generation

#endif  // MTCGEN_GENERATION_CANDIDATE_HPP_
