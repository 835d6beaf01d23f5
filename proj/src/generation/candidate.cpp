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

#include "generation/candidate.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "generation/repair.hpp"
#include "minilang/printer.hpp"

namespace mtcgen::generation {
namespace {

using namespace minilang;

constexpr std::string_view kFence = "```";
constexpr std::string_view kAmplifiedPrefix = "MTC_input";

const TestClass* FirstTestClass(const std::vector<TestClass>& classes) {
  for (const auto& c : classes) {
    if (std::any_of(c.decl.methods.begin(), c.decl.methods.end(),
                    [](const MethodDecl& m) { return m.IsTest(); })) {
      return &c;
    }
  }
  return nullptr;
}

bool IsFailureKind(TestOutcome::Kind kind) {
  return kind == TestOutcome::Kind::kRuntimeError || kind == TestOutcome::Kind::kTimeout ||
         kind == TestOutcome::Kind::kCompileError;
}

std::string OutcomeProblems(const TestOutcomes& outcomes) {
  std::string out;
  for (const auto& [name, outcome] : outcomes) {
    out += name + ": " + std::string(OutcomeKindName(outcome.kind));
    if (!outcome.message.empty()) out += ": " + outcome.message;
    out += "\n";
  }
  return out;
}

bool CallsBoth(const Program& program, const CheckedTestClass& cls, const MethodDecl& method,
               const coupling::CoupledPair& pair) {
  return code_model::MethodCalls(program, cls.semantics, method, pair.target) &&
         code_model::MethodCalls(program, cls.semantics, method, pair.candidate);
}

std::optional<CheckedTestClass> Check(const Program& program, const TestClass& test) {
  TestCheckResult result = CheckTestClass(program, test);
  if (auto* checked = std::get_if<CheckedTestClass>(&result)) return std::move(*checked);
  return std::nullopt;
}

ClassDecl WithoutTests(const ClassDecl& cls) {
  ClassDecl out = cls;
  out.methods.clear();
  for (const auto& m : cls.methods) {
    if (!m.IsTest()) out.methods.push_back(m);
  }
  return out;
}

}  // namespace

const char* ExtractionErrorName(ExtractionError error) {
  switch (error) {
    case ExtractionError::kNone:
      return "NONE";
    case ExtractionError::kNoCodeBlock:
      return "NO_CODE_BLOCK";
    case ExtractionError::kParseFailed:
      return "PARSE_FAILED";
    case ExtractionError::kNoTestMethods:
      return "NO_TEST_METHODS";
  }
  return "";
}

std::string Extraction::Describe() const {
  std::string out = ExtractionErrorName(error);
  if (!diagnostics.empty()) out += "\n" + FormatDiagnostics(diagnostics);
  return out;
}

const char* RefinementStageName(RefinementStage stage) {
  switch (stage) {
    case RefinementStage::kInitial:
      return "initial";
    case RefinementStage::kLlmRevision:
      return "llm-revision";
    case RefinementStage::kStaticRepair:
      return "static-repair";
  }
  return "";
}

std::optional<std::string> FindCode(std::string_view reply) {
  auto open = reply.find(kFence);
  if (open != std::string_view::npos) {
    auto line_end = reply.find('\n', open);
    if (line_end == std::string_view::npos) return std::string();
    auto close = reply.find(kFence, line_end + 1);
    auto body = reply.substr(line_end + 1, close == std::string_view::npos
                                               ? std::string_view::npos
                                               : close - line_end - 1);
    return std::string(body);
  }
  static const std::regex kClassHead(R"(\bclass\s+[A-Za-z_]\w*\s*\{)");
  std::string text(reply);
  if (std::regex_search(text, kClassHead)) return text;
  return std::nullopt;
}

Extraction CheckTestCode(const std::string& code, const Program& program,
                         const std::string& path) {
  Extraction out;
  out.code = code;
  TestParseResult parsed = ParseTestSource(path, code);
  if (!parsed.diagnostics.empty()) {
    out.error = ExtractionError::kParseFailed;
    out.diagnostics = parsed.diagnostics;
    return out;
  }
  const TestClass* test = FirstTestClass(parsed.classes);
  if (test == nullptr) {
    out.error = ExtractionError::kNoTestMethods;
    return out;
  }
  out.parsed = *test;
  TestCheckResult checked = CheckTestClass(program, *test);
  if (auto* diags = std::get_if<DiagnosticList>(&checked)) {
    out.error = ExtractionError::kParseFailed;
    out.diagnostics = *diags;
    return out;
  }
  out.checked = std::move(std::get<CheckedTestClass>(checked));
  return out;
}

Extraction ExtractTestClass(std::string_view reply, const Program& program,
                            const std::string& path) {
  auto code = FindCode(reply);
  if (!code) {
    Extraction out;
    out.error = ExtractionError::kNoCodeBlock;
    return out;
  }
  return CheckTestCode(*code, program, path);
}

std::string AttemptMessage(const PromptBundle& bundle, int attempt, int attempts) {
  return bundle.Render() + "\n# Attempt\n" + std::to_string(attempt) + " of " +
         std::to_string(attempts) + "\n";
}

std::string RevisionMessage(const std::string& problem) {
  return "The test class you produced cannot be used:\n" + problem +
         "\nRevise it and reply with the complete corrected test class in a single ```mini code "
         "block.";
}

std::string AmplificationMessage(int inputs) {
  std::string n = std::to_string(inputs);
  return "Review the previous conversation and context, and the metamorphic test case you "
         "produced. Apply its metamorphic relation to " + n +
         " new inputs (such as boundary values, random data, or special characters) by "
         "replacing the original input. Output the new test cases within the same class, named "
         "MTC_input1() ... MTC_input" + n +
         "(), each annotated with @Test, in a single ```mini code block.";
}

void Evaluate(CandidateMtc& candidate, const Extraction& extraction, const Program& program,
              const Limits& limits) {
  candidate.code = extraction.parsed ? PrintClass(extraction.parsed->decl) : extraction.code;
  candidate.test_class = extraction.checked;
  candidate.outcomes.clear();
  candidate.executable = false;
  if (!extraction.checked) return;
  candidate.outcomes = RunCheckedTestClass(program, *extraction.checked, limits);
  candidate.executable =
      std::any_of(candidate.outcomes.begin(), candidate.outcomes.end(),
                  [](const auto& entry) { return !IsFailureKind(entry.second.kind); });
}

namespace {

std::string Problem(const CandidateMtc& candidate, const Extraction& extraction) {
  if (!extraction.ok()) return extraction.Describe();
  return "every test ended in an error:\n" + OutcomeProblems(candidate.outcomes);
}

std::string AttemptPath(const CandidateMtc& candidate) {
  return "attempt" + std::to_string(candidate.attempt) + ".mini";
}

}  // namespace

void Refine(CandidateMtc& candidate, const Extraction& initial, llm::ChatProvider& provider,
            const Program& program, const GenerationConfig& config) {
  if (candidate.executable) return;
  Extraction latest = initial;
  for (int round = 0; round < config.llm_revisions && !candidate.executable; ++round) {
    if (!candidate.session) break;
    std::string reply;
    try {
      reply = llm::Send(*candidate.session, provider,
                        RevisionMessage(Problem(candidate, latest)));
    } catch (const Error& e) {
      candidate.log.push_back({RefinementStage::kLlmRevision, false, e.what()});
      continue;
    }
    Extraction revised = ExtractTestClass(reply, program, AttemptPath(candidate));
    Evaluate(candidate, revised, program, config.limits);
    candidate.log.push_back({RefinementStage::kLlmRevision, candidate.executable,
                             candidate.executable ? "" : Problem(candidate, revised)});
    if (revised.parsed || !latest.parsed) latest = std::move(revised);
  }
  if (candidate.executable || !latest.parsed ||
      !HasCode(latest.diagnostics, DiagCode::kUnresolvedSymbol)) {
    return;
  }
  RepairResult repair = RepairUnresolvedSymbols(program, *latest.parsed);
  std::string detail;
  for (const auto& r : repair.rebinds) detail += "rebound " + r + "\n";
  for (const auto& u : repair.unrepaired) detail += "no unique declaration for " + u + "\n";
  if (repair.repaired) {
    Extraction repaired =
        CheckTestCode(PrintClass(repair.repaired->decl), program, AttemptPath(candidate));
    Evaluate(candidate, repaired, program, config.limits);
    if (!candidate.executable) detail += Problem(candidate, repaired);
  }
  candidate.log.push_back({RefinementStage::kStaticRepair, candidate.executable, detail});
}

bool IsAmplifiedTestName(std::string_view name, int max_index, int* index) {
  if (name.substr(0, kAmplifiedPrefix.size()) != kAmplifiedPrefix) return false;
  std::string_view digits = name.substr(kAmplifiedPrefix.size());
  if (digits.empty() || digits.size() > 6 || digits[0] == '0') return false;
  int k = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    k = k * 10 + (c - '0');
  }
  if (k < 1 || k > max_index) return false;
  if (index != nullptr) *index = k;
  return true;
}

namespace {

AmplifiedMtc Degrade(AmplifiedMtc out, const CandidateMtc& candidate, const Program& program,
                     std::string note) {
  out.degraded = true;
  out.note = std::move(note);
  const CheckedTestClass& base = *candidate.test_class;
  const MethodDecl* chosen = nullptr;
  for (const auto& m : base.decl.methods) {
    if (!m.IsTest()) continue;
    if (chosen == nullptr) chosen = &m;
    if (CallsBoth(program, base, m, candidate.pair)) {
      chosen = &m;
      break;
    }
  }
  TestClass wrapped{WithoutTests(base.decl), base.path};
  if (chosen != nullptr) {
    MethodDecl test = *chosen;
    test.name = std::string(kAmplifiedPrefix) + "1";
    wrapped.decl.methods.push_back(std::move(test));
  }
  if (auto checked = Check(program, wrapped)) {
    out.test_class = std::move(*checked);
  } else {
    out.test_class = base;
  }
  out.code = PrintClass(out.test_class.decl);
  out.effective = 1;
  return out;
}

}  // namespace

AmplifiedMtc Amplify(CandidateMtc& candidate, llm::ChatProvider& provider,
                     const Program& program, int inputs) {
  if (!candidate.test_class || !candidate.session) {
    throw Error(ErrorCode::kInvalidArgument, "amplification needs an executable candidate");
  }
  AmplifiedMtc out;
  out.pair = candidate.pair;
  out.attempt = candidate.attempt;
  out.requested = inputs;
  std::string reply;
  try {
    reply = llm::Send(*candidate.session, provider, AmplificationMessage(inputs));
  } catch (const Error& e) {
    return Degrade(std::move(out), candidate, program, e.what());
  }
  auto code = FindCode(reply);
  if (!code) return Degrade(std::move(out), candidate, program, "NO_CODE_BLOCK");
  std::string path = "attempt" + std::to_string(candidate.attempt) + "_amplified.mini";
  TestParseResult parsed = ParseTestSource(path, *code);
  const TestClass* cls = FirstTestClass(parsed.classes);
  if (!parsed.diagnostics.empty() || cls == nullptr) {
    return Degrade(std::move(out), candidate, program,
                   parsed.diagnostics.empty() ? "NO_TEST_METHODS"
                                              : "PARSE_FAILED\n" +
                                                    FormatDiagnostics(parsed.diagnostics));
  }
  TestClass kept{WithoutTests(cls->decl), path};
  std::set<int> seen;
  for (const auto& m : cls->decl.methods) {
    if (!m.IsTest()) continue;
    int k = 0;
    if (!IsAmplifiedTestName(m.name, inputs, &k) || seen.count(k)) {
      out.dropped.push_back(m.name + ": not named MTC_input1..MTC_input" +
                            std::to_string(inputs));
      continue;
    }
    TestClass single{WithoutTests(cls->decl), path};
    single.decl.methods.push_back(m);
    auto checked = Check(program, single);
    if (!checked) {
      out.dropped.push_back(m.name + ": does not type-check");
      continue;
    }
    if (!CallsBoth(program, *checked, checked->decl.methods.back(), candidate.pair)) {
      out.dropped.push_back(m.name + ": does not invoke both methods of the pair");
      continue;
    }
    seen.insert(k);
    kept.decl.methods.push_back(m);
  }
  if (seen.size() < 2) {
    return Degrade(std::move(out), candidate, program,
                   "only " + std::to_string(seen.size()) + " usable amplified tests");
  }
  auto checked = Check(program, kept);
  if (!checked) return Degrade(std::move(out), candidate, program, "amplified class rejected");
  out.test_class = std::move(*checked);
  out.code = PrintClass(out.test_class.decl);
  out.effective = static_cast<int>(seen.size());
  return out;
}

PairGeneration GenerateForPair(const coupling::CoupledPair& pair,
                               const code_model::Corpus& corpus, llm::ChatProvider& provider,
                               const GenerationConfig& config) {
  PairGeneration out;
  out.prompt = BuildPrompt(pair, corpus, config.prompt);
  const Program& program = *corpus.program;
  llm::ChatSession base(out.prompt.system_message, config.provider);
  for (int k = 1; k <= config.attempts; ++k) {
    llm::ChatSession session = base.Fork();
    std::string reply;
    try {
      reply = llm::Send(session, provider, AttemptMessage(out.prompt, k, config.attempts));
    } catch (const Error& e) {
      out.failures.push_back({k, e.code(), e.what()});
      continue;
    }
    CandidateMtc candidate;
    candidate.pair = pair;
    candidate.attempt = k;
    candidate.session = std::move(session);
    Extraction extraction = ExtractTestClass(reply, program, AttemptPath(candidate));
    Evaluate(candidate, extraction, program, config.limits);
    candidate.log.push_back({RefinementStage::kInitial, candidate.executable,
                             candidate.executable ? "" : Problem(candidate, extraction)});
    Refine(candidate, extraction, provider, program, config);
    out.candidates.push_back(std::move(candidate));
  }
  return out;
}

nlohmann::json CandidateToJson(const CandidateMtc& candidate) {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& e : candidate.log) {
    log.push_back({{"stage", RefinementStageName(e.stage)}, {"ok", e.ok}, {"detail", e.detail}});
  }
  nlohmann::json outcomes = nlohmann::json::object();
  for (const auto& [name, o] : candidate.outcomes) {
    outcomes[name] = {{"kind", OutcomeKindName(o.kind)}, {"message", o.message}};
  }
  return {{"attempt", candidate.attempt},
          {"executable", candidate.executable},
          {"testClass", candidate.test_class ? candidate.test_class->decl.name : ""},
          {"refinementLog", std::move(log)},
          {"outcomes", std::move(outcomes)},
          {"code", candidate.code}};
}

}  // namespace mtcgen::generation
