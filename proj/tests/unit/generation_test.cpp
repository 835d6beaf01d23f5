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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "code_model/corpus.hpp"
#include "common/error.hpp"
#include "common/files.hpp"
#include "generation/candidate.hpp"
#include "generation/prompt.hpp"
#include "generation/repair.hpp"
#include "minilang/printer.hpp"
#include "stub/script.hpp"
#include "support/pairs.hpp"
#include "support/temp_dir.hpp"

namespace mtcgen::generation {
namespace {

using code_model::Corpus;
using code_model::LoadCorpus;
using stub::ResponderProvider;
using stub::ScriptResponder;
using stub::ScriptRule;
using testing::CorpusDir;
using testing::kDecrypt;
using testing::kEncrypt;
using testing::kEncryptWithAbecedarium;
using testing::MustPair;

constexpr const char* kRoundTripPairTitle =
    "`AESCodec.encryptText(string,SecretKey)` and `AESCodec.decryptText(list<int>,SecretKey)`";

class AesGenerationTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = LoadCorpus(CorpusDir("aes"));
    round_trip_ = MustPair(*corpus_.program, kEncrypt, kDecrypt);
    config_.provider.kind = llm::ProviderKind::kReplay;
    config_.provider.fixture_path = "unused";
  }

  const minilang::Program& program() const { return *corpus_.program; }

  Corpus corpus_;
  coupling::CoupledPair round_trip_;
  GenerationConfig config_;
};

TEST_F(AesGenerationTest, PromptIsDeterministicAndOrdered) {
  PromptBundle a = BuildPrompt(round_trip_, corpus_);
  PromptBundle b = BuildPrompt(round_trip_, corpus_);
  std::string text = a.Render();
  EXPECT_EQ(text, b.Render());
  std::vector<std::string> headings = {"# Method pair",
                                       "# Code of the paired methods",
                                       "# Coupling features on the paired methods",
                                       "# Invocation examples",
                                       "# Skeleton of the container class",
                                       "# Deliverable"};
  std::size_t at = 0;
  for (const auto& h : headings) {
    std::size_t found = text.find(h, at);
    ASSERT_NE(found, std::string::npos) << h;
    at = found;
  }
  EXPECT_EQ(a.test_class_name, "AESCodecEncryptTextDecryptTextMTC");
  EXPECT_NE(text.find(kRoundTripPairTitle), std::string::npos);
  EXPECT_EQ(text, ReadFile(testing::SourceDir() / "tests/golden/aes_round_trip_prompt.txt"));
}

TEST_F(AesGenerationTest, PromptCarriesInvocationExamples) {
  PromptBundle bundle = BuildPrompt(round_trip_, corpus_);
  ASSERT_FALSE(bundle.invocation_examples.empty());
  EXPECT_NE(bundle.Render().find("AESCodecTest.mini"), std::string::npos);
  PromptConfig excluded;
  excluded.excluded_example_paths = {"test/AESCodecTest.mini"};
  PromptBundle without = BuildPrompt(round_trip_, corpus_, excluded);
  EXPECT_TRUE(without.invocation_examples.empty());
  EXPECT_NE(without.Render().find("No invocation examples available."), std::string::npos);
}

TEST(PromptTest, NoExamplesForIsolatedCorpus) {
  Corpus corpus = LoadCorpus(CorpusDir("base64"));
  auto pair = MustPair(*corpus.program, "Base64.base642bytes(string)",
                       "Base64.base642bytes(string,string)");
  PromptBundle bundle = BuildPrompt(pair, corpus);
  EXPECT_TRUE(bundle.invocation_examples.empty());
  EXPECT_NE(bundle.Render().find("# Invocation examples\nNo invocation examples available."),
            std::string::npos);
}

TEST(PromptTest, SkeletonTruncatesToBudget) {
  Corpus corpus = LoadCorpus(CorpusDir("aes"));
  const minilang::ClassDecl* cipher = corpus.program->FindClass("Cipher");
  ASSERT_NE(cipher, nullptr);
  bool truncated = false;
  std::string full = ClassSkeleton(*cipher, 1 << 20, &truncated);
  EXPECT_FALSE(truncated);
  std::string small = ClassSkeleton(*cipher, 80, &truncated);
  EXPECT_TRUE(truncated);
  EXPECT_LT(small.size(), full.size());
  EXPECT_NE(small.find("remaining members omitted"), std::string::npos);
}

TEST(AttemptMessageTest, AttemptsDiffer) {
  PromptBundle bundle;
  bundle.pair_title = "`A.f()` and `A.g()`";
  EXPECT_NE(AttemptMessage(bundle, 1, 5), AttemptMessage(bundle, 2, 5));
  EXPECT_NE(AttemptMessage(bundle, 2, 5).find("# Attempt\n2 of 5"), std::string::npos);
}

TEST(FindCodeTest, Cases) {
  EXPECT_EQ(FindCode("text\n```mini\nclass A { }\n```\nmore ```x\ny```"), "class A { }\n");
  EXPECT_EQ(FindCode("```\nclass A { }"), "class A { }");
  EXPECT_EQ(FindCode("class A { }"), "class A { }");
  EXPECT_FALSE(FindCode("A round trip should hold for every class of inputs.").has_value());
}

TEST_F(AesGenerationTest, ExtractionOutcomes) {
  Extraction fenced = ExtractTestClass(
      "Here:\n```mini\nclass T {\n    @Test\n    void t() {\n        assertEquals(3, "
      "length(AESCodec.encryptText(\"abc\", SecretKey.of(1))));\n    }\n}\n```\n",
      program());
  EXPECT_TRUE(fenced.ok()) << fenced.Describe();
  EXPECT_EQ(fenced.checked->decl.name, "T");

  Extraction prose = ExtractTestClass("The relation is a round trip.", program());
  EXPECT_EQ(prose.error, ExtractionError::kNoCodeBlock);

  Extraction unresolved = ExtractTestClass(
      "```\nclass T {\n    @Test\n    void t() {\n        AESCodec.encrypt(\"a\", null);\n    "
      "}\n}\n```",
      program());
  EXPECT_EQ(unresolved.error, ExtractionError::kParseFailed);
  EXPECT_TRUE(minilang::HasCode(unresolved.diagnostics, minilang::DiagCode::kUnresolvedSymbol));
  EXPECT_TRUE(unresolved.parsed.has_value());

  Extraction no_tests = ExtractTestClass("```\nclass T {\n    void helper() {\n    }\n}\n```",
                                         program());
  EXPECT_EQ(no_tests.error, ExtractionError::kNoTestMethods);

  Extraction syntax = ExtractTestClass("```\nclass T { @Test void t( }\n```", program());
  EXPECT_EQ(syntax.error, ExtractionError::kParseFailed);
  EXPECT_FALSE(syntax.parsed.has_value());
}

TEST_F(AesGenerationTest, StaticRepairRebindsUniqueMatches) {
  Extraction slip = ExtractTestClass(
      "```\nclass T {\n    @Test\n    void t() {\n        list<int> c = "
      "aescodec.encryptText(\"ab\", SecretKey.of(1));\n        assertEquals(2, length(c));\n    "
      "}\n}\n```",
      program());
  ASSERT_TRUE(slip.parsed.has_value());
  RepairResult repair = RepairUnresolvedSymbols(program(), *slip.parsed);
  ASSERT_TRUE(repair.repaired.has_value());
  EXPECT_EQ(repair.rebinds, (std::vector<std::string>{"aescodec -> AESCodec"}));
  Extraction fixed = CheckTestCode(minilang::PrintClass(repair.repaired->decl), program());
  EXPECT_TRUE(fixed.ok()) << fixed.Describe();

  Extraction wrong_method = ExtractTestClass(
      "```\nclass T {\n    @Test\n    void t() {\n        AESCodec.encrypt(\"a\", null);\n    "
      "}\n}\n```",
      program());
  ASSERT_TRUE(wrong_method.parsed.has_value());
  RepairResult none = RepairUnresolvedSymbols(program(), *wrong_method.parsed);
  EXPECT_FALSE(none.repaired.has_value());
  EXPECT_EQ(none.unrepaired, (std::vector<std::string>{"encrypt"}));
}

TEST(AmplifiedNameTest, Cases) {
  int k = 0;
  EXPECT_TRUE(IsAmplifiedTestName("MTC_input1", 10, &k));
  EXPECT_EQ(k, 1);
  EXPECT_TRUE(IsAmplifiedTestName("MTC_input10", 10, &k));
  EXPECT_EQ(k, 10);
  EXPECT_FALSE(IsAmplifiedTestName("MTC_input11", 10));
  EXPECT_FALSE(IsAmplifiedTestName("MTC_input0", 10));
  EXPECT_FALSE(IsAmplifiedTestName("MTC_input01", 10));
  EXPECT_FALSE(IsAmplifiedTestName("MTC_input", 10));
  EXPECT_FALSE(IsAmplifiedTestName("MTC_inputX", 10));
  EXPECT_FALSE(IsAmplifiedTestName("MTC", 10));
}

TEST_F(AesGenerationTest, ScriptedAttemptsFollowRefinementLadder) {
  ResponderProvider provider(ScriptResponder(testing::AesScript()));
  PairGeneration gen = GenerateForPair(round_trip_, corpus_, provider, config_);
  EXPECT_TRUE(gen.failures.empty());
  ASSERT_EQ(gen.candidates.size(), 5u);
  std::vector<bool> executable;
  std::vector<std::size_t> log_sizes;
  for (const auto& c : gen.candidates) {
    executable.push_back(c.executable);
    log_sizes.push_back(c.log.size());
    EXPECT_LE(c.log.size(), 3u);
  }
  EXPECT_EQ(executable, (std::vector<bool>{true, true, true, false, true}));
  EXPECT_EQ(log_sizes, (std::vector<std::size_t>{1, 3, 2, 2, 1}));

  const CandidateMtc& repaired = gen.candidates[1];
  EXPECT_EQ(repaired.log[1].stage, RefinementStage::kLlmRevision);
  EXPECT_FALSE(repaired.log[1].ok);
  EXPECT_EQ(repaired.log[2].stage, RefinementStage::kStaticRepair);
  EXPECT_TRUE(repaired.log[2].ok);
  EXPECT_NE(repaired.log[2].detail.find("aescodec -> AESCodec"), std::string::npos);
  EXPECT_NE(repaired.code.find("AESCodec.encryptText(plainText, secKey)"), std::string::npos);

  const CandidateMtc& revised = gen.candidates[2];
  EXPECT_EQ(revised.log[1].stage, RefinementStage::kLlmRevision);
  EXPECT_TRUE(revised.log[1].ok);

  const CandidateMtc& prose = gen.candidates[3];
  EXPECT_NE(prose.log[0].detail.find("NO_CODE_BLOCK"), std::string::npos);
  EXPECT_FALSE(prose.test_class.has_value());

  for (const auto& c : gen.candidates) {
    ASSERT_TRUE(c.session.has_value());
  }
  EXPECT_NE(gen.candidates[0].session->id(), gen.candidates[1].session->id());
  nlohmann::json j = CandidateToJson(repaired);
  EXPECT_EQ(j.at("refinementLog").size(), 3u);
  EXPECT_EQ(j.at("refinementLog")[2].at("stage"), "static-repair");
}

TEST_F(AesGenerationTest, ProviderMissesBecomeAttemptFailures) {
  std::vector<ScriptRule> rules;
  for (const auto& rule : testing::AesScript()) {
    bool drop = false;
    for (const auto& s : rule.all) drop = drop || s == "# Attempt\n2 of" || s == "# Attempt\n4 of";
    if (!drop) rules.push_back(rule);
  }
  ResponderProvider provider(ScriptResponder(rules));
  PairGeneration gen = GenerateForPair(round_trip_, corpus_, provider, config_);
  ASSERT_EQ(gen.candidates.size(), 3u);
  ASSERT_EQ(gen.failures.size(), 2u);
  EXPECT_EQ(gen.failures[0].attempt, 2);
  EXPECT_EQ(gen.failures[1].attempt, 4);
  EXPECT_EQ(gen.failures[0].code, ErrorCode::kFixtureMiss);
}

TEST_F(AesGenerationTest, AmplificationKeepsWellFormedInputs) {
  ResponderProvider provider(ScriptResponder(testing::AesScript()));
  PairGeneration gen = GenerateForPair(round_trip_, corpus_, provider, config_);
  AmplifiedMtc amplified = Amplify(gen.candidates[0], provider, program(), 10);
  EXPECT_FALSE(amplified.degraded) << amplified.note;
  EXPECT_EQ(amplified.requested, 10);
  EXPECT_EQ(amplified.effective, 5);
  EXPECT_TRUE(amplified.dropped.empty());
  EXPECT_EQ(amplified.test_class.decl.methods.size(), 5u);
  EXPECT_EQ(gen.candidates[0].session->messages().size(), 5u);
}

TEST_F(AesGenerationTest, AmplificationDropsMisnamedTests) {
  std::string reply = "```mini\nclass AESCodecEncryptTextDecryptTextMTC {\n";
  for (int k = 1; k <= 10; ++k) {
    std::string name = k == 7 ? "testExtra" : "MTC_input" + std::to_string(k);
    reply += "    @Test\n    void " + name +
             "() {\n        SecretKey key = SecretKey.of(" + std::to_string(k) +
             ");\n        assertEquals(\"abc\", AESCodec.decryptText(AESCodec.encryptText(\"abc\", "
             "key), key));\n    }\n\n";
  }
  reply += "}\n```\n";
  std::vector<ScriptRule> rules = {{{kRoundTripPairTitle}, {"MTC_input1()"}, reply}};
  for (auto& r : testing::AesScript()) rules.push_back(r);
  ResponderProvider provider(ScriptResponder(rules));
  PairGeneration gen = GenerateForPair(round_trip_, corpus_, provider, config_);
  AmplifiedMtc amplified = Amplify(gen.candidates[0], provider, program(), 10);
  EXPECT_FALSE(amplified.degraded);
  EXPECT_EQ(amplified.effective, 9);
  ASSERT_EQ(amplified.dropped.size(), 1u);
  EXPECT_EQ(amplified.dropped[0].rfind("testExtra", 0), 0u);
}

TEST_F(AesGenerationTest, AmplificationDegradesOnParseFailure) {
  std::vector<ScriptRule> rules = {
      {{kRoundTripPairTitle}, {"MTC_input1()"}, "```\nclass Broken { @Test void MTC_input1( }\n```"}};
  for (auto& r : testing::AesScript()) rules.push_back(r);
  ResponderProvider provider(ScriptResponder(rules));
  PairGeneration gen = GenerateForPair(round_trip_, corpus_, provider, config_);
  AmplifiedMtc amplified = Amplify(gen.candidates[0], provider, program(), 10);
  EXPECT_TRUE(amplified.degraded);
  EXPECT_EQ(amplified.effective, 1);
  ASSERT_EQ(amplified.test_class.decl.methods.size(), 1u);
  EXPECT_EQ(amplified.test_class.decl.methods[0].name, "MTC_input1");
  EXPECT_NE(amplified.note.find("PARSE_FAILED"), std::string::npos);
}

TEST_F(AesGenerationTest, AmplificationDegradesWhenPairIsNotExercised) {
  ResponderProvider provider(ScriptResponder(testing::AesScript()));
  PairGeneration gen = GenerateForPair(round_trip_, corpus_, provider, config_);
  AmplifiedMtc amplified = Amplify(gen.candidates[4], provider, program(), 10);
  EXPECT_TRUE(amplified.degraded);
  EXPECT_EQ(amplified.dropped.size(), 2u);
  EXPECT_EQ(amplified.test_class.decl.methods[0].name, "MTC_input1");
}

TEST_F(AesGenerationTest, SecondPairHasOneScriptedAttempt) {
  auto pair = MustPair(program(), kEncrypt, kEncryptWithAbecedarium);
  ResponderProvider provider(ScriptResponder(testing::AesScript()));
  PairGeneration gen = GenerateForPair(pair, corpus_, provider, config_);
  ASSERT_EQ(gen.candidates.size(), 1u);
  EXPECT_EQ(gen.failures.size(), 4u);
  ASSERT_TRUE(gen.candidates[0].executable);
  AmplifiedMtc amplified = Amplify(gen.candidates[0], provider, program(), 10);
  EXPECT_FALSE(amplified.degraded);
  EXPECT_EQ(amplified.effective, 5);
}

}  // namespace
}  // namespace mtcgen::generation
