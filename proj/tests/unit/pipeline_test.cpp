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

#include <random>
#include <string>

#include "code_model/corpus.hpp"
#include "common/error.hpp"
#include "common/files.hpp"
#include "llm_gateway/provider.hpp"
#include "pipeline/pipeline.hpp"
#include "stub/script.hpp"
#include "support/pairs.hpp"
#include "support/temp_dir.hpp"

namespace mtcgen::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::CorpusDir;
using testing::kDecrypt;
using testing::kEncrypt;
using testing::SourceDir;
using testing::TempDir;

fs::path AesConfigPath() { return SourceDir() / "tests/fixtures/configs/aes_replay.json"; }

PipelineConfig AesConfig(const fs::path& out) {
  PipelineConfig config = LoadPipelineConfig(AesConfigPath());
  config.output_dir = out;
  return config;
}

ErrorCode ConfigError(const json& j) {
  try {
    PipelineConfigFromJson(j, "/base");
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

const json* FindPairRecord(const json& report, const std::string& candidate) {
  for (const auto& pair : report["tasks"][0]["pairs"]) {
    if (pair["candidate"] == candidate) return &pair;
  }
  return nullptr;
}

TEST(ConfigTest, DefaultsAndRelativePaths) {
  PipelineConfig c = PipelineConfigFromJson({{"corpusPath", "corpus"}}, "/base");
  EXPECT_EQ(c.corpus_path, fs::path("/base/corpus"));
  EXPECT_EQ(c.output_dir, fs::path("/base/out"));
  EXPECT_TRUE(c.targets.empty());
  EXPECT_EQ(c.attempts, 5);
  EXPECT_EQ(c.amplified_inputs, 10);
  EXPECT_EQ(c.mutant_cap, 20u);
  EXPECT_EQ(c.llm_revisions, 1);
  EXPECT_EQ(c.provider.kind, llm::ProviderKind::kReplay);
}

TEST(ConfigTest, LoadsCommittedConfig) {
  PipelineConfig c = LoadPipelineConfig(AesConfigPath());
  EXPECT_EQ(c.targets, (std::vector<std::string>{"AESCodec.encryptText"}));
  EXPECT_EQ(fs::weakly_canonical(c.corpus_path), fs::weakly_canonical(CorpusDir("aes")));
  EXPECT_TRUE(fs::exists(c.provider.fixture_path));
  EXPECT_EQ(c.seed, 7u);
}

TEST(ConfigTest, RejectsUnusableConfigs) {
  EXPECT_EQ(ConfigError(json::array()), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"K", 5}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"K", 0}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"M", 0}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"workers", 0}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"Kk", 5}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"targets", "everything"}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"K", "five"}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"aggregation", "most"}}), ErrorCode::kConfig);
  EXPECT_EQ(ConfigError({{"corpusPath", "c"}, {"provider", {{"kind", "http"}}}}),
            ErrorCode::kConfig);
}

TEST(ConfigTest, JsonRoundTrip) {
  PipelineConfig c = LoadPipelineConfig(AesConfigPath());
  json once = PipelineConfigToJson(c);
  EXPECT_EQ(PipelineConfigToJson(PipelineConfigFromJson(once, "")), once);
  EXPECT_EQ(once["targets"], json::array({"AESCodec.encryptText"}));
  EXPECT_EQ(PipelineConfigToJson(PipelineConfigFromJson({{"corpusPath", "c"}}, ""))["targets"],
            "all-public");
}

TEST(ResolveTest, MethodRefs) {
  auto corpus = code_model::LoadCorpus(CorpusDir("aes"));
  EXPECT_EQ(ResolveMethod(*corpus.program, "AESCodec.encryptText").ToString(), kEncrypt);
  EXPECT_EQ(ResolveMethod(*corpus.program, kDecrypt).ToString(), kDecrypt);
  for (const char* bad : {"AESCodec.nothing", "Nope.encryptText", "AESCodec.encryptText(int)",
                          "Cipher.doFinal", "not a ref"}) {
    try {
      ResolveMethod(*corpus.program, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnknownMethod) << bad;
    }
  }
  EXPECT_EQ(ResolveTargets(*corpus.program, {}).size(), 11u);
}

TEST(SlugTest, ReplacesSignaturePunctuation) {
  EXPECT_EQ(Slug(kDecrypt), "AESCodec.decryptText_list_int__SecretKey_");
  EXPECT_EQ(Slug("A.f()"), "A.f__");
}

json Attempt(bool executable, bool valid) {
  return {{"executableMtc", executable}, {"valid", valid}};
}

TEST(MetricsTest, Definitions) {
  json task = {{"pairs",
                {{{"attempts", {Attempt(true, true), Attempt(true, false), Attempt(false, false)}}},
                 {{"attempts", {Attempt(false, false), Attempt(true, true)}}}}}};
  Metrics m = ComputeMetrics(task);
  EXPECT_EQ(m.num_generated, 5);
  EXPECT_EQ(m.executable, 3);
  EXPECT_EQ(m.valid, 2);
  EXPECT_EQ(m.false_alarms, 1);
  EXPECT_DOUBLE_EQ(m.pct_executable_mtc, 0.6);
  EXPECT_DOUBLE_EQ(m.pct_valid_mtc, 0.4);
  EXPECT_DOUBLE_EQ(m.pct_false_alarm, 1.0 / 3.0);
  EXPECT_TRUE(m.task_successful);

  Metrics empty = ComputeMetrics({{"pairs", json::array()}});
  EXPECT_EQ(empty.num_generated, 0);
  EXPECT_FALSE(empty.task_successful);
  EXPECT_DOUBLE_EQ(empty.pct_false_alarm, 0.0);
}

TEST(MetricsTest, ConsistencyOnRandomRecords) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    json pairs = json::array();
    for (int p = static_cast<int>(rng() % 4); p > 0; --p) {
      json attempts = json::array();
      for (int a = static_cast<int>(rng() % 6); a > 0; --a) {
        bool executable = rng() % 2 == 0;
        attempts.push_back(Attempt(executable, executable && rng() % 2 == 0));
      }
      pairs.push_back({{"attempts", attempts}});
    }
    Metrics m = ComputeMetrics({{"pairs", pairs}});
    EXPECT_LE(m.pct_valid_mtc, m.pct_executable_mtc);
    EXPECT_LE(m.pct_executable_mtc, 1.0);
    EXPECT_EQ(m.task_successful, m.valid > 0);
    if (m.executable > 0) {
      EXPECT_DOUBLE_EQ(m.pct_false_alarm,
                       1.0 - static_cast<double>(m.valid) / static_cast<double>(m.executable));
    }
  }
}

class AesRunTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir();
    result_ = new RunResult(RunPipeline(AesConfig(dir_->path() / "run")));
  }
  static void TearDownTestSuite() {
    delete result_;
    delete dir_;
  }

  static TempDir* dir_;
  static RunResult* result_;
};

TempDir* AesRunTest::dir_ = nullptr;
RunResult* AesRunTest::result_ = nullptr;

TEST_F(AesRunTest, RetainsTheRoundTrip) {
  const json& report = result_->report;
  EXPECT_EQ(report["schemaVersion"], kSchemaVersion);
  ASSERT_EQ(report["tasks"].size(), 1u);
  EXPECT_EQ(report["tasks"][0]["target"], kEncrypt);
  const json* pair = FindPairRecord(report, kDecrypt);
  ASSERT_NE(pair, nullptr);
  ASSERT_EQ((*pair)["attempts"].size(), 5u);
  const json& first = (*pair)["attempts"][0];
  EXPECT_EQ(first["verdict"]["decision"], "RETAINED");
  EXPECT_EQ(first["verdict"]["reason"], "p=0.80 > p' for all 4 mutants");
  EXPECT_EQ(first["amplification"]["effective"], 5);
  json expected = {{"methodPair", {kDecrypt, kEncrypt}},
                   {"inputRelation", json::array()},
                   {"assertionKind", "EQ"},
                   {"assertionElements", {"SOURCE_INPUT", "FOLLOWUP_OUTPUT"}},
                   {"testMethod", "MTC"}};
  EXPECT_EQ(first["skeleton"], expected);
  EXPECT_FALSE((*pair)["attempts"][3]["executable"]);
  EXPECT_FALSE((*pair)["attempts"][4]["isMtc"]);
}

TEST_F(AesRunTest, FiltersTheAbecedariumRelation) {
  const json* pair = FindPairRecord(result_->report, testing::kEncryptWithAbecedarium);
  ASSERT_NE(pair, nullptr);
  ASSERT_EQ((*pair)["attempts"].size(), 1u);
  EXPECT_EQ((*pair)["attempts"][0]["verdict"]["decision"], "FILTERED");
  EXPECT_EQ((*pair)["failures"].size(), 4u);
  EXPECT_EQ((*pair)["failures"][0]["code"], "FIXTURE_MISS");
  EXPECT_TRUE(result_->partial);
  EXPECT_TRUE(result_->report["partialFailure"]);
}

TEST_F(AesRunTest, Metrics) {
  const json& metrics = result_->report["tasks"][0]["metrics"];
  EXPECT_EQ(metrics["numGenerated"], 6);
  EXPECT_EQ(metrics["numExecutableMtc"], 4);
  EXPECT_EQ(metrics["numValidMtc"], 4);
  EXPECT_EQ(metrics["taskSuccessful"], true);
  EXPECT_EQ(RenderMetrics(result_->report)["tasks"][0]["metrics"], metrics);
}

TEST_F(AesRunTest, WritesOutputTree) {
  fs::path out = dir_->path() / "run";
  EXPECT_EQ(ReadFile(out / "report.json"), result_->report.dump(2) + "\n");
  fs::path pair = out / Slug(kEncrypt) / Slug(kDecrypt);
  for (const char* file : {"candidates.json", "mutants.diff", "attempt1/candidate.mini",
                           "attempt1/amplified.mini", "attempt1/verdict.json",
                           "attempt4/candidate.mini", "retained/attempt1.mini"}) {
    EXPECT_TRUE(fs::exists(pair / file)) << file;
  }
  EXPECT_FALSE(fs::exists(pair / "attempt4/amplified.mini"));
  json index = json::parse(ReadFile(pair / "candidates.json"));
  EXPECT_EQ(index["candidates"].size(), 5u);
  EXPECT_EQ(index["candidates"][1]["refinementLog"].size(), 3u);
  EXPECT_FALSE(fs::exists(out / Slug(kEncrypt) / Slug(testing::kEncryptWithAbecedarium) /
                          "retained"));
}

TEST_F(AesRunTest, RepeatedRunsAreByteIdentical) {
  TempDir other;
  PipelineConfig config = AesConfig(other.path());
  config.workers = 4;
  RunPipeline(config);
  EXPECT_EQ(ReadFile(other.path() / "report.json"), ReadFile(dir_->path() / "run/report.json"));
}

TEST_F(AesRunTest, ReferenceComparison) {
  auto corpus = code_model::LoadCorpus(CorpusDir("aes"));
  json same = CompareAgainstReference(result_->report, corpus);
  ASSERT_EQ(same["targets"].size(), 1u);
  EXPECT_EQ(same["targets"][0]["l1Consistency"], true);
  EXPECT_EQ(same["targets"][0]["l2Consistency"], true);
  EXPECT_EQ(same["targets"][0]["retained"], 3);

  json negated = result_->report;
  json other_pair = result_->report;
  for (auto& pair : negated["tasks"][0]["pairs"]) {
    for (auto& attempt : pair["attempts"]) {
      if (attempt.contains("skeleton")) attempt["skeleton"]["assertionKind"] = "NE";
    }
  }
  for (auto& pair : other_pair["tasks"][0]["pairs"]) {
    for (auto& attempt : pair["attempts"]) {
      if (attempt.contains("skeleton")) {
        attempt["skeleton"]["methodPair"] = {kEncrypt, testing::kEncryptWithAbecedarium};
      }
    }
  }
  json ne = CompareAgainstReference(negated, corpus)["targets"][0];
  EXPECT_EQ(ne["l1Consistency"], true);
  EXPECT_EQ(ne["l2Consistency"], false);
  json ac = CompareAgainstReference(other_pair, corpus)["targets"][0];
  EXPECT_EQ(ac["l1Consistency"], false);
  EXPECT_EQ(ac["l2Consistency"], false);
}

TEST(PipelineTest, IsolatedCorpusHasNoPairs) {
  TempDir dir;
  PipelineConfig config = PipelineConfigFromJson({{"corpusPath", CorpusDir("isolated").string()}},
                                                 dir.path());
  llm::ReplayProvider provider(std::vector<llm::FixtureEntry>{});
  RunResult result = RunPipeline(config, provider);
  ASSERT_FALSE(result.report["tasks"].empty());
  for (const auto& task : result.report["tasks"]) {
    EXPECT_TRUE(task["pairs"].empty());
    EXPECT_EQ(task["metrics"]["taskSuccessful"], false);
  }
  EXPECT_FALSE(result.partial);
}

TEST(PipelineTest, MissingCorpusIsFatal) {
  TempDir dir;
  PipelineConfig config =
      PipelineConfigFromJson({{"corpusPath", (dir.path() / "none").string()}}, dir.path());
  llm::ReplayProvider provider(std::vector<llm::FixtureEntry>{});
  try {
    RunPipeline(config, provider);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorpus);
  }
}

TEST(PipelineTest, MalformedRepliesNeverAbort) {
  for (const char* reply : {"```mini\nclass {{{\n```", "no code here", "```\n```",
                            "```mini\nclass T { void helper() { } }\n```"}) {
    TempDir dir;
    PipelineConfig config = AesConfig(dir.path());
    stub::ResponderProvider provider([&](const llm::ChatRequest&) { return reply; });
    RunResult result = RunPipeline(config, provider);
    const json& metrics = result.report["tasks"][0]["metrics"];
    EXPECT_EQ(metrics["numGenerated"], 10) << reply;
    EXPECT_EQ(metrics["numExecutableMtc"], 0) << reply;
    EXPECT_FALSE(result.partial) << reply;
  }
}

TEST(PipelineTest, ProviderOutageIsRecordedPerAttempt) {
  TempDir dir;
  PipelineConfig config = AesConfig(dir.path());
  config.workers = 3;
  stub::ResponderProvider provider(
      [](const llm::ChatRequest&) -> std::optional<std::string> { return std::nullopt; });
  RunResult result = RunPipeline(config, provider);
  EXPECT_TRUE(result.partial);
  for (const auto& pair : result.report["tasks"][0]["pairs"]) {
    EXPECT_TRUE(pair["attempts"].empty());
    EXPECT_EQ(pair["failures"].size(), 5u);
  }
  EXPECT_EQ(result.report["tasks"][0]["metrics"]["numGenerated"], 0);
}

TEST(PipelineTest, GenerateOnlyStopsBeforeAmplification) {
  TempDir dir;
  PipelineConfig config = AesConfig(dir.path());
  llm::ReplayProvider provider(config.provider.fixture_path);
  RunResult result = GenerateCandidates(config, provider);
  EXPECT_EQ(result.report["kind"], "generate");
  const json* pair = FindPairRecord(result.report, kDecrypt);
  ASSERT_NE(pair, nullptr);
  EXPECT_EQ((*pair)["attempts"].size(), 5u);
  EXPECT_FALSE((*pair)["attempts"][0].contains("verdict"));
  // Five attempts per pair plus three LLM revisions.
  EXPECT_EQ(provider.stats().requests, 13);
  EXPECT_TRUE(fs::exists(dir.path() / Slug(kEncrypt) / Slug(kDecrypt) / "candidates.json"));
}

TEST(SubcommandTest, AnalyzeMatchesGolden) {
  auto corpus = code_model::LoadCorpus(CorpusDir("aes"));
  json analyzed = AnalyzeJson(corpus, {testing::MustRef(kEncrypt)});
  EXPECT_EQ(analyzed.dump(2) + "\n",
            ReadFile(SourceDir() / "tests/golden/aes_analyze_encrypt_text.json"));
}

TEST(SubcommandTest, ValidateFixtures) {
  auto corpus = code_model::LoadCorpus(CorpusDir("aes"));
  auto pair = FindPair(*corpus.program, testing::MustRef(kEncrypt), testing::MustRef(kDecrypt));
  ValidateRequest request;
  request.test_path = "round_trip.mini";
  request.test_source = ReadFile(SourceDir() / "tests/fixtures/mtc/positive/round_trip.mini");
  json out = ValidateJson(corpus, pair, request);
  EXPECT_EQ(out["properties"]["isMtc"], true);
  EXPECT_EQ(out["verdict"]["decision"], "RETAINED");
  EXPECT_EQ(out["skeleton"]["assertionKind"], "EQ");

  request.test_source = "class T { @Test void t() { AESCodec.missing(); } }";
  EXPECT_THROW(ValidateJson(corpus, pair, request), Error);
  EXPECT_THROW(FindPair(*corpus.program, testing::MustRef(kDecrypt),
                        testing::MustRef("SecretKey.of(int)")),
               Error);
}

TEST(SubcommandTest, MutateListsDiffs) {
  auto corpus = code_model::LoadCorpus(CorpusDir("aes"));
  auto pair = FindPair(*corpus.program, testing::MustRef(kEncrypt), testing::MustRef(kDecrypt));
  json out = MutateJson(corpus, pair, 20, 0);
  ASSERT_EQ(out["mutants"].size(), 4u);
  EXPECT_EQ(out["mutants"][1]["op"], "SDL");
  EXPECT_EQ(out["mutants"][1]["diff"].get<std::string>().rfind("--- a/", 0), 0u);
  EXPECT_EQ(MutateJson(corpus, pair, 2, 5)["mutants"].size(), 2u);
}

}  // namespace
}  // namespace mtcgen::pipeline
