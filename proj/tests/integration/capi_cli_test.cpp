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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mtcgen/mtcgen.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kSource = MTCGEN_SOURCE_DIR;
const fs::path kCli = MTCGEN_CLI_PATH;

std::string Read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("mtcgen-it-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~Scratch() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct Owned {
  char* text = nullptr;
  ~Owned() { mtcgen_string_free(text); }
  json Json() const { return json::parse(text); }
};

int Cli(const std::string& args, const fs::path& stdout_file = "/dev/null") {
  std::string command =
      kCli.string() + " " + args + " > " + stdout_file.string() + " 2>/dev/null";
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string AesConfig() { return (kSource / "tests/fixtures/configs/aes_replay.json").string(); }

TEST(CApiTest, CorpusErrorsCarryStatusAndMessage) {
  mtcgen_corpus* corpus = nullptr;
  EXPECT_EQ(mtcgen_corpus_load("/nonexistent/corpus", &corpus), MTCGEN_ERR_CORPUS);
  EXPECT_EQ(corpus, nullptr);
  EXPECT_NE(std::string(mtcgen_last_error()).find("/nonexistent/corpus"), std::string::npos);
  EXPECT_EQ(mtcgen_corpus_load(nullptr, &corpus), MTCGEN_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(mtcgen_status_name(MTCGEN_PARTIAL), "PARTIAL");
  EXPECT_STRNE(mtcgen_version(), "");
}

TEST(CApiTest, AnalyzeMutateValidate) {
  mtcgen_corpus* corpus = nullptr;
  ASSERT_EQ(mtcgen_corpus_load((kSource / "corpus/aes").c_str(), &corpus), MTCGEN_OK);

  Owned analyzed;
  ASSERT_EQ(mtcgen_analyze(corpus, R"(["AESCodec.encryptText"])", &analyzed.text), MTCGEN_OK);
  EXPECT_EQ(std::string(analyzed.text),
            Read(kSource / "tests/golden/aes_analyze_encrypt_text.json"));

  Owned facts;
  ASSERT_EQ(mtcgen_facts(corpus, nullptr, &facts.text), MTCGEN_OK);
  EXPECT_EQ(facts.Json()["methods"].size(), 11u);

  Owned mutants;
  ASSERT_EQ(mtcgen_mutate(corpus, "AESCodec.encryptText", "AESCodec.decryptText", 20, 0,
                          &mutants.text),
            MTCGEN_OK);
  EXPECT_EQ(mutants.Json()["mutants"].size(), 4u);
  Owned missing;
  EXPECT_EQ(mtcgen_mutate(corpus, "AESCodec.nothing", "AESCodec.decryptText", 20, 0,
                          &missing.text),
            MTCGEN_ERR_UNKNOWN_METHOD);

  json request = {{"target", "AESCodec.encryptText"},
                  {"candidate", "AESCodec.decryptText"},
                  {"testPath", "round_trip.mini"},
                  {"testSource", Read(kSource / "tests/fixtures/mtc/positive/round_trip.mini")}};
  Owned verdict;
  ASSERT_EQ(mtcgen_validate(corpus, request.dump().c_str(), &verdict.text), MTCGEN_OK);
  EXPECT_EQ(verdict.Json()["verdict"]["decision"], "RETAINED");
  Owned bad;
  EXPECT_EQ(mtcgen_validate(corpus, "{", &bad.text), MTCGEN_ERR_INVALID_ARGUMENT);

  mtcgen_corpus_free(corpus);
}

TEST(CApiTest, SkeletonCompare) {
  json a = {{"methodPair", {"A.a()", "A.b()"}},
            {"inputRelation", json::array()},
            {"assertionKind", "EQ"},
            {"assertionElements", {"SOURCE_INPUT", "FOLLOWUP_OUTPUT"}}};
  json b = a;
  b["assertionKind"] = "NE";
  Owned same;
  ASSERT_EQ(mtcgen_skeleton_compare(a.dump().c_str(), a.dump().c_str(), &same.text), MTCGEN_OK);
  EXPECT_EQ(same.Json()["l2"], true);
  Owned differ;
  ASSERT_EQ(mtcgen_skeleton_compare(a.dump().c_str(), b.dump().c_str(), &differ.text), MTCGEN_OK);
  EXPECT_EQ(differ.Json()["l1"], true);
  EXPECT_EQ(differ.Json()["l2"], false);
}

TEST(CApiTest, ConfigAndRun) {
  Scratch scratch;
  mtcgen_config* config = nullptr;
  EXPECT_EQ(mtcgen_config_parse("{not json", nullptr, &config), MTCGEN_ERR_CONFIG);
  EXPECT_EQ(mtcgen_config_parse(R"({"corpusPath": "c", "K": 0})", nullptr, &config),
            MTCGEN_ERR_CONFIG);

  json j = json::parse(Read(AesConfig()));
  j["outputDir"] = scratch.path().string();
  ASSERT_EQ(mtcgen_config_parse(j.dump().c_str(), (kSource / "tests/fixtures/configs").c_str(),
                                &config),
            MTCGEN_OK);
  Owned report;
  EXPECT_EQ(mtcgen_run(config, &report.text), MTCGEN_PARTIAL);
  EXPECT_EQ(report.Json()["tasks"][0]["metrics"]["taskSuccessful"], true);
  Owned metrics;
  ASSERT_EQ(mtcgen_report(report.text, &metrics.text), MTCGEN_OK);
  EXPECT_EQ(metrics.Json()["tasks"][0]["metrics"], report.Json()["tasks"][0]["metrics"]);
  mtcgen_config_free(config);
}

TEST(CliTest, ExitCodes) {
  Scratch scratch;
  EXPECT_EQ(Cli("--help"), 0);
  EXPECT_EQ(Cli(""), 1);
  EXPECT_EQ(Cli("frobnicate"), 1);
  EXPECT_EQ(Cli("run --config " + AesConfig() + " --corpus /nonexistent --out " +
                scratch.path().string()),
            1);
  EXPECT_EQ(Cli("run --config /nonexistent.json"), 1);
  EXPECT_EQ(Cli("analyze --corpus " + (kSource / "corpus/aes").string() +
                " --target AESCodec.nothing"),
            1);
  EXPECT_EQ(Cli("run --config " + AesConfig() + " --out " + (scratch.path() / "run").string()),
            2);
  EXPECT_EQ(Cli("run --config " + AesConfig() + " --target AESCodec.getSecretEncryptionKey --out " +
                (scratch.path() / "quiet").string()),
            0);
}

TEST(CliTest, AnalyzeMatchesGolden) {
  Scratch scratch;
  fs::path out = scratch.path() / "analyze.json";
  ASSERT_EQ(Cli("analyze --corpus " + (kSource / "corpus/aes").string() +
                    " --target AESCodec.encryptText",
                out),
            0);
  EXPECT_EQ(Read(out), Read(kSource / "tests/golden/aes_analyze_encrypt_text.json"));
}

TEST(CliTest, ReplayRunIsDeterministicAndReportRerenders) {
  Scratch scratch;
  fs::path first = scratch.path() / "a";
  fs::path second = scratch.path() / "b";
  std::string base = "run --config " + AesConfig() + " --provider replay --fixtures " +
                     (kSource / "tests/fixtures/replay/aes.jsonl").string() + " --seed 7";
  ASSERT_EQ(Cli(base + " --out " + first.string()), 2);
  ASSERT_EQ(Cli(base + " --workers 3 --out " + second.string()), 2);
  EXPECT_EQ(Read(first / "report.json"), Read(second / "report.json"));

  fs::path metrics = scratch.path() / "metrics.json";
  ASSERT_EQ(Cli("report " + first.string(), metrics), 0);
  json report = json::parse(Read(first / "report.json"));
  EXPECT_EQ(json::parse(Read(metrics))["tasks"][0]["metrics"], report["tasks"][0]["metrics"]);

  fs::path compared = scratch.path() / "compare.json";
  ASSERT_EQ(Cli("skeleton-compare --config " + AesConfig() + " --report " + first.string(),
                compared),
            0);
  EXPECT_EQ(json::parse(Read(compared))["targets"][0]["l2Consistency"], true);
}

TEST(CliTest, ValidateAndMutate) {
  Scratch scratch;
  std::string corpus = " --corpus " + (kSource / "corpus/aes").string();
  std::string pair = " --target AESCodec.encryptText --candidate AESCodec.decryptText";
  fs::path out = scratch.path() / "v.json";
  ASSERT_EQ(Cli("validate" + corpus + pair + " --test " +
                    (kSource / "tests/fixtures/mtc/negative/single_invocation.mini").string(),
                out),
            0);
  EXPECT_EQ(json::parse(Read(out))["properties"]["isMtc"], false);
  ASSERT_EQ(Cli("mutate" + corpus + pair + " --cap 3 --seed 9", out), 0);
  EXPECT_EQ(json::parse(Read(out))["mutants"].size(), 3u);
  EXPECT_EQ(Cli("mutate" + corpus + " --target AESCodec.decryptText --candidate SecretKey.of"), 1);
}

}  // namespace
