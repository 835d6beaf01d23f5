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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtcgen/mtcgen.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitPartial = 2;

struct Options {
  std::string config;
  std::string corpus;
  std::string out;
  std::vector<std::string> targets;
  std::string candidate;
  std::string test;
  std::string provider;
  std::string fixtures;
  std::string endpoint;
  std::string generated;
  std::string reference;
  std::string report;
  std::string aggregation;
  int workers = 0;
  std::size_t cap = 20;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

class Failure : public std::runtime_error {
 public:
  explicit Failure(const std::string& message) : std::runtime_error(message) {}
};

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void Check(mtcgen_status status) {
  if (status != MTCGEN_OK && status != MTCGEN_PARTIAL) {
    throw Failure(std::string(mtcgen_status_name(status)) + ": " + mtcgen_last_error());
  }
}

std::string Absolute(const std::string& path) { return fs::absolute(path).lexically_normal().string(); }

// Config file contents with command-line overrides applied.
json ConfigJson(const Options& o) {
  json config = json::object();
  if (!o.config.empty()) {
    try {
      config = json::parse(ReadText(o.config));
    } catch (const json::exception& e) {
      throw Failure("CONFIG: " + o.config + ": " + e.what());
    }
  }
  if (!o.corpus.empty()) config["corpusPath"] = Absolute(o.corpus);
  if (!o.targets.empty()) config["targets"] = o.targets;
  if (!o.out.empty()) config["outputDir"] = Absolute(o.out);
  if (o.seed_set) config["seed"] = o.seed;
  if (o.workers > 0) config["workers"] = o.workers;
  if (!o.aggregation.empty()) config["aggregation"] = o.aggregation;
  if (!o.provider.empty()) config["provider"]["kind"] = o.provider;
  if (!o.fixtures.empty()) config["provider"]["fixturePath"] = Absolute(o.fixtures);
  if (!o.endpoint.empty()) config["provider"]["endpoint"] = o.endpoint;
  return config;
}

std::string BaseDir(const Options& o) {
  return o.config.empty() ? Absolute(".") : Absolute(fs::path(o.config).parent_path().string());
}

struct ConfigHandle {
  mtcgen_config* handle = nullptr;
  ~ConfigHandle() { mtcgen_config_free(handle); }
};

struct CorpusHandle {
  mtcgen_corpus* handle = nullptr;
  ~CorpusHandle() { mtcgen_corpus_free(handle); }
};

struct Text {
  char* data = nullptr;
  ~Text() { mtcgen_string_free(data); }
  std::string str() const { return data == nullptr ? "" : data; }
};

void ParseConfig(const Options& o, ConfigHandle& config) {
  Check(mtcgen_config_parse(ConfigJson(o).dump().c_str(), BaseDir(o).c_str(), &config.handle));
}

std::string CorpusPath(const Options& o) {
  if (!o.corpus.empty()) return o.corpus;
  if (o.config.empty()) throw Failure("CONFIG: --corpus or --config is required");
  ConfigHandle config;
  ParseConfig(o, config);
  Text text;
  Check(mtcgen_config_to_json(config.handle, &text.data));
  return json::parse(text.str())["corpusPath"].get<std::string>();
}

void LoadCorpus(const Options& o, CorpusHandle& corpus) {
  Check(mtcgen_corpus_load(CorpusPath(o).c_str(), &corpus.handle));
}

void Emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw Failure("IO: cannot write " + o.out);
  out << text;
}

std::string TargetsJson(const Options& o) { return json(o.targets).dump(); }

int Finish(mtcgen_status status) { return status == MTCGEN_PARTIAL ? kExitPartial : kExitOk; }

int Analyze(const Options& o) {
  CorpusHandle corpus;
  LoadCorpus(o, corpus);
  Text text;
  Check(mtcgen_analyze(corpus.handle, o.targets.empty() ? nullptr : TargetsJson(o).c_str(),
                       &text.data));
  Emit(o, text.str());
  return kExitOk;
}

int Facts(const Options& o) {
  CorpusHandle corpus;
  LoadCorpus(o, corpus);
  Text text;
  Check(mtcgen_facts(corpus.handle, o.targets.empty() ? nullptr : TargetsJson(o).c_str(),
                     &text.data));
  Emit(o, text.str());
  return kExitOk;
}

int Mutate(const Options& o) {
  if (o.targets.size() != 1) throw Failure("INVALID_ARGUMENT: exactly one --target is required");
  CorpusHandle corpus;
  LoadCorpus(o, corpus);
  Text text;
  Check(mtcgen_mutate(corpus.handle, o.targets[0].c_str(), o.candidate.c_str(), o.cap, o.seed,
                      &text.data));
  Emit(o, text.str());
  return kExitOk;
}

int Validate(const Options& o) {
  if (o.targets.size() != 1) throw Failure("INVALID_ARGUMENT: exactly one --target is required");
  CorpusHandle corpus;
  LoadCorpus(o, corpus);
  json request = {{"target", o.targets[0]},
                  {"candidate", o.candidate},
                  {"testPath", fs::path(o.test).filename().string()},
                  {"testSource", ReadText(o.test)},
                  {"mutantCap", o.cap},
                  {"seed", o.seed}};
  if (!o.aggregation.empty()) request["aggregation"] = o.aggregation;
  Text text;
  Check(mtcgen_validate(corpus.handle, request.dump().c_str(), &text.data));
  Emit(o, text.str());
  return kExitOk;
}

int SkeletonCompare(const Options& o) {
  Text text;
  if (!o.report.empty()) {
    CorpusHandle corpus;
    LoadCorpus(o, corpus);
    fs::path report = o.report;
    if (fs::is_directory(report)) report /= "report.json";
    Check(mtcgen_compare_reference(corpus.handle, ReadText(report.string()).c_str(), &text.data));
  } else {
    if (o.generated.empty() || o.reference.empty()) {
      throw Failure("INVALID_ARGUMENT: --report, or both --generated and --reference");
    }
    Check(mtcgen_skeleton_compare(ReadText(o.generated).c_str(), ReadText(o.reference).c_str(),
                                  &text.data));
  }
  Emit(o, text.str());
  return kExitOk;
}

int RunOrGenerate(const Options& o, bool full) {
  ConfigHandle config;
  ParseConfig(o, config);
  Text text;
  mtcgen_status status =
      full ? mtcgen_run(config.handle, &text.data) : mtcgen_generate(config.handle, &text.data);
  Check(status);
  json report = json::parse(text.str());
  const json& usage = report["usage"];
  std::cerr << "provider: " << usage["requests"] << " requests, " << usage["promptChars"]
            << " prompt chars, " << usage["replyChars"] << " reply chars\n";
  for (const auto& task : report["tasks"]) {
    std::cerr << task["target"].get<std::string>() << ": " << task["pairs"].size() << " pairs";
    if (task.contains("metrics")) {
      std::cerr << ", taskSuccessful=" << task["metrics"]["taskSuccessful"];
    }
    std::cerr << "\n";
  }
  if (status == MTCGEN_PARTIAL) std::cerr << "warning: some pairs recorded failures\n";
  return Finish(status);
}

int Report(const Options& o) {
  fs::path report = o.report;
  if (fs::is_directory(report)) report /= "report.json";
  Text text;
  Check(mtcgen_report(ReadText(report.string()).c_str(), &text.data));
  Emit(o, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metamorphic test generation from functionally coupled methods"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "JSON pipeline config");
    cmd->add_option("--corpus", o.corpus, "Corpus directory (overrides corpusPath)");
    cmd->add_option("--out", o.out, "Output file, or output directory for run/generate");
    cmd->add_option_function<std::uint64_t>(
        "--seed",
        [&](std::uint64_t seed) {
          o.seed = seed;
          o.seed_set = true;
        },
        "Mutant sampling seed");
  };
  auto provider = [&](CLI::App* cmd) {
    cmd->add_option("--provider", o.provider, "replay, record, or http")
        ->check(CLI::IsMember({"replay", "record", "http"}));
    cmd->add_option("--fixtures", o.fixtures, "Replay or record fixture file");
    cmd->add_option("--endpoint", o.endpoint, "Chat completions URL");
    cmd->add_option("--workers", o.workers, "Pair-level worker threads");
  };
  auto pair = [&](CLI::App* cmd) {
    cmd->add_option("--target", o.targets, "Target method ref")->required();
    cmd->add_option("--candidate", o.candidate, "Coupled candidate method ref")->required();
    cmd->add_option("--cap", o.cap, "Mutant cap");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Coupled pairs as JSON");
  common(analyze);
  analyze->add_option("--target", o.targets, "Target method refs (default: all)");
  CLI::App* facts = app.add_subcommand("facts", "Method facts as JSON");
  common(facts);
  facts->add_option("--target", o.targets, "Method refs (default: all)");
  CLI::App* generate = app.add_subcommand("generate", "Generate and refine candidates");
  common(generate);
  provider(generate);
  generate->add_option("--target", o.targets, "Target method refs");
  CLI::App* mutate = app.add_subcommand("mutate", "Mutants of a coupled pair");
  common(mutate);
  pair(mutate);
  CLI::App* validate = app.add_subcommand("validate", "Validate a test class against mutants");
  common(validate);
  pair(validate);
  validate->add_option("--test", o.test, "Test class file")->required()->check(CLI::ExistingFile);
  validate->add_option("--aggregation", o.aggregation, "every-mutant or majority");
  CLI::App* compare = app.add_subcommand("skeleton-compare", "Compare MR skeletons");
  common(compare);
  compare->add_option("--generated", o.generated, "Generated skeleton JSON");
  compare->add_option("--reference", o.reference, "Reference skeleton JSON");
  compare->add_option("--report", o.report, "Run report (file or directory)");
  CLI::App* run = app.add_subcommand("run", "Full pipeline");
  common(run);
  provider(run);
  run->add_option("--target", o.targets, "Target method refs");
  run->add_option("--aggregation", o.aggregation, "every-mutant or majority");
  CLI::App* report = app.add_subcommand("report", "Re-render metrics of a prior run");
  common(report);
  report->add_option("path", o.report, "Run directory or report.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFatal;
  }

  try {
    if (*analyze) return Analyze(o);
    if (*facts) return Facts(o);
    if (*generate) return RunOrGenerate(o, false);
    if (*mutate) return Mutate(o);
    if (*validate) return Validate(o);
    if (*compare) return SkeletonCompare(o);
    if (*run) return RunOrGenerate(o, true);
    if (*report) return Report(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}
