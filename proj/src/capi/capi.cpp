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

#include "mtcgen/mtcgen.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "code_model/corpus.hpp"
#include "common/error.hpp"
#include "json.hpp"
#include "pipeline/pipeline.hpp"
#include "skeleton/skeleton.hpp"

struct mtcgen_corpus {
  mtcgen::code_model::Corpus corpus;
};

struct mtcgen_config {
  mtcgen::pipeline::PipelineConfig config;
};

namespace {

using nlohmann::json;
using mtcgen::ErrorCode;

thread_local std::string last_error;

mtcgen_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return MTCGEN_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIo:
      return MTCGEN_ERR_IO;
    case ErrorCode::kCorpus:
      return MTCGEN_ERR_CORPUS;
    case ErrorCode::kConfig:
      return MTCGEN_ERR_CONFIG;
    case ErrorCode::kUnknownMethod:
      return MTCGEN_ERR_UNKNOWN_METHOD;
    case ErrorCode::kProviderUnavailable:
      return MTCGEN_ERR_PROVIDER_UNAVAILABLE;
    case ErrorCode::kFixtureMiss:
      return MTCGEN_ERR_FIXTURE_MISS;
    case ErrorCode::kNotExtractable:
      return MTCGEN_ERR_NOT_EXTRACTABLE;
    case ErrorCode::kNotAnAssertion:
      return MTCGEN_ERR_NOT_AN_ASSERTION;
    case ErrorCode::kInternal:
      return MTCGEN_ERR_INTERNAL;
  }
  return MTCGEN_ERR_INTERNAL;
}

char* Copy(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename F>
mtcgen_status Guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const mtcgen::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const json::exception& e) {
    last_error = e.what();
    return MTCGEN_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MTCGEN_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw mtcgen::Error(ErrorCode::kInvalidArgument, what);
}

mtcgen_status Emit(const json& value, char** out) {
  *out = Copy(value.dump(2) + "\n");
  return *out == nullptr ? MTCGEN_ERR_INTERNAL : MTCGEN_OK;
}

std::vector<std::string> TargetList(const char* targets_json) {
  if (targets_json == nullptr) return {};
  return json::parse(targets_json).get<std::vector<std::string>>();
}

}  // namespace

extern "C" {

const char* mtcgen_version(void) { return "0.1.0"; }

const char* mtcgen_last_error(void) { return last_error.c_str(); }

const char* mtcgen_status_name(mtcgen_status status) {
  switch (status) {
    case MTCGEN_OK:
      return "OK";
    case MTCGEN_PARTIAL:
      return "PARTIAL";
    case MTCGEN_ERR_INVALID_ARGUMENT:
      return "INVALID_ARGUMENT";
    case MTCGEN_ERR_IO:
      return "IO";
    case MTCGEN_ERR_CORPUS:
      return "CORPUS";
    case MTCGEN_ERR_CONFIG:
      return "CONFIG";
    case MTCGEN_ERR_UNKNOWN_METHOD:
      return "UNKNOWN_METHOD";
    case MTCGEN_ERR_PROVIDER_UNAVAILABLE:
      return "PROVIDER_UNAVAILABLE";
    case MTCGEN_ERR_FIXTURE_MISS:
      return "FIXTURE_MISS";
    case MTCGEN_ERR_NOT_EXTRACTABLE:
      return "NOT_EXTRACTABLE";
    case MTCGEN_ERR_NOT_AN_ASSERTION:
      return "NOT_AN_ASSERTION";
    case MTCGEN_ERR_INTERNAL:
      return "INTERNAL";
  }
  return "UNKNOWN";
}

void mtcgen_string_free(char* text) { std::free(text); }

mtcgen_status mtcgen_corpus_load(const char* path, mtcgen_corpus** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new mtcgen_corpus{mtcgen::code_model::LoadCorpus(path)};
    return MTCGEN_OK;
  });
}

void mtcgen_corpus_free(mtcgen_corpus* corpus) { delete corpus; }

mtcgen_status mtcgen_analyze(const mtcgen_corpus* corpus, const char* targets_json, char** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "null argument");
    const auto& c = corpus->corpus;
    auto targets = mtcgen::pipeline::ResolveTargets(*c.program, TargetList(targets_json));
    return Emit(mtcgen::pipeline::AnalyzeJson(c, targets), out);
  });
}

mtcgen_status mtcgen_facts(const mtcgen_corpus* corpus, const char* methods_json, char** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "null argument");
    const auto& c = corpus->corpus;
    auto methods = mtcgen::pipeline::ResolveTargets(*c.program, TargetList(methods_json));
    return Emit(mtcgen::pipeline::FactsJson(c, methods), out);
  });
}

mtcgen_status mtcgen_mutate(const mtcgen_corpus* corpus, const char* target,
                            const char* candidate, size_t cap, uint64_t seed, char** out) {
  return Guard([&] {
    Require(corpus != nullptr && target != nullptr && candidate != nullptr && out != nullptr,
            "null argument");
    const auto& program = *corpus->corpus.program;
    auto pair = mtcgen::pipeline::FindPair(program, mtcgen::pipeline::ResolveMethod(program, target),
                                           mtcgen::pipeline::ResolveMethod(program, candidate));
    return Emit(mtcgen::pipeline::MutateJson(corpus->corpus, pair, cap, seed), out);
  });
}

mtcgen_status mtcgen_validate(const mtcgen_corpus* corpus, const char* request_json, char** out) {
  return Guard([&] {
    Require(corpus != nullptr && request_json != nullptr && out != nullptr, "null argument");
    json request = json::parse(request_json);
    const auto& program = *corpus->corpus.program;
    auto pair = mtcgen::pipeline::FindPair(
        program, mtcgen::pipeline::ResolveMethod(program, request.at("target")),
        mtcgen::pipeline::ResolveMethod(program, request.at("candidate")));
    mtcgen::pipeline::ValidateRequest r;
    r.test_path = request.value("testPath", "test.mini");
    r.test_source = request.at("testSource").get<std::string>();
    r.mutant_cap = request.value("mutantCap", r.mutant_cap);
    r.seed = request.value("seed", r.seed);
    if (request.value("aggregation", "every-mutant") == "majority") {
      r.aggregation = mtcgen::validation::Aggregation::kMajority;
    }
    return Emit(mtcgen::pipeline::ValidateJson(corpus->corpus, pair, r), out);
  });
}

mtcgen_status mtcgen_skeleton_compare(const char* generated_json, const char* reference_json,
                                      char** out) {
  return Guard([&] {
    Require(generated_json != nullptr && reference_json != nullptr && out != nullptr,
            "null argument");
    auto generated = mtcgen::skeleton::SkeletonFromJson(json::parse(generated_json));
    auto reference = mtcgen::skeleton::SkeletonFromJson(json::parse(reference_json));
    return Emit(mtcgen::skeleton::SimilarityToJson(mtcgen::skeleton::Compare(generated, reference)),
                out);
  });
}

mtcgen_status mtcgen_compare_reference(const mtcgen_corpus* corpus, const char* report_json,
                                       char** out) {
  return Guard([&] {
    Require(corpus != nullptr && report_json != nullptr && out != nullptr, "null argument");
    return Emit(
        mtcgen::pipeline::CompareAgainstReference(json::parse(report_json), corpus->corpus), out);
  });
}

mtcgen_status mtcgen_config_parse(const char* config_json, const char* base_dir,
                                  mtcgen_config** out) {
  return Guard([&] {
    Require(config_json != nullptr && out != nullptr, "null argument");
    json parsed;
    try {
      parsed = json::parse(config_json);
    } catch (const json::exception& e) {
      throw mtcgen::Error(ErrorCode::kConfig, e.what());
    }
    *out = new mtcgen_config{mtcgen::pipeline::PipelineConfigFromJson(
        parsed, base_dir == nullptr ? std::filesystem::path() : std::filesystem::path(base_dir))};
    return MTCGEN_OK;
  });
}

void mtcgen_config_free(mtcgen_config* config) { delete config; }

mtcgen_status mtcgen_config_to_json(const mtcgen_config* config, char** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    return Emit(mtcgen::pipeline::PipelineConfigToJson(config->config), out);
  });
}

mtcgen_status mtcgen_run(const mtcgen_config* config, char** report) {
  return Guard([&] {
    Require(config != nullptr && report != nullptr, "null argument");
    auto result = mtcgen::pipeline::RunPipeline(config->config);
    mtcgen_status status = Emit(result.report, report);
    return status == MTCGEN_OK && result.partial ? MTCGEN_PARTIAL : status;
  });
}

mtcgen_status mtcgen_generate(const mtcgen_config* config, char** report) {
  return Guard([&] {
    Require(config != nullptr && report != nullptr, "null argument");
    config->config.Validate();
    config->config.provider.Validate();
    auto provider = mtcgen::llm::MakeProvider(config->config.provider);
    auto result = mtcgen::pipeline::GenerateCandidates(config->config, *provider);
    mtcgen_status status = Emit(result.report, report);
    return status == MTCGEN_OK && result.partial ? MTCGEN_PARTIAL : status;
  });
}

mtcgen_status mtcgen_report(const char* report_json, char** out) {
  return Guard([&] {
    Require(report_json != nullptr && out != nullptr, "null argument");
    return Emit(mtcgen::pipeline::RenderMetrics(json::parse(report_json)), out);
  });
}

}  // extern "C"
