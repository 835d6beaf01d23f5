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

#include "pipeline/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <semaphore>
#include <set>
#include <thread>

#include "code_model/facts.hpp"
#include "common/error.hpp"
#include "common/files.hpp"
#include "generation/candidate.hpp"
#include "minilang/diagnostics.hpp"
#include "skeleton/skeleton.hpp"
#include "validation/mutation.hpp"
#include "validation/properties.hpp"

namespace mtcgen::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::set<std::string>& ConfigKeys() {
  static const std::set<std::string> keys = {
      "corpusPath", "targets", "provider",   "K",           "M",
      "llmRevisions", "mutantCap", "seed", "limits", "outputDir",
      "workers", "maxInFlight", "aggregation", "excludedExamplePaths"};
  return keys;
}

fs::path ResolvePath(const fs::path& base, const std::string& text) {
  fs::path path(text);
  return path.is_absolute() || base.empty() ? path : base / path;
}

validation::Aggregation ParseAggregation(const std::string& name) {
  if (name == "every-mutant") return validation::Aggregation::kEveryMutant;
  if (name == "majority") return validation::Aggregation::kMajority;
  throw Error(ErrorCode::kConfig, "unknown aggregation: " + name);
}

const char* AggregationName(validation::Aggregation aggregation) {
  return aggregation == validation::Aggregation::kMajority ? "majority" : "every-mutant";
}

class ThrottledProvider : public llm::ChatProvider {
 public:
  ThrottledProvider(llm::ChatProvider& inner, int slots) : inner_(inner), slots_(slots) {}

 protected:
  std::string DoComplete(const llm::ChatRequest& request, const std::string&) override {
    slots_.acquire();
    struct Release {
      std::counting_semaphore<>& slots;
      ~Release() { slots.release(); }
    } release{slots_};
    return inner_.Complete(request);
  }

 private:
  llm::ChatProvider& inner_;
  std::counting_semaphore<> slots_;
};

void RunTasks(std::size_t count, int workers, const std::function<void(std::size_t)>& task) {
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (threads <= 1) {
    loop();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(loop);
}

generation::GenerationConfig ToGenerationConfig(const PipelineConfig& config) {
  generation::GenerationConfig g;
  g.attempts = config.attempts;
  g.amplified_inputs = config.amplified_inputs;
  g.llm_revisions = config.llm_revisions;
  g.limits = config.limits;
  g.provider = config.provider;
  g.prompt.excluded_example_paths.insert(config.excluded_example_paths.begin(),
                                         config.excluded_example_paths.end());
  return g;
}

json FailureToJson(const generation::AttemptFailure& failure) {
  return {{"attempt", failure.attempt},
          {"code", std::string(ErrorCodeName(failure.code))},
          {"message", failure.message}};
}

json MutantToJson(const minilang::Program& program, const validation::Mutant& mutant) {
  return {{"id", mutant.id},
          {"op", validation::OperatorName(mutant.op)},
          {"method", mutant.method.ToString()},
          {"before", mutant.before},
          {"after", mutant.after},
          {"diff", validation::MutantDiff(program, mutant)}};
}

bool AllPass(const minilang::TestOutcomes& outcomes) {
  return !outcomes.empty() && std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) {
    return o.second.kind == minilang::TestOutcome::Kind::kPass;
  });
}

double BaseRate(const minilang::TestOutcomes& outcomes) {
  if (outcomes.empty()) return 0.0;
  auto passed = std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) {
    return o.second.kind == minilang::TestOutcome::Kind::kPass;
  });
  return static_cast<double>(passed) / static_cast<double>(outcomes.size());
}

fs::path PairDir(const PipelineConfig& config, const coupling::CoupledPair& pair) {
  return config.output_dir / Slug(pair.target.ToString()) / Slug(pair.candidate.ToString());
}

struct PairResult {
  json record;
  bool failed = false;
};

json PairHeader(const coupling::CoupledPair& pair) {
  json header = coupling::PairToJson(pair);
  return {{"target", pair.target.ToString()},
          {"candidate", pair.candidate.ToString()},
          {"features", header["features"]}};
}

PairResult GenerateOnlyPair(const coupling::CoupledPair& pair, const code_model::Corpus& corpus,
                            llm::ChatProvider& provider, const PipelineConfig& config) {
  PairResult result{PairHeader(pair), false};
  generation::PairGeneration gen =
      generation::GenerateForPair(pair, corpus, provider, ToGenerationConfig(config));
  fs::path dir = PairDir(config, pair);
  fs::remove_all(dir);
  json index = json::array();
  for (const auto& candidate : gen.candidates) {
    json record = generation::CandidateToJson(candidate);
    index.push_back(record);
    WriteFile(dir / ("attempt" + std::to_string(candidate.attempt)) / "candidate.mini",
              candidate.code);
    record.erase("code");
    result.record["attempts"].push_back(record);
  }
  if (!result.record.contains("attempts")) result.record["attempts"] = json::array();
  json failures = json::array();
  for (const auto& f : gen.failures) failures.push_back(FailureToJson(f));
  result.record["failures"] = failures;
  result.failed = !gen.failures.empty();
  WriteFile(dir / "candidates.json",
            json{{"candidates", index}, {"failures", failures}}.dump(2) + "\n");
  return result;
}

PairResult RunPair(const coupling::CoupledPair& pair, const code_model::Corpus& corpus,
                   llm::ChatProvider& provider, const PipelineConfig& config) {
  const minilang::Program& program = *corpus.program;
  PairResult result{PairHeader(pair), false};
  generation::PairGeneration gen =
      generation::GenerateForPair(pair, corpus, provider, ToGenerationConfig(config));
  std::vector<validation::Mutant> mutants =
      validation::GenerateMutants(program, pair, {config.mutant_cap, config.seed});

  fs::path dir = PairDir(config, pair);
  fs::remove_all(dir);
  json index = json::array();
  json attempts = json::array();
  for (auto& candidate : gen.candidates) {
    json record = generation::CandidateToJson(candidate);
    fs::path attempt_dir = dir / ("attempt" + std::to_string(candidate.attempt));
    WriteFile(attempt_dir / "candidate.mini", candidate.code);

    bool is_mtc = false;
    if (candidate.test_class) {
      auto properties = validation::CheckMtcProperties(program, *candidate.test_class, pair);
      record["properties"] = validation::PropertiesToJson(properties);
      is_mtc = properties.is_mtc;
    }
    bool executable_mtc = candidate.executable && is_mtc;
    bool valid = executable_mtc && AllPass(candidate.outcomes);
    record["isMtc"] = is_mtc;
    record["executableMtc"] = executable_mtc;
    record["baseP"] = BaseRate(candidate.outcomes);
    record["valid"] = valid;
    record["falseAlarm"] = executable_mtc && !valid;

    if (valid) {
      generation::AmplifiedMtc amplified =
          generation::Amplify(candidate, provider, program, config.amplified_inputs);
      record["amplification"] = {{"requested", amplified.requested},
                                 {"effective", amplified.effective},
                                 {"degraded", amplified.degraded},
                                 {"note", amplified.note},
                                 {"dropped", amplified.dropped}};
      WriteFile(attempt_dir / "amplified.mini", amplified.code);
      std::string name = Slug(pair.candidate.ToString()) + "/attempt" +
                         std::to_string(candidate.attempt);
      validation::ValidationVerdict verdict = validation::Validate(
          name, minilang::TestClass{amplified.test_class.decl, amplified.test_class.path},
          program, mutants, config.limits, config.aggregation);
      json verdict_json = validation::VerdictToJson(verdict);
      record["verdict"] = verdict_json;
      WriteFile(attempt_dir / "verdict.json", verdict_json.dump(2) + "\n");
      if (verdict.decision != validation::Decision::kFiltered) {
        WriteFile(dir / "retained" / ("attempt" + std::to_string(candidate.attempt) + ".mini"),
                  amplified.code);
      }
      try {
        record["skeleton"] = skeleton::SkeletonToJson(
            skeleton::ExtractSkeleton(program, *candidate.test_class, pair));
      } catch (const Error& e) {
        record["skeletonError"] = {{"code", std::string(ErrorCodeName(e.code()))},
                                   {"message", e.what()}};
      }
    }
    index.push_back(record);
    record.erase("code");
    attempts.push_back(record);
  }
  json failures = json::array();
  for (const auto& f : gen.failures) failures.push_back(FailureToJson(f));
  json mutant_list = json::array();
  std::string diffs;
  for (const auto& m : mutants) {
    json mj = MutantToJson(program, m);
    diffs += mj["diff"].get<std::string>();
    mj.erase("diff");
    mutant_list.push_back(mj);
  }
  result.record["attempts"] = attempts;
  result.record["failures"] = failures;
  result.record["mutants"] = mutant_list;
  result.failed = !gen.failures.empty();
  WriteFile(dir / "candidates.json",
            json{{"candidates", index}, {"failures", failures}}.dump(2) + "\n");
  WriteFile(dir / "mutants.diff", diffs);
  return result;
}

using PairRunner = std::function<PairResult(const coupling::CoupledPair&,
                                            const code_model::Corpus&, llm::ChatProvider&,
                                            const PipelineConfig&)>;

RunResult Orchestrate(const PipelineConfig& config, llm::ChatProvider& provider,
                      const PairRunner& runner, bool with_metrics) {
  config.Validate();
  code_model::Corpus corpus = code_model::LoadCorpus(config.corpus_path);
  std::vector<minilang::MethodRef> targets = ResolveTargets(*corpus.program, config.targets);

  struct Task {
    std::size_t target;
    coupling::CoupledPair pair;
  };
  std::vector<Task> tasks;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (auto& pair : coupling::AnalyzeCoupling(*corpus.program, targets[t])) {
      tasks.push_back({t, std::move(pair)});
    }
  }

  ThrottledProvider throttled(provider, config.max_in_flight);
  std::vector<PairResult> results(tasks.size());
  RunTasks(tasks.size(), config.workers, [&](std::size_t i) {
    try {
      results[i] = runner(tasks[i].pair, corpus, throttled, config);
    } catch (const std::exception& e) {
      json record = PairHeader(tasks[i].pair);
      record["error"] = e.what();
      results[i] = {record, true};
    }
  });

  RunResult run;
  json task_reports = json::array();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    json task = {{"target", targets[t].ToString()}, {"pairs", json::array()}};
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].target != t) continue;
      task["pairs"].push_back(results[i].record);
      run.partial = run.partial || results[i].failed;
    }
    if (with_metrics) task["metrics"] = MetricsToJson(ComputeMetrics(task));
    task_reports.push_back(task);
  }
  llm::ProviderStats stats = provider.stats();
  run.report = {{"schemaVersion", kSchemaVersion},
                {"kind", with_metrics ? "run" : "generate"},
                {"settings",
                 {{"K", config.attempts},
                  {"M", config.amplified_inputs},
                  {"llmRevisions", config.llm_revisions},
                  {"mutantCap", config.mutant_cap},
                  {"seed", config.seed},
                  {"aggregation", AggregationName(config.aggregation)},
                  {"provider", llm::ProviderKindName(config.provider.kind)},
                  {"model", config.provider.model},
                  {"temperature", config.provider.temperature}}},
                {"tasks", task_reports},
                {"usage",
                 {{"requests", stats.requests},
                  {"replies", stats.replies},
                  {"failures", stats.failures},
                  {"promptChars", stats.prompt_chars},
                  {"replyChars", stats.reply_chars}}},
                {"partialFailure", run.partial}};
  WriteFile(config.output_dir / "report.json", run.report.dump(2) + "\n");
  return run;
}

}  // namespace

void PipelineConfig::Validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kConfig, what);
  };
  require(!corpus_path.empty(), "corpusPath is required");
  require(attempts >= 1, "K must be at least 1");
  require(amplified_inputs >= 1, "M must be at least 1");
  require(llm_revisions >= 0, "llmRevisions must not be negative");
  require(workers >= 1, "workers must be at least 1");
  require(max_in_flight >= 1, "maxInFlight must be at least 1");
  require(limits.max_steps > 0, "limits.maxSteps must be positive");
  require(limits.per_test_timeout.count() > 0, "limits.perTestTimeoutMs must be positive");
  require(limits.max_call_depth > 0, "limits.maxCallDepth must be positive");
}

PipelineConfig PipelineConfigFromJson(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!ConfigKeys().count(key)) throw Error(ErrorCode::kConfig, "unknown config key: " + key);
  }
  PipelineConfig c;
  try {
    if (!j.contains("corpusPath")) throw Error(ErrorCode::kConfig, "corpusPath is required");
    c.corpus_path = ResolvePath(base_dir, j["corpusPath"].get<std::string>());
    if (j.contains("targets")) {
      const json& targets = j["targets"];
      if (targets.is_string()) {
        if (targets.get<std::string>() != "all-public") {
          throw Error(ErrorCode::kConfig, "targets must be a list or \"all-public\"");
        }
      } else {
        c.targets = targets.get<std::vector<std::string>>();
      }
    }
    if (j.contains("provider")) {
      c.provider = llm::ProviderConfigFromJson(j["provider"]);
      if (!c.provider.fixture_path.empty()) {
        c.provider.fixture_path = ResolvePath(base_dir, c.provider.fixture_path).string();
      }
      c.provider.Validate();
    }
    c.attempts = j.value("K", c.attempts);
    c.amplified_inputs = j.value("M", c.amplified_inputs);
    c.llm_revisions = j.value("llmRevisions", c.llm_revisions);
    c.mutant_cap = j.value("mutantCap", c.mutant_cap);
    c.seed = j.value("seed", c.seed);
    if (j.contains("limits")) {
      const json& l = j["limits"];
      c.limits.max_steps = l.value("maxSteps", c.limits.max_steps);
      c.limits.per_test_timeout =
          std::chrono::milliseconds(l.value("perTestTimeoutMs", c.limits.per_test_timeout.count()));
      c.limits.max_call_depth = l.value("maxCallDepth", c.limits.max_call_depth);
    }
    if (j.contains("outputDir")) {
      c.output_dir = ResolvePath(base_dir, j["outputDir"].get<std::string>());
    } else {
      c.output_dir = ResolvePath(base_dir, "out");
    }
    c.workers = j.value("workers", c.workers);
    c.max_in_flight = j.value("maxInFlight", c.max_in_flight);
    if (j.contains("aggregation")) c.aggregation = ParseAggregation(j["aggregation"]);
    c.excluded_example_paths =
        j.value("excludedExamplePaths", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("bad config: ") + e.what());
  }
  c.Validate();
  return c;
}

PipelineConfig LoadPipelineConfig(const fs::path& path) {
  json j;
  try {
    j = json::parse(ReadFile(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
  return PipelineConfigFromJson(j, path.parent_path());
}

json PipelineConfigToJson(const PipelineConfig& c) {
  json targets = c.targets.empty() ? json("all-public") : json(c.targets);
  return {{"corpusPath", c.corpus_path.string()},
          {"targets", targets},
          {"provider", llm::ProviderConfigToJson(c.provider)},
          {"K", c.attempts},
          {"M", c.amplified_inputs},
          {"llmRevisions", c.llm_revisions},
          {"mutantCap", c.mutant_cap},
          {"seed", c.seed},
          {"limits",
           {{"maxSteps", c.limits.max_steps},
            {"perTestTimeoutMs", c.limits.per_test_timeout.count()},
            {"maxCallDepth", c.limits.max_call_depth}}},
          {"outputDir", c.output_dir.string()},
          {"workers", c.workers},
          {"maxInFlight", c.max_in_flight},
          {"aggregation", AggregationName(c.aggregation)},
          {"excludedExamplePaths", c.excluded_example_paths}};
}

minilang::MethodRef ResolveMethod(const minilang::Program& program, const std::string& text) {
  auto ref = minilang::ParseMethodRef(text);
  if (!ref) throw Error(ErrorCode::kUnknownMethod, "malformed method ref: " + text);
  if (program.FindMethod(*ref) != nullptr) return *ref;
  if (text.find('(') == std::string::npos) {
    auto overloads = program.ResolveName(ref->class_name, ref->name);
    if (overloads.size() == 1) return overloads.front();
    if (overloads.size() > 1) {
      throw Error(ErrorCode::kUnknownMethod, "ambiguous method ref: " + text);
    }
  }
  throw Error(ErrorCode::kUnknownMethod, "unknown method " + text);
}

std::vector<minilang::MethodRef> ResolveTargets(const minilang::Program& program,
                                                const std::vector<std::string>& targets) {
  std::vector<minilang::MethodRef> refs;
  if (targets.empty()) {
    for (const auto& cls : program.classes()) {
      for (const auto& method : cls.methods) refs.push_back(minilang::RefOf(cls, method));
    }
    return refs;
  }
  for (const auto& text : targets) refs.push_back(ResolveMethod(program, text));
  return refs;
}

std::string Slug(const std::string& text) {
  std::string slug = text;
  for (char& c : slug) {
    if (c == '(' || c == ')' || c == '<' || c == '>' || c == ',') c = '_';
  }
  return slug;
}

Metrics ComputeMetrics(const json& task) {
  Metrics m;
  for (const auto& pair : task.value("pairs", json::array())) {
    for (const auto& attempt : pair.value("attempts", json::array())) {
      ++m.num_generated;
      bool executable = attempt.value("executableMtc", false);
      bool valid = executable && attempt.value("valid", false);
      m.executable += executable ? 1 : 0;
      m.valid += valid ? 1 : 0;
    }
  }
  m.false_alarms = m.executable - m.valid;
  if (m.num_generated > 0) {
    m.pct_executable_mtc = static_cast<double>(m.executable) / m.num_generated;
    m.pct_valid_mtc = static_cast<double>(m.valid) / m.num_generated;
  }
  if (m.executable > 0) m.pct_false_alarm = static_cast<double>(m.false_alarms) / m.executable;
  m.task_successful = m.valid > 0;
  return m;
}

json MetricsToJson(const Metrics& m) {
  return {{"numGenerated", m.num_generated},
          {"numExecutableMtc", m.executable},
          {"numValidMtc", m.valid},
          {"numFalseAlarm", m.false_alarms},
          {"pctExecutableMtc", m.pct_executable_mtc},
          {"pctValidMtc", m.pct_valid_mtc},
          {"pctFalseAlarm", m.pct_false_alarm},
          {"taskSuccessful", m.task_successful}};
}

RunResult RunPipeline(const PipelineConfig& config, llm::ChatProvider& provider) {
  return Orchestrate(config, provider, RunPair, true);
}

RunResult RunPipeline(const PipelineConfig& config) {
  config.Validate();
  config.provider.Validate();
  auto provider = llm::MakeProvider(config.provider);
  return RunPipeline(config, *provider);
}

RunResult GenerateCandidates(const PipelineConfig& config, llm::ChatProvider& provider) {
  return Orchestrate(config, provider, GenerateOnlyPair, false);
}

json RenderMetrics(const json& report) {
  if (!report.is_object() || report.value("schemaVersion", 0) != kSchemaVersion ||
      !report.contains("tasks")) {
    throw Error(ErrorCode::kInvalidArgument, "not a run report");
  }
  json tasks = json::array();
  for (const auto& task : report["tasks"]) {
    tasks.push_back({{"target", task.value("target", "")},
                     {"metrics", MetricsToJson(ComputeMetrics(task))}});
  }
  return {{"schemaVersion", kSchemaVersion}, {"tasks", tasks}};
}

json AnalyzeJson(const code_model::Corpus& corpus,
                 const std::vector<minilang::MethodRef>& targets) {
  json out = json::array();
  for (const auto& target : targets) {
    json pairs = json::array();
    for (const auto& pair : coupling::AnalyzeCoupling(*corpus.program, target)) {
      pairs.push_back(coupling::PairToJson(pair));
    }
    out.push_back({{"target", target.ToString()}, {"pairs", pairs}});
  }
  return {{"schemaVersion", kSchemaVersion}, {"targets", out}};
}

json FactsJson(const code_model::Corpus& corpus,
               const std::vector<minilang::MethodRef>& methods) {
  json out = json::array();
  for (const auto& method : methods) {
    out.push_back(code_model::FactsToJson(code_model::ExtractFacts(*corpus.program, method)));
  }
  return {{"schemaVersion", kSchemaVersion}, {"methods", out}};
}

json MutateJson(const code_model::Corpus& corpus, const coupling::CoupledPair& pair,
                std::size_t cap, std::uint64_t seed) {
  json mutants = json::array();
  for (const auto& m : validation::GenerateMutants(*corpus.program, pair, {cap, seed})) {
    mutants.push_back(MutantToJson(*corpus.program, m));
  }
  return {{"schemaVersion", kSchemaVersion},
          {"target", pair.target.ToString()},
          {"candidate", pair.candidate.ToString()},
          {"mutants", mutants}};
}

coupling::CoupledPair FindPair(const minilang::Program& program, const minilang::MethodRef& target,
                               const minilang::MethodRef& candidate) {
  for (auto& pair : coupling::AnalyzeCoupling(program, target)) {
    if (pair.candidate == candidate) return pair;
  }
  throw Error(ErrorCode::kInvalidArgument,
              target.ToString() + " and " + candidate.ToString() + " are not coupled");
}

json ValidateJson(const code_model::Corpus& corpus, const coupling::CoupledPair& pair,
                  const ValidateRequest& request) {
  const minilang::Program& program = *corpus.program;
  auto parsed = minilang::ParseTestSource(request.test_path, request.test_source);
  if (!parsed.diagnostics.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                minilang::FormatDiagnostics(parsed.diagnostics));
  }
  auto test = std::find_if(parsed.classes.begin(), parsed.classes.end(), [](const auto& c) {
    return std::any_of(c.decl.methods.begin(), c.decl.methods.end(),
                       [](const auto& m) { return m.IsTest(); });
  });
  if (test == parsed.classes.end()) {
    throw Error(ErrorCode::kInvalidArgument, request.test_path + ": no @Test method");
  }
  auto checked = minilang::CheckTestClass(program, *test);
  if (auto* diagnostics = std::get_if<minilang::DiagnosticList>(&checked)) {
    throw Error(ErrorCode::kInvalidArgument, minilang::FormatDiagnostics(*diagnostics));
  }
  const auto& checked_class = std::get<minilang::CheckedTestClass>(checked);
  auto mutants = validation::GenerateMutants(program, pair, {request.mutant_cap, request.seed});
  json out = {{"schemaVersion", kSchemaVersion},
              {"target", pair.target.ToString()},
              {"candidate", pair.candidate.ToString()},
              {"properties", validation::PropertiesToJson(validation::CheckMtcProperties(
                                 program, checked_class, pair))},
              {"verdict", validation::VerdictToJson(validation::Validate(
                              test->decl.name, *test, program, mutants, request.limits,
                              request.aggregation))}};
  try {
    out["skeleton"] =
        skeleton::SkeletonToJson(skeleton::ExtractSkeleton(program, checked_class, pair));
  } catch (const Error& e) {
    out["skeletonError"] = e.what();
  }
  return out;
}

json CompareAgainstReference(const json& report, const code_model::Corpus& corpus) {
  if (!report.is_object() || !report.contains("tasks")) {
    throw Error(ErrorCode::kInvalidArgument, "not a run report");
  }
  json targets = json::array();
  int compared = 0;
  int l1_count = 0;
  int l2_count = 0;
  for (const auto& task : report["tasks"]) {
    std::string target_text = task.value("target", "");
    json entry = {{"target", target_text}};
    minilang::MethodRef target = ResolveMethod(*corpus.program, target_text);
    std::optional<skeleton::MrSkeleton> reference;
    std::string reference_test;
    std::string last_error = "no corpus test";
    for (const auto& file : corpus.tests) {
      for (const auto& cls : file.classes) {
        if (reference) break;
        try {
          reference = skeleton::ExtractReferenceSkeleton(*corpus.program, cls, target);
          reference_test = file.path + ":" + cls.decl.name + "." + reference->test_method;
        } catch (const Error& e) {
          last_error = e.what();
        }
      }
    }
    if (!reference) {
      entry["skipped"] = last_error;
      targets.push_back(entry);
      continue;
    }
    bool l1 = false;
    bool l2 = false;
    int retained = 0;
    for (const auto& pair : task.value("pairs", json::array())) {
      for (const auto& attempt : pair.value("attempts", json::array())) {
        if (!attempt.contains("skeleton") || !attempt.contains("verdict")) continue;
        if (attempt["verdict"].value("decision", "") == "FILTERED") continue;
        ++retained;
        auto result = skeleton::Compare(skeleton::SkeletonFromJson(attempt["skeleton"]), *reference);
        l1 = l1 || result.l1;
        l2 = l2 || result.l2;
      }
    }
    ++compared;
    l1_count += l1 ? 1 : 0;
    l2_count += l2 ? 1 : 0;
    entry["referenceTest"] = reference_test;
    entry["reference"] = skeleton::SkeletonToJson(*reference);
    entry["retained"] = retained;
    entry["l1Consistency"] = l1;
    entry["l2Consistency"] = l2;
    targets.push_back(entry);
  }
  auto rate = [&](int n) { return compared == 0 ? 0.0 : static_cast<double>(n) / compared; };
  return {{"schemaVersion", kSchemaVersion},
          {"targets", targets},
          {"compared", compared},
          {"l1Rate", rate(l1_count)},
          {"l2Rate", rate(l2_count)}};
}

}  // namespace mtcgen::pipeline
