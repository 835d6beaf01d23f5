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

#include "code_model/corpus.hpp"

#include "common/error.hpp"
#include "common/files.hpp"
#include "minilang/printer.hpp"
#include "minilang/visit.hpp"

namespace mtcgen::code_model {

namespace fs = std::filesystem;
using namespace minilang;

Corpus LoadCorpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kCorpus, "corpus directory not found: " + root.string());
  }
  Corpus corpus;
  corpus.root = root;
  for (const auto& file : ListFiles(root / "src", ".mini")) {
    corpus.sources.push_back(
        SourceFile{fs::relative(file, root).generic_string(), ReadFile(file)});
  }
  if (corpus.sources.empty()) {
    throw Error(ErrorCode::kCorpus, "no src/*.mini files in " + root.string());
  }
  ProgramResult result = ParseProgram(corpus.sources);
  if (!result.ok()) {
    throw Error(ErrorCode::kCorpus,
                "corpus does not type-check:\n" + FormatDiagnostics(result.diagnostics));
  }
  corpus.program = result.program;
  for (const auto& file : ListFiles(root / "test", ".mini")) {
    corpus.tests.push_back(
        CheckTestFile(*corpus.program, fs::relative(file, root).generic_string(), ReadFile(file)));
  }
  return corpus;
}

CorpusTestFile CheckTestFile(const Program& program, const std::string& path,
                             const std::string& text) {
  CorpusTestFile out;
  out.path = path;
  TestParseResult parsed = ParseTestSource(path, text);
  out.diagnostics = parsed.diagnostics;
  for (const auto& test : parsed.classes) {
    TestCheckResult checked = CheckTestClass(program, test);
    if (auto* diags = std::get_if<DiagnosticList>(&checked)) {
      out.diagnostics.insert(out.diagnostics.end(), diags->begin(), diags->end());
      continue;
    }
    out.classes.push_back(std::move(std::get<CheckedTestClass>(checked)));
  }
  return out;
}

std::optional<MethodRef> CalleeOf(const Program& program, const Semantics& semantics,
                                  const Expr& call) {
  auto it = semantics.calls.find(call.meta.id);
  if (it == semantics.calls.end() || it->second.kind == CallBinding::Kind::kBuiltin) {
    return std::nullopt;
  }
  const ClassDecl* owner = program.FindClass(it->second.owner);
  if (owner == nullptr || it->second.method_index >= owner->methods.size()) return std::nullopt;
  return RefOf(*owner, owner->methods[it->second.method_index]);
}

bool MethodCalls(const Program& program, const Semantics& semantics, const MethodDecl& method,
                 const MethodRef& callee) {
  bool found = false;
  VisitBlockExprs(method.body, [&](const Expr& e) {
    if (found || !e.As<CallExpr>()) return;
    found = CalleeOf(program, semantics, e) == callee;
  });
  return found;
}

std::vector<InvocationExample> RetrieveInvocationExamples(const Corpus& corpus,
                                                          const MethodRef& first,
                                                          const MethodRef& second,
                                                          std::size_t max_per_method,
                                                          const std::set<std::string>& excluded) {
  std::vector<InvocationExample> out;
  std::set<std::pair<std::string, std::string>> taken;
  for (const MethodRef* member : {&first, &second}) {
    std::size_t count = 0;
    for (const auto& file : corpus.tests) {
      if (count >= max_per_method) break;
      if (excluded.count(file.path) > 0) continue;
      for (const auto& cls : file.classes) {
        if (count >= max_per_method) break;
        for (const auto& m : cls.decl.methods) {
          if (count >= max_per_method) break;
          if (!m.IsTest() || !MethodCalls(*corpus.program, cls.semantics, m, *member)) continue;
          ++count;
          if (!taken.emplace(cls.decl.name, m.name).second) continue;
          out.push_back(InvocationExample{PrintMethod(m), *member, file.path, cls.decl.name,
                                          m.name});
        }
      }
    }
  }
  return out;
}

}  // namespace mtcgen::code_model
