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

#ifndef MTCGEN_CODE_MODEL_CORPUS_HPP_
#define MTCGEN_CODE_MODEL_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minilang/program.hpp"

namespace mtcgen::code_model {

struct CorpusTestFile {
  std::string path;  // relative to the corpus root
  std::vector<minilang::CheckedTestClass> classes;
  // Parse or check failures; the affected classes are left out of `classes`.
  minilang::DiagnosticList diagnostics;
};

// A corpus directory: `src/*.mini` holds the program, `test/*.mini` its tests.
// All recorded paths are relative to the root.
struct Corpus {
  std::filesystem::path root;
  std::vector<minilang::SourceFile> sources;
  minilang::ProgramPtr program;
  std::vector<CorpusTestFile> tests;
};

// Throws Error(kCorpus) when the directory has no sources or the program does
// not type-check; the message carries the diagnostics.
Corpus LoadCorpus(const std::filesystem::path& root);

// Type-checks the test classes in `text` against `program`.
CorpusTestFile CheckTestFile(const minilang::Program& program, const std::string& path,
                             const std::string& text);

struct InvocationExample {
  std::string test_method_source;
  minilang::MethodRef invoked;
  std::string origin_path;
  std::string test_class;
  std::string test_method;
};

// Scans test files in path order and keeps, for each of `first` and `second`,
// at most `max_per_method` @Test methods that call it. A test method is
// listed once even if it calls both. Files in `excluded_paths` are skipped.
std::vector<InvocationExample> RetrieveInvocationExamples(
    const Corpus& corpus, const minilang::MethodRef& first, const minilang::MethodRef& second,
    std::size_t max_per_method = 3, const std::set<std::string>& excluded_paths = {});

// True when `method` (from a class checked with `semantics`) calls `callee`.
// The declared method a call expression binds to; nullopt for builtins.
std::optional<minilang::MethodRef> CalleeOf(const minilang::Program& program,
                                            const minilang::Semantics& semantics,
                                            const minilang::Expr& call);

bool MethodCalls(const minilang::Program& program, const minilang::Semantics& semantics,
                 const minilang::MethodDecl& method, const minilang::MethodRef& callee);

}  // namespace mtcgen::code_model

#endif  // MTCGEN_CODE_MODEL_CORPUS_HPP_
