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

#include "generation/prompt.hpp"

#include <cctype>

#include "common/error.hpp"
#include "minilang/printer.hpp"

namespace mtcgen::generation {
namespace {

using minilang::MethodRef;

std::string Capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

const minilang::MethodDecl& MustFind(const minilang::Program& program, const MethodRef& ref) {
  const minilang::MethodDecl* decl = program.FindMethod(ref);
  if (decl == nullptr) throw Error(ErrorCode::kUnknownMethod, "unknown method " + ref.ToString());
  return *decl;
}

std::string Fenced(const std::string& code) { return "```mini\n" + code + "```\n"; }

}  // namespace

std::string SystemMessage() {
  return "You are an expert in the mini language described below and in metamorphic testing. "
         "Your task is to write a metamorphic test case (MTC) for a pair of functionally coupled "
         "methods: invoke one method on a source input, derive a follow-up input, invoke the "
         "other method on it, and assert the relation between the inputs and outputs.\n"
         "The mini language has the types int, bool, string, list<T> and classes; statements "
         "var/typed declarations, assignment, if/else, while, return and throw; and the builtins "
         "print, length, charAt, indexOf, fromChars, substring, str, append, contains, equals, "
         "assertEquals, assertNotEquals, assertTrue and assertFalse. Test methods are instance "
         "methods annotated with @Test.\n"
         "Reply with exactly one test class inside a single ```mini code block.";
}

std::string TestClassName(const coupling::CoupledPair& pair) {
  return pair.target.class_name + Capitalized(pair.target.name) +
         Capitalized(pair.candidate.name) + "MTC";
}

std::string ClassSkeleton(const minilang::ClassDecl& cls, std::size_t byte_budget,
                          bool* truncated) {
  std::vector<std::string> lines;
  for (const auto& f : cls.fields) {
    std::string line = "    ";
    if (f.is_static) line += "static ";
    line += f.type.ToString() + " " + f.name + ";";
    lines.push_back(line);
  }
  for (const auto& m : cls.methods) lines.push_back("    " + minilang::PrintSignature(m));
  std::string out = "class " + cls.name + " {\n";
  *truncated = false;
  for (const auto& line : lines) {
    if (out.size() + line.size() + 1 > byte_budget) {
      *truncated = true;
      out += "    // ... remaining members omitted\n";
      break;
    }
    out += line + "\n";
  }
  return out + "}\n";
}

std::string PromptBundle::Render() const {
  std::string out;
  out += "# Method pair\n" + pair_title + "\n";
  out += "\n# Code of the paired methods\n" + Fenced(pair_code);
  out += "\n# Coupling features on the paired methods\n" + feature_text;
  out += "\n# Invocation examples\n";
  if (invocation_examples.empty()) {
    out += "No invocation examples available.\n";
  } else {
    for (std::size_t i = 0; i < invocation_examples.size(); ++i) {
      const auto& ex = invocation_examples[i];
      out += "## Example " + std::to_string(i + 1) + ": invokes `" + ex.invoked.ToString() +
             "` (" + ex.origin_path + ")\n" + Fenced(ex.test_method_source);
    }
  }
  out += "\n# Skeleton of the container class\n" + Fenced(class_skeleton);
  out += "\n# Deliverable\n" + Fenced(mtc_template);
  return out;
}

PromptBundle BuildPrompt(const coupling::CoupledPair& pair, const code_model::Corpus& corpus,
                         const PromptConfig& config) {
  const minilang::Program& program = *corpus.program;
  PromptBundle b;
  b.system_message = SystemMessage();
  b.pair_title = "`" + pair.target.ToString() + "` and `" + pair.candidate.ToString() + "`";
  b.pair_code = minilang::PrintMethod(MustFind(program, pair.target), 0) + "\n" +
                minilang::PrintMethod(MustFind(program, pair.candidate), 0);
  b.feature_text = coupling::FeatureSummary(pair);
  b.invocation_examples = code_model::RetrieveInvocationExamples(
      corpus, pair.target, pair.candidate, config.max_examples_per_method,
      config.excluded_example_paths);
  const minilang::ClassDecl* cls = program.FindClass(pair.target.class_name);
  if (cls == nullptr) {
    throw Error(ErrorCode::kUnknownMethod, "unknown class " + pair.target.class_name);
  }
  b.class_skeleton = ClassSkeleton(*cls, config.skeleton_byte_budget, &b.skeleton_truncated);
  b.test_class_name = TestClassName(pair);
  b.mtc_template = "class " + b.test_class_name +
                   " {\n"
                   "    @Test\n"
                   "    void MTC() {\n"
                   "        // 1. construct the source input\n"
                   "        // 2. invoke " + pair.target.QualifiedName() +
                   " or " + pair.candidate.QualifiedName() +
                   " on it (source output)\n"
                   "        // 3. derive the follow-up input from the source input and output\n"
                   "        // 4. invoke the other method on the follow-up input (follow-up "
                   "output)\n"
                   "        // 5. assert the output relation\n"
                   "    }\n"
                   "}\n";
  return b;
}

}  // namespace mtcgen::generation
