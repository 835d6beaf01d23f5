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

#ifndef MTCGEN_GENERATION_PROMPT_HPP_
#define MTCGEN_GENERATION_PROMPT_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "code_model/corpus.hpp"
#include "coupling/coupling.hpp"

namespace mtcgen::generation {

struct PromptConfig {
  std::size_t max_examples_per_method = 3;
  // The class-skeleton section is cut at a line boundary past this size.
  std::size_t skeleton_byte_budget = 8192;
  // Test files never used as invocation examples.
  std::set<std::string> excluded_example_paths;
};

struct PromptBundle {
  std::string system_message;
  // `A.m(..)` and `A.n(..)`
  std::string pair_title;
  std::string pair_code;
  std::string feature_text;
  std::vector<code_model::InvocationExample> invocation_examples;
  std::string class_skeleton;
  bool skeleton_truncated = false;
  std::string mtc_template;
  std::string test_class_name;

  // The user message: every section under a fixed heading, in fixed order.
  std::string Render() const;
};

std::string SystemMessage();

// Name of the generated test class for a pair, e.g.
// AESCodecEncryptTextDecryptTextMTC.
std::string TestClassName(const coupling::CoupledPair& pair);

// Fields plus method signatures; bodies elided.
std::string ClassSkeleton(const minilang::ClassDecl& cls, std::size_t byte_budget,
                          bool* truncated);

PromptBundle BuildPrompt(const coupling::CoupledPair& pair, const code_model::Corpus& corpus,
                         const PromptConfig& config = {});

}  // namespace mtcgen::generation

#endif  // MTCGEN_GENERATION_PROMPT_HPP_
