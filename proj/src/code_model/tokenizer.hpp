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

#ifndef MTCGEN_CODE_MODEL_TOKENIZER_HPP_
#define MTCGEN_CODE_MODEL_TOKENIZER_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mtcgen::code_model {

// {get, set, is, to, a, the}
const std::set<std::string>& DefaultStoplist();

// Raw name pieces: split at camelCase and acronym boundaries, underscores and
// digits. Case is preserved.
std::vector<std::string> SplitIdentifier(std::string_view name);

// Lowercased pieces of `name` with single-letter tokens and stoplisted words
// removed. Falls back to the whole lowercased name when nothing survives, so
// the result is never empty for a non-empty name.
std::set<std::string> NameTokens(std::string_view name,
                                 const std::set<std::string>& stoplist = DefaultStoplist());

}  // namespace mtcgen::code_model

#endif  // MTCGEN_CODE_MODEL_TOKENIZER_HPP_
