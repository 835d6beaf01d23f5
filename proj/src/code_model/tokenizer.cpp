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

#include "code_model/tokenizer.hpp"

#include <cctype>

namespace mtcgen::code_model {
namespace {

bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool IsLower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool IsLetter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const std::set<std::string>& DefaultStoplist() {
  static const std::set<std::string> kStoplist = {"get", "set", "is", "to", "a", "the"};
  return kStoplist;
}

std::vector<std::string> SplitIdentifier(std::string_view name) {
  std::vector<std::string> pieces;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) pieces.push_back(current);
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (!IsLetter(c)) {
      flush();
      continue;
    }
    if (IsUpper(c) && !current.empty()) {
      char prev = name[i - 1];
      bool next_lower = i + 1 < name.size() && IsLower(name[i + 1]);
      if (IsLower(prev) || (IsUpper(prev) && next_lower)) flush();
    }
    current.push_back(c);
  }
  flush();
  return pieces;
}

std::set<std::string> NameTokens(std::string_view name, const std::set<std::string>& stoplist) {
  std::set<std::string> tokens;
  for (const auto& piece : SplitIdentifier(name)) {
    std::string token = Lower(piece);
    if (token.size() <= 1 || stoplist.count(token) > 0) continue;
    tokens.insert(std::move(token));
  }
  if (tokens.empty() && !name.empty()) tokens.insert(Lower(name));
  return tokens;
}

}  // namespace mtcgen::code_model
