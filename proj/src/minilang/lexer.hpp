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

#ifndef MTCGEN_MINILANG_LEXER_HPP_
#define MTCGEN_MINILANG_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace mtcgen::minilang {

enum class TokenKind {
  kIdent,
  kInt,     // text holds the digits; sign is handled by the parser
  kString,  // text holds the decoded value
  kPunct,   // text holds the operator / punctuation spelling
  kEof,
  kError,   // text holds the message
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;
  int line = 1;
  int column = 1;

  bool Is(std::string_view punct) const { return kind == TokenKind::kPunct && text == punct; }
  bool IsWord(std::string_view word) const { return kind == TokenKind::kIdent && text == word; }
};

// Splits `source` into tokens. Stops at the first lexical error, emitting a
// kError token followed by kEof.
std::vector<Token> Tokenize(std::string_view source);

bool IsKeyword(std::string_view word);

// Escapes a string value so that Tokenize reads it back unchanged.
std::string QuoteString(std::string_view value);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_LEXER_HPP_
