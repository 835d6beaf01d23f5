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

#include "minilang/lexer.hpp"

#include <array>
#include <cctype>

namespace mtcgen::minilang {
namespace {

constexpr std::array<std::string_view, 18> kKeywords = {
    "class", "static", "void", "int",   "bool",   "string", "list", "var",  "if",
    "else",  "while",  "return", "throw", "new", "true",   "false", "null", "this"};

constexpr std::array<std::string_view, 9> kTwoCharPuncts = {"<=", ">=", "==", "!=", "&&",
                                                            "||", "+=", "-=", "*="};

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

bool IsKeyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> Tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  auto advance = [&](std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos < source.size(); ++i) {
      if (source[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++pos;
    }
  };
  auto error = [&](std::string message, int at_line, int at_column) {
    tokens.push_back({TokenKind::kError, std::move(message), at_line, at_column});
    tokens.push_back({TokenKind::kEof, "", line, column});
    return tokens;
  };

  while (pos < source.size()) {
    char c = source[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '/' && pos + 1 < source.size() && source[pos + 1] == '/') {
      while (pos < source.size() && source[pos] != '\n') advance();
      continue;
    }
    if (c == '/' && pos + 1 < source.size() && source[pos + 1] == '*') {
      int start_line = line;
      int start_column = column;
      advance(2);
      bool closed = false;
      while (pos < source.size()) {
        if (source[pos] == '*' && pos + 1 < source.size() && source[pos + 1] == '/') {
          advance(2);
          closed = true;
          break;
        }
        advance();
      }
      if (!closed) return error("unterminated block comment", start_line, start_column);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = column;

    if (IsIdentStart(c)) {
      std::size_t start = pos;
      while (pos < source.size() && IsIdentChar(source[pos])) advance();
      tok.kind = TokenKind::kIdent;
      tok.text = std::string(source.substr(start, pos - start));
      tokens.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < source.size() && std::isdigit(static_cast<unsigned char>(source[pos]))) {
        advance();
      }
      if (pos < source.size() && IsIdentStart(source[pos])) {
        return error("malformed number", tok.line, tok.column);
      }
      tok.kind = TokenKind::kInt;
      tok.text = std::string(source.substr(start, pos - start));
      tokens.push_back(std::move(tok));
      continue;
    }
    if (c == '"') {
      advance();
      std::string value;
      bool closed = false;
      while (pos < source.size()) {
        char ch = source[pos];
        if (ch == '"') {
          advance();
          closed = true;
          break;
        }
        if (ch == '\n') break;
        if (ch == '\\') {
          if (pos + 1 >= source.size()) break;
          char esc = source[pos + 1];
          switch (esc) {
            case 'n': value += '\n'; advance(2); break;
            case 't': value += '\t'; advance(2); break;
            case 'r': value += '\r'; advance(2); break;
            case '0': value += '\0'; advance(2); break;
            case '\\': value += '\\'; advance(2); break;
            case '"': value += '"'; advance(2); break;
            case 'x': {
              int hi = pos + 2 < source.size() ? HexValue(source[pos + 2]) : -1;
              int lo = pos + 3 < source.size() ? HexValue(source[pos + 3]) : -1;
              if (hi < 0 || lo < 0) return error("bad \\x escape", line, column);
              value += static_cast<char>(hi * 16 + lo);
              advance(4);
              break;
            }
            default:
              return error(std::string("unknown escape \\") + esc, line, column);
          }
          continue;
        }
        value += ch;
        advance();
      }
      if (!closed) return error("unterminated string literal", tok.line, tok.column);
      tok.kind = TokenKind::kString;
      tok.text = std::move(value);
      tokens.push_back(std::move(tok));
      continue;
    }

    if (pos + 1 < source.size()) {
      std::string_view two = source.substr(pos, 2);
      bool matched = false;
      for (auto p : kTwoCharPuncts) {
        if (p == two) {
          matched = true;
          break;
        }
      }
      if (matched) {
        tok.kind = TokenKind::kPunct;
        tok.text = std::string(two);
        advance(2);
        tokens.push_back(std::move(tok));
        continue;
      }
    }
    static constexpr std::string_view kSingle = "(){}[];,.@<>=+-*/%!";
    if (kSingle.find(c) != std::string_view::npos) {
      tok.kind = TokenKind::kPunct;
      tok.text = std::string(1, c);
      advance();
      tokens.push_back(std::move(tok));
      continue;
    }
    return error(std::string("unexpected character '") + c + "'", line, column);
  }
  tokens.push_back({TokenKind::kEof, "", line, column});
  return tokens;
}

std::string QuoteString(std::string_view value) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7f) {
          out += "\\x";
          out += kHex[u >> 4];
          out += kHex[u & 0xf];
        } else {
          out += c;
        }
      }
    }
  }
  out += '"';
  return out;
}

}  // namespace mtcgen::minilang
