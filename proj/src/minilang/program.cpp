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

#include "minilang/program.hpp"

#include <cctype>
#include <utility>

#include "minilang/checker.hpp"
#include "minilang/lexer.hpp"
#include "minilang/parser.hpp"

namespace mtcgen::minilang {

std::string MethodRef::ToString() const {
  std::string s = class_name + "." + name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) s += ",";
    s += params[i].ToString();
  }
  return s + ")";
}

bool operator<(const MethodRef& a, const MethodRef& b) { return a.ToString() < b.ToString(); }

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// Splits on commas that are not nested inside `<...>`.
std::optional<std::vector<std::string_view>> SplitTopLevel(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '<') ++depth;
    if (s[i] == '>' && --depth < 0) return std::nullopt;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) return std::nullopt;
  parts.push_back(Trim(s.substr(start)));
  return parts;
}

}  // namespace

std::optional<TypeName> ParseTypeName(std::string_view text) {
  text = Trim(text);
  if (text == "int") return TypeName::Int();
  if (text == "bool") return TypeName::Bool();
  if (text == "string") return TypeName::String();
  if (text == "void") return TypeName::Void();
  if (text.size() > 6 && text.substr(0, 4) == "list" && text.back() == '>') {
    std::string_view rest = Trim(text.substr(4));
    if (rest.empty() || rest.front() != '<') return std::nullopt;
    auto elem = ParseTypeName(rest.substr(1, rest.size() - 2));
    if (!elem || elem->IsVoid()) return std::nullopt;
    return TypeName::List(*elem);
  }
  if (IsIdentifier(text) && !IsKeyword(text)) return TypeName::Class(std::string(text));
  return std::nullopt;
}

std::optional<MethodRef> ParseMethodRef(std::string_view text) {
  text = Trim(text);
  std::string_view head = text;
  std::optional<std::string_view> params;
  auto paren = text.find('(');
  if (paren != std::string_view::npos) {
    if (text.back() != ')') return std::nullopt;
    head = Trim(text.substr(0, paren));
    params = Trim(text.substr(paren + 1, text.size() - paren - 2));
  }
  auto dot = head.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  MethodRef ref;
  ref.class_name = std::string(Trim(head.substr(0, dot)));
  ref.name = std::string(Trim(head.substr(dot + 1)));
  if (!IsIdentifier(ref.class_name) || !IsIdentifier(ref.name)) return std::nullopt;
  if (params && !params->empty()) {
    auto parts = SplitTopLevel(*params);
    if (!parts) return std::nullopt;
    for (auto part : *parts) {
      auto type = ParseTypeName(part);
      if (!type || type->IsVoid()) return std::nullopt;
      ref.params.push_back(*type);
    }
  }
  return ref;
}

MethodRef RefOf(const ClassDecl& cls, const MethodDecl& method) {
  return MethodRef{cls.name, method.name, method.ParamTypes()};
}

Program::Program(std::vector<ClassDecl> classes, std::vector<std::string> paths,
                 Semantics semantics)
    : classes_(std::move(classes)), paths_(std::move(paths)), semantics_(std::move(semantics)) {
  paths_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) by_name_.emplace(classes_[i].name, i);
}

const ClassDecl* Program::FindClass(std::string_view name) const {
  auto index = ClassIndex(name);
  return index ? &classes_[*index] : nullptr;
}

std::optional<std::size_t> Program::ClassIndex(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const MethodDecl* Program::FindMethod(const MethodRef& ref) const {
  const ClassDecl* cls = FindClass(ref.class_name);
  if (cls == nullptr) return nullptr;
  for (const auto& m : cls->methods) {
    if (m.name == ref.name && m.ParamTypes() == ref.params) return &m;
  }
  return nullptr;
}

std::vector<MethodRef> Program::ResolveName(const std::string& class_name,
                                            const std::string& name) const {
  std::vector<MethodRef> out;
  const ClassDecl* cls = FindClass(class_name);
  if (cls == nullptr) return out;
  for (const auto& m : cls->methods) {
    if (m.name == name) out.push_back(RefOf(*cls, m));
  }
  return out;
}

std::optional<SourceOrigin> Program::OriginOf(NodeId decl) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const ClassDecl& cls = classes_[i];
    if (cls.meta.id == decl) return SourceOrigin{paths_[i], cls.meta.span.line};
    for (const auto& f : cls.fields) {
      if (f.meta.id == decl) return SourceOrigin{paths_[i], f.meta.span.line};
    }
    for (const auto& m : cls.methods) {
      if (m.meta.id == decl) return SourceOrigin{paths_[i], m.meta.span.line};
    }
  }
  return std::nullopt;
}

ProgramResult ParseProgram(const std::vector<SourceFile>& sources) {
  NodeIdAllocator ids;
  std::vector<ClassDecl> classes;
  std::vector<std::string> paths;
  DiagnosticList diags;
  for (const auto& source : sources) {
    ParseResult parsed = ParseSource(source.path, source.text, ids);
    for (auto& d : parsed.diagnostics) diags.push_back(std::move(d));
    for (auto& cls : parsed.classes) {
      classes.push_back(std::move(cls));
      paths.push_back(source.path);
    }
  }
  if (!diags.empty()) return ProgramResult{nullptr, std::move(diags)};
  return CheckProgram(std::move(classes), std::move(paths));
}

ProgramResult CheckProgram(std::vector<ClassDecl> classes, std::vector<std::string> paths) {
  paths.resize(classes.size());
  std::vector<ClassEntry> entries;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    entries.push_back(ClassEntry{&classes[i], paths[i]});
    all.push_back(i);
  }
  Semantics semantics;
  DiagnosticList diags = CheckClasses(entries, all, semantics);
  if (!diags.empty()) return ProgramResult{nullptr, std::move(diags)};
  return ProgramResult{
      std::make_shared<const Program>(std::move(classes), std::move(paths), std::move(semantics)),
      {}};
}

TestParseResult ParseTestSource(const std::string& path, std::string_view text) {
  NodeIdAllocator ids(NodeIdAllocator::kTestIdBase);
  ParseResult parsed = ParseSource(path, text, ids);
  TestParseResult out;
  out.diagnostics = std::move(parsed.diagnostics);
  for (auto& cls : parsed.classes) out.classes.push_back(TestClass{std::move(cls), path});
  return out;
}

TestCheckResult CheckTestClass(const Program& program, const TestClass& test) {
  std::vector<ClassEntry> entries;
  for (std::size_t i = 0; i < program.classes().size(); ++i) {
    entries.push_back(ClassEntry{&program.classes()[i], program.PathOf(i)});
  }
  entries.push_back(ClassEntry{&test.decl, test.path});
  Semantics semantics;
  DiagnosticList diags = CheckClasses(entries, {entries.size() - 1}, semantics);
  if (!diags.empty()) return diags;
  return CheckedTestClass{test.decl, test.path, std::move(semantics)};
}

}  // namespace mtcgen::minilang
