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

#ifndef MTCGEN_MINILANG_PROGRAM_HPP_
#define MTCGEN_MINILANG_PROGRAM_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "minilang/ast.hpp"
#include "minilang/diagnostics.hpp"

namespace mtcgen::minilang {

// Identifies one method, including its overload.
struct MethodRef {
  std::string class_name;
  std::string name;
  std::vector<TypeName> params;

  // `Class.name(type,type)`
  std::string ToString() const;
  // `Class.name`
  std::string QualifiedName() const { return class_name + "." + name; }

  bool operator==(const MethodRef&) const = default;
};

bool operator<(const MethodRef& a, const MethodRef& b);

// Parses `Class.name` or `Class.name(type,...)`. Returns nullopt on bad syntax.
std::optional<MethodRef> ParseMethodRef(std::string_view text);
// Parses a type spelling such as `list<int>`.
std::optional<TypeName> ParseTypeName(std::string_view text);

MethodRef RefOf(const ClassDecl& cls, const MethodDecl& method);

// ---- binding tables produced by the checker, keyed by node id ----

struct IdentBinding {
  enum class Kind { kLocal, kInstanceField, kStaticField };
  Kind kind = Kind::kLocal;
  std::string owner;  // declaring class for fields
};

struct FieldBinding {
  std::string owner;
  bool is_static = false;
  // `C.f` where C names a class, so the receiver is not evaluated.
  bool via_class_name = false;
};

struct CallBinding {
  enum class Kind { kBuiltin, kStatic, kInstance };
  Kind kind = Kind::kBuiltin;
  std::string owner;            // declaring class for kStatic / kInstance
  std::size_t method_index = 0;  // index into the owner's methods
  // The receiver expression is evaluated at run time. False for implicit
  // `this`, same-class statics, and `ClassName.method(...)`.
  bool receiver_is_value = false;
};

struct Semantics {
  std::unordered_map<NodeId, IdentBinding> idents;
  std::unordered_map<NodeId, FieldBinding> fields;
  std::unordered_map<NodeId, CallBinding> calls;
  std::unordered_map<NodeId, TypeName> types;
};

struct SourceFile {
  std::string path;
  std::string text;
};

struct SourceOrigin {
  std::string path;
  int line = 0;
};

// A parsed and type-checked set of classes. Immutable once built; share it
// through shared_ptr<const Program>.
class Program {
 public:
  Program(std::vector<ClassDecl> classes, std::vector<std::string> paths, Semantics semantics);

  const std::vector<ClassDecl>& classes() const { return classes_; }
  const Semantics& semantics() const { return semantics_; }
  const std::string& PathOf(std::size_t class_index) const { return paths_[class_index]; }
  const std::vector<std::string>& paths() const { return paths_; }

  const ClassDecl* FindClass(std::string_view name) const;
  std::optional<std::size_t> ClassIndex(std::string_view name) const;
  const MethodDecl* FindMethod(const MethodRef& ref) const;
  // All overloads named `Class.name`.
  std::vector<MethodRef> ResolveName(const std::string& class_name, const std::string& name) const;

  // Location of a class, field, or method declaration.
  std::optional<SourceOrigin> OriginOf(NodeId decl) const;

 private:
  std::vector<ClassDecl> classes_;
  std::vector<std::string> paths_;
  Semantics semantics_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

using ProgramPtr = std::shared_ptr<const Program>;

struct ProgramResult {
  ProgramPtr program;  // null when diagnostics is non-empty
  DiagnosticList diagnostics;

  bool ok() const { return program != nullptr; }
};

// Parses and type-checks production sources. Never throws; all failures are
// returned as diagnostics.
ProgramResult ParseProgram(const std::vector<SourceFile>& sources);

// Type-checks an already-built AST (used for mutants).
ProgramResult CheckProgram(std::vector<ClassDecl> classes, std::vector<std::string> paths);

// An unchecked test class as produced by the parser or by an LLM reply.
struct TestClass {
  ClassDecl decl;
  std::string path;
};

// A test class that type-checks against a particular program.
struct CheckedTestClass {
  ClassDecl decl;
  std::string path;
  Semantics semantics;
};

using TestCheckResult = std::variant<CheckedTestClass, DiagnosticList>;

// Syntax-only parse of a file holding test classes; ids start at the test
// id base.
struct TestParseResult {
  std::vector<TestClass> classes;
  DiagnosticList diagnostics;
};
TestParseResult ParseTestSource(const std::string& path, std::string_view text);

TestCheckResult CheckTestClass(const Program& program, const TestClass& test);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_PROGRAM_HPP_
