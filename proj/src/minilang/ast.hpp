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

// AST for the mini-language: classes with fields and (static or instance)
// methods, a small statement language, and value types int/bool/string/list
// plus user classes.
//
// Nodes are plain values. Copying a node deep-copies its subtree, which is
// what the mutation engine relies on. `operator==` is structural: node ids
// and source spans never participate.

#ifndef MTCGEN_MINILANG_AST_HPP_
#define MTCGEN_MINILANG_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mtcgen::minilang {

using NodeId = std::uint64_t;

struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct NodeMeta {
  NodeId id = 0;
  SourceSpan span;

  friend bool operator==(const NodeMeta&, const NodeMeta&) { return true; }
};

// Owning pointer with value semantics.
template <typename T>
class Box {
 public:
  Box(T value)  // NOLINT(google-explicit-constructor)
      : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&& other) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&& other) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct TypeName {
  // kNull and kEmptyList never come out of the parser; the checker uses them
  // for `null` and `[]`.
  enum class Kind { kInt, kBool, kString, kList, kClass, kVoid, kNull, kEmptyList };

  Kind kind = Kind::kVoid;
  std::string class_name;           // kClass only
  std::vector<TypeName> element;    // kList only: exactly one entry

  static TypeName Int() { return {Kind::kInt, {}, {}}; }
  static TypeName Bool() { return {Kind::kBool, {}, {}}; }
  static TypeName String() { return {Kind::kString, {}, {}}; }
  static TypeName Void() { return {Kind::kVoid, {}, {}}; }
  static TypeName Null() { return {Kind::kNull, {}, {}}; }
  static TypeName EmptyList() { return {Kind::kEmptyList, {}, {}}; }
  static TypeName Class(std::string name) { return {Kind::kClass, std::move(name), {}}; }
  static TypeName List(TypeName elem) {
    TypeName t{Kind::kList, {}, {}};
    t.element.push_back(std::move(elem));
    return t;
  }

  bool IsVoid() const { return kind == Kind::kVoid; }
  bool IsReference() const {
    return kind == Kind::kString || kind == Kind::kList || kind == Kind::kClass;
  }
  const TypeName& Element() const { return element.front(); }

  std::string ToString() const;

  bool operator==(const TypeName&) const = default;
};

bool operator<(const TypeName& a, const TypeName& b);

enum class BinaryOp { kAdd, kSub, kMul, kDiv, kMod, kEq, kNe, kLt, kLe, kGt, kGe, kAnd, kOr };
enum class UnaryOp { kNot, kNeg };
enum class AssignOp { kAssign, kAddAssign, kSubAssign, kMulAssign };

const char* BinaryOpSpelling(BinaryOp op);
const char* UnaryOpSpelling(UnaryOp op);
const char* AssignOpSpelling(AssignOp op);

struct Expr;

struct IntLiteral {
  std::int64_t value = 0;
  bool operator==(const IntLiteral&) const = default;
};
struct BoolLiteral {
  bool value = false;
  bool operator==(const BoolLiteral&) const = default;
};
struct StringLiteral {
  std::string value;
  bool operator==(const StringLiteral&) const = default;
};
struct NullLiteral {
  bool operator==(const NullLiteral&) const = default;
};
struct ListLiteral {
  std::vector<Expr> elements;
  bool operator==(const ListLiteral&) const = default;
};
struct Identifier {
  std::string name;
  bool operator==(const Identifier&) const = default;
};
struct ThisExpr {
  bool operator==(const ThisExpr&) const = default;
};
struct FieldAccess {
  Box<Expr> object;
  std::string field;
  bool operator==(const FieldAccess&) const = default;
};
struct UnaryExpr {
  UnaryOp op;
  Box<Expr> operand;
  bool operator==(const UnaryExpr&) const = default;
};
struct BinaryExpr {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
  bool operator==(const BinaryExpr&) const = default;
};
// `receiver.method(args)`, or `method(args)` when receiver is empty.
struct CallExpr {
  std::optional<Box<Expr>> receiver;
  std::string method;
  std::vector<Expr> args;
  bool operator==(const CallExpr&) const = default;
};
struct NewExpr {
  std::string class_name;
  bool operator==(const NewExpr&) const = default;
};
struct IndexExpr {
  Box<Expr> target;
  Box<Expr> index;
  bool operator==(const IndexExpr&) const = default;
};

struct Expr {
  using Node = std::variant<IntLiteral, BoolLiteral, StringLiteral, NullLiteral, ListLiteral,
                            Identifier, ThisExpr, FieldAccess, UnaryExpr, BinaryExpr, CallExpr,
                            NewExpr, IndexExpr>;
  NodeMeta meta;
  Node node;

  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  T* As() { return std::get_if<T>(&node); }

  bool operator==(const Expr&) const = default;
};

struct Stmt;

struct Block {
  NodeMeta meta;
  std::vector<Stmt> statements;
  bool operator==(const Block&) const = default;
};

struct VarDecl {
  std::optional<TypeName> type;  // empty for `var`
  std::string name;
  Expr init;
  bool operator==(const VarDecl&) const = default;
};
struct AssignStmt {
  AssignOp op = AssignOp::kAssign;
  Expr target;
  Expr value;
  bool operator==(const AssignStmt&) const = default;
};
struct IfStmt {
  Expr condition;
  Block then_block;
  std::optional<Block> else_block;
  bool operator==(const IfStmt&) const = default;
};
struct WhileStmt {
  Expr condition;
  Block body;
  bool operator==(const WhileStmt&) const = default;
};
struct ReturnStmt {
  std::optional<Expr> value;
  bool operator==(const ReturnStmt&) const = default;
};
struct ExprStmt {
  Expr expr;
  bool operator==(const ExprStmt&) const = default;
};
struct ThrowStmt {
  Expr value;
  bool operator==(const ThrowStmt&) const = default;
};

struct Stmt {
  using Node =
      std::variant<VarDecl, AssignStmt, IfStmt, WhileStmt, ReturnStmt, ExprStmt, ThrowStmt>;
  NodeMeta meta;
  Node node;

  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  T* As() { return std::get_if<T>(&node); }

  bool operator==(const Stmt&) const = default;
};

struct Param {
  std::string name;
  TypeName type;
  bool operator==(const Param&) const = default;
};

struct FieldDecl {
  NodeMeta meta;
  std::string name;
  TypeName type;
  bool is_static = false;
  std::optional<Expr> init;
  bool operator==(const FieldDecl&) const = default;
};

struct MethodDecl {
  NodeMeta meta;
  std::string name;
  std::vector<Param> params;
  TypeName return_type;
  bool is_static = false;
  std::vector<std::string> annotations;  // sorted, unique
  Block body;

  bool HasAnnotation(const std::string& name) const;
  bool IsTest() const { return HasAnnotation("Test"); }
  std::vector<TypeName> ParamTypes() const;

  bool operator==(const MethodDecl&) const = default;
};

struct ClassDecl {
  NodeMeta meta;
  std::string name;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;

  const FieldDecl* FindField(const std::string& field) const;
  bool operator==(const ClassDecl&) const = default;
};

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_AST_HPP_
