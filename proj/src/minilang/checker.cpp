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

#include "minilang/checker.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "minilang/builtins.hpp"

namespace mtcgen::minilang {

bool IsAssignable(const TypeName& to, const TypeName& from) {
  using K = TypeName::Kind;
  if (to == from) return true;
  if (from.kind == K::kNull) return to.IsReference();
  if (from.kind == K::kEmptyList) return to.kind == K::kList;
  if (to.kind == K::kList && from.kind == K::kList) {
    return IsAssignable(to.Element(), from.Element());
  }
  return false;
}

namespace {

using K = TypeName::Kind;
using Type = std::optional<TypeName>;  // nullopt: already-reported error

bool Comparable(const TypeName& a, const TypeName& b) {
  if (a.kind == K::kVoid || b.kind == K::kVoid) return false;
  return IsAssignable(a, b) || IsAssignable(b, a);
}

// Least specific type that both sides can be assigned to, for list `+` and
// list literals.
std::optional<TypeName> Join(const TypeName& a, const TypeName& b) {
  if (IsAssignable(a, b)) return a;
  if (IsAssignable(b, a)) return b;
  return std::nullopt;
}

class Checker {
 public:
  Checker(const std::vector<ClassEntry>& visible, Semantics& out) : visible_(visible), out_(out) {
    for (std::size_t i = 0; i < visible_.size(); ++i) {
      const ClassDecl& cls = *visible_[i].decl;
      if (!classes_.emplace(cls.name, i).second) {
        Report(visible_[i].path, cls.meta.span.line, DiagCode::kDuplicateDecl,
               "duplicate class '" + cls.name + "'", cls.name);
      }
    }
  }

  void CheckClass(std::size_t index) {
    const ClassEntry& entry = visible_[index];
    const ClassDecl& cls = *entry.decl;
    path_ = entry.path;
    current_ = &cls;

    std::set<std::string> field_names;
    for (const auto& f : cls.fields) {
      if (!field_names.insert(f.name).second) {
        Report(f.meta.span.line, DiagCode::kDuplicateDecl, "duplicate field '" + f.name + "'",
               f.name);
      }
      CheckTypeExists(f.type, f.meta.span.line);
    }
    std::set<std::string> signatures;
    for (const auto& m : cls.methods) {
      std::string sig = m.name + "(";
      for (const auto& p : m.params) sig += p.type.ToString() + ",";
      sig += ")";
      if (!signatures.insert(sig).second) {
        Report(m.meta.span.line, DiagCode::kDuplicateDecl,
               "duplicate method '" + m.name + "' with identical parameter types", m.name);
      }
    }

    for (const auto& f : cls.fields) {
      if (!f.init) continue;
      is_static_context_ = f.is_static;
      scopes_.clear();
      Type t = CheckExpr(*f.init);
      if (t && !IsAssignable(f.type, *t)) {
        Report(f.meta.span.line, DiagCode::kTypeMismatch,
               "field '" + f.name + "' of type " + f.type.ToString() +
                   " cannot be initialized with " + t->ToString());
      }
    }
    for (const auto& m : cls.methods) CheckMethod(m);
  }

  DiagnosticList TakeDiagnostics() { return std::move(diags_); }

 private:
  struct Local {
    TypeName type;
  };

  void Report(const std::string& path, int line, DiagCode code, std::string message,
              std::string symbol = {}) {
    diags_.push_back(Diagnostic{path, line, code, std::move(message), std::move(symbol)});
  }
  void Report(int line, DiagCode code, std::string message, std::string symbol = {}) {
    Report(path_, line, code, std::move(message), std::move(symbol));
  }

  const ClassDecl* FindClass(const std::string& name) const {
    auto it = classes_.find(name);
    return it == classes_.end() ? nullptr : visible_[it->second].decl;
  }

  bool CheckTypeExists(const TypeName& type, int line) {
    if (type.kind == K::kList) return CheckTypeExists(type.Element(), line);
    if (type.kind == K::kClass && FindClass(type.class_name) == nullptr) {
      Report(line, DiagCode::kUnresolvedSymbol, "unknown type '" + type.class_name + "'",
             type.class_name);
      return false;
    }
    return true;
  }

  const Local* FindLocal(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  void Declare(const std::string& name, TypeName type, int line) {
    if (FindLocal(name) != nullptr) {
      Report(line, DiagCode::kDuplicateDecl, "variable '" + name + "' is already defined",
             name);
      return;
    }
    scopes_.back().emplace(name, Local{std::move(type)});
  }

  void CheckMethod(const MethodDecl& m) {
    is_static_context_ = m.is_static;
    return_type_ = m.return_type;
    scopes_.clear();
    scopes_.emplace_back();
    CheckTypeExists(m.return_type, m.meta.span.line);
    for (const auto& p : m.params) {
      CheckTypeExists(p.type, m.meta.span.line);
      Declare(p.name, p.type, m.meta.span.line);
    }
    if (m.IsTest()) {
      if (!m.params.empty() || !m.return_type.IsVoid() || m.is_static) {
        Report(m.meta.span.line, DiagCode::kTypeMismatch,
               "@Test method '" + m.name + "' must be a non-static void method without parameters");
      }
    }
    CheckBlock(m.body);
  }

  void CheckBlock(const Block& block) {
    scopes_.emplace_back();
    for (const auto& s : block.statements) CheckStmt(s);
    scopes_.pop_back();
  }

  void CheckCondition(const Expr& cond, const char* what) {
    Type t = CheckExpr(cond);
    if (t && t->kind != K::kBool) {
      Report(cond.meta.span.line, DiagCode::kTypeMismatch,
             std::string(what) + " condition must be bool, found " + t->ToString());
    }
  }

  void CheckStmt(const Stmt& stmt) {
    int line = stmt.meta.span.line;
    if (const auto* decl = stmt.As<VarDecl>()) {
      Type init = CheckExpr(decl->init);
      if (decl->type) {
        bool type_ok = CheckTypeExists(*decl->type, line);
        if (init && type_ok && !IsAssignable(*decl->type, *init)) {
          Report(line, DiagCode::kTypeMismatch,
                 "cannot initialize '" + decl->name + "' of type " + decl->type->ToString() +
                     " with " + init->ToString());
        }
        Declare(decl->name, *decl->type, line);
      } else {
        TypeName inferred = init ? *init : TypeName::Void();
        if (init && (init->kind == K::kNull || init->kind == K::kEmptyList ||
                     init->kind == K::kVoid)) {
          Report(line, DiagCode::kTypeMismatch,
                 "cannot infer a type for '" + decl->name + "' from " + init->ToString());
        }
        Declare(decl->name, inferred, line);
      }
      return;
    }
    if (const auto* assign = stmt.As<AssignStmt>()) {
      CheckAssign(*assign, line);
      return;
    }
    if (const auto* s = stmt.As<IfStmt>()) {
      CheckCondition(s->condition, "if");
      CheckBlock(s->then_block);
      if (s->else_block) CheckBlock(*s->else_block);
      return;
    }
    if (const auto* s = stmt.As<WhileStmt>()) {
      CheckCondition(s->condition, "while");
      CheckBlock(s->body);
      return;
    }
    if (const auto* s = stmt.As<ReturnStmt>()) {
      if (!s->value) {
        if (!return_type_.IsVoid()) {
          Report(line, DiagCode::kTypeMismatch,
                 "missing return value of type " + return_type_.ToString());
        }
        return;
      }
      Type t = CheckExpr(*s->value);
      if (return_type_.IsVoid()) {
        Report(line, DiagCode::kTypeMismatch, "void method cannot return a value");
      } else if (t && !IsAssignable(return_type_, *t)) {
        Report(line, DiagCode::kTypeMismatch,
               "return type mismatch: expected " + return_type_.ToString() + ", found " +
                   t->ToString());
      }
      return;
    }
    if (const auto* s = stmt.As<ExprStmt>()) {
      CheckExpr(s->expr);
      return;
    }
    if (const auto* s = stmt.As<ThrowStmt>()) {
      Type t = CheckExpr(s->value);
      if (t && t->kind != K::kString) {
        Report(line, DiagCode::kTypeMismatch, "throw expects a string, found " + t->ToString());
      }
      return;
    }
  }

  void CheckAssign(const AssignStmt& assign, int line) {
    const Expr& target = assign.target;
    bool lvalue = target.As<Identifier>() || target.As<FieldAccess>() || target.As<IndexExpr>();
    if (!lvalue) {
      Report(line, DiagCode::kTypeMismatch, "left side of assignment is not assignable");
      CheckExpr(target);
      CheckExpr(assign.value);
      return;
    }
    Type lhs = CheckExpr(target);
    Type rhs = CheckExpr(assign.value);
    if (!lhs || !rhs) return;
    if (assign.op == AssignOp::kAssign) {
      if (!IsAssignable(*lhs, *rhs)) {
        Report(line, DiagCode::kTypeMismatch,
               "cannot assign " + rhs->ToString() + " to " + lhs->ToString());
      }
      return;
    }
    bool ok = lhs->kind == K::kInt && rhs->kind == K::kInt;
    if (assign.op == AssignOp::kAddAssign && lhs->kind == K::kString &&
        (rhs->kind == K::kString || rhs->kind == K::kInt || rhs->kind == K::kBool)) {
      ok = true;
    }
    if (!ok) {
      Report(line, DiagCode::kTypeMismatch,
             std::string("operator ") + AssignOpSpelling(assign.op) + " not defined for " +
                 lhs->ToString() + " and " + rhs->ToString());
    }
  }

  Type Record(const Expr& e, Type t) {
    if (t) out_.types[e.meta.id] = *t;
    return t;
  }

  // True when `e` is a bare identifier that names a class and is not shadowed
  // by a local or a field.
  const ClassDecl* AsClassName(const Expr& e) const {
    const auto* id = e.As<Identifier>();
    if (id == nullptr) return nullptr;
    if (FindLocal(id->name) != nullptr) return nullptr;
    if (current_ != nullptr && current_->FindField(id->name) != nullptr) return nullptr;
    return FindClass(id->name);
  }

  Type CheckExpr(const Expr& e) { return Record(e, CheckExprImpl(e)); }

  Type CheckExprImpl(const Expr& e) {
    int line = e.meta.span.line;
    if (e.As<IntLiteral>()) return TypeName::Int();
    if (e.As<BoolLiteral>()) return TypeName::Bool();
    if (e.As<StringLiteral>()) return TypeName::String();
    if (e.As<NullLiteral>()) return TypeName::Null();
    if (const auto* list = e.As<ListLiteral>()) {
      std::optional<TypeName> elem;
      bool failed = false;
      for (const auto& item : list->elements) {
        Type t = CheckExpr(item);
        if (!t) {
          failed = true;
          continue;
        }
        if (t->kind == K::kVoid) {
          Report(line, DiagCode::kTypeMismatch, "void value in list literal");
          failed = true;
          continue;
        }
        if (!elem) {
          elem = *t;
          continue;
        }
        auto joined = Join(*elem, *t);
        if (!joined) {
          Report(line, DiagCode::kTypeMismatch,
                 "list literal mixes " + elem->ToString() + " and " + t->ToString());
          failed = true;
          continue;
        }
        elem = *joined;
      }
      if (failed) return std::nullopt;
      if (!elem) return TypeName::EmptyList();
      if (elem->kind == K::kNull) {
        Report(line, DiagCode::kTypeMismatch, "cannot infer element type of list of nulls");
        return std::nullopt;
      }
      return TypeName::List(*elem);
    }
    if (const auto* id = e.As<Identifier>()) return CheckIdentifier(e, *id);
    if (e.As<ThisExpr>()) {
      if (is_static_context_) {
        Report(line, DiagCode::kTypeMismatch, "'this' used in a static context");
        return std::nullopt;
      }
      return TypeName::Class(current_->name);
    }
    if (const auto* fa = e.As<FieldAccess>()) return CheckFieldAccess(e, *fa);
    if (const auto* u = e.As<UnaryExpr>()) {
      Type t = CheckExpr(*u->operand);
      if (!t) return std::nullopt;
      if (u->op == UnaryOp::kNot) {
        if (t->kind != K::kBool) {
          Report(line, DiagCode::kTypeMismatch, "operator ! expects bool, found " + t->ToString());
          return std::nullopt;
        }
        return TypeName::Bool();
      }
      if (t->kind != K::kInt) {
        Report(line, DiagCode::kTypeMismatch, "unary - expects int, found " + t->ToString());
        return std::nullopt;
      }
      return TypeName::Int();
    }
    if (const auto* b = e.As<BinaryExpr>()) return CheckBinary(e, *b);
    if (const auto* call = e.As<CallExpr>()) return CheckCall(e, *call);
    if (const auto* n = e.As<NewExpr>()) {
      if (FindClass(n->class_name) == nullptr) {
        Report(line, DiagCode::kUnresolvedSymbol, "unknown class '" + n->class_name + "'",
               n->class_name);
        return std::nullopt;
      }
      return TypeName::Class(n->class_name);
    }
    if (const auto* idx = e.As<IndexExpr>()) {
      Type target = CheckExpr(*idx->target);
      Type index = CheckExpr(*idx->index);
      if (!target || !index) return std::nullopt;
      if (index->kind != K::kInt) {
        Report(line, DiagCode::kTypeMismatch, "index must be int, found " + index->ToString());
        return std::nullopt;
      }
      if (target->kind != K::kList) {
        Report(line, DiagCode::kTypeMismatch, "cannot index into " + target->ToString());
        return std::nullopt;
      }
      return target->Element();
    }
    return std::nullopt;
  }

  Type CheckIdentifier(const Expr& e, const Identifier& id) {
    int line = e.meta.span.line;
    if (const Local* local = FindLocal(id.name)) {
      out_.idents[e.meta.id] = IdentBinding{IdentBinding::Kind::kLocal, {}};
      return local->type;
    }
    if (const FieldDecl* f = current_->FindField(id.name)) {
      if (!f->is_static && is_static_context_) {
        Report(line, DiagCode::kTypeMismatch,
               "instance field '" + id.name + "' used in a static context");
        return std::nullopt;
      }
      out_.idents[e.meta.id] =
          IdentBinding{f->is_static ? IdentBinding::Kind::kStaticField
                                    : IdentBinding::Kind::kInstanceField,
                       current_->name};
      return f->type;
    }
    if (FindClass(id.name) != nullptr) {
      Report(line, DiagCode::kTypeMismatch, "class '" + id.name + "' used as a value");
      return std::nullopt;
    }
    Report(line, DiagCode::kUnresolvedSymbol, "cannot find symbol '" + id.name + "'", id.name);
    return std::nullopt;
  }

  Type CheckFieldAccess(const Expr& e, const FieldAccess& fa) {
    int line = e.meta.span.line;
    if (const ClassDecl* cls = AsClassName(*fa.object)) {
      const FieldDecl* f = cls->FindField(fa.field);
      if (f == nullptr) {
        Report(line, DiagCode::kUnresolvedSymbol,
               "class '" + cls->name + "' has no field '" + fa.field + "'", fa.field);
        return std::nullopt;
      }
      if (!f->is_static) {
        Report(line, DiagCode::kTypeMismatch,
               "field '" + cls->name + "." + fa.field + "' is not static");
        return std::nullopt;
      }
      out_.fields[e.meta.id] = FieldBinding{cls->name, true, true};
      return f->type;
    }
    if (const auto* id = fa.object->As<Identifier>()) {
      if (FindLocal(id->name) == nullptr && current_->FindField(id->name) == nullptr) {
        Report(line, DiagCode::kUnresolvedSymbol, "cannot find symbol '" + id->name + "'",
               id->name);
        return std::nullopt;
      }
    }
    Type obj = CheckExpr(*fa.object);
    if (!obj) return std::nullopt;
    if (obj->kind != K::kClass) {
      Report(line, DiagCode::kTypeMismatch,
             "cannot access field '" + fa.field + "' on " + obj->ToString());
      return std::nullopt;
    }
    const ClassDecl* cls = FindClass(obj->class_name);
    const FieldDecl* f = cls ? cls->FindField(fa.field) : nullptr;
    if (f == nullptr) {
      Report(line, DiagCode::kUnresolvedSymbol,
             "class '" + obj->class_name + "' has no field '" + fa.field + "'", fa.field);
      return std::nullopt;
    }
    out_.fields[e.meta.id] = FieldBinding{cls->name, f->is_static, false};
    return f->type;
  }

  Type CheckBinary(const Expr& e, const BinaryExpr& b) {
    int line = e.meta.span.line;
    Type lhs = CheckExpr(*b.lhs);
    Type rhs = CheckExpr(*b.rhs);
    if (!lhs || !rhs) return std::nullopt;
    auto mismatch = [&]() -> Type {
      Report(line, DiagCode::kTypeMismatch,
             std::string("operator ") + BinaryOpSpelling(b.op) + " not defined for " +
                 lhs->ToString() + " and " + rhs->ToString());
      return std::nullopt;
    };
    bool ints = lhs->kind == K::kInt && rhs->kind == K::kInt;
    switch (b.op) {
      case BinaryOp::kAdd: {
        if (ints) return TypeName::Int();
        auto stringy = [](const TypeName& t) {
          return t.kind == K::kString || t.kind == K::kInt || t.kind == K::kBool;
        };
        if ((lhs->kind == K::kString && stringy(*rhs)) ||
            (rhs->kind == K::kString && stringy(*lhs))) {
          return TypeName::String();
        }
        bool lists = (lhs->kind == K::kList || lhs->kind == K::kEmptyList) &&
                     (rhs->kind == K::kList || rhs->kind == K::kEmptyList);
        if (lists) {
          if (auto joined = Join(*lhs, *rhs)) return *joined;
        }
        return mismatch();
      }
      case BinaryOp::kSub:
      case BinaryOp::kMul:
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (ints) return TypeName::Int();
        return mismatch();
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe:
        if (ints) return TypeName::Bool();
        return mismatch();
      case BinaryOp::kEq:
      case BinaryOp::kNe:
        if (Comparable(*lhs, *rhs)) return TypeName::Bool();
        return mismatch();
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        if (lhs->kind == K::kBool && rhs->kind == K::kBool) return TypeName::Bool();
        return mismatch();
    }
    return std::nullopt;
  }

  std::string DescribeArgs(const std::vector<TypeName>& args) const {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) s += ", ";
      s += args[i].ToString();
    }
    return s + ")";
  }

  // Picks the overload of `name` in `cls`. Exact matches win over
  // assignable ones; anything else is reported.
  std::optional<std::size_t> ResolveOverload(const ClassDecl& cls, const std::string& name,
                                             const std::vector<TypeName>& args, int line) {
    std::vector<std::size_t> applicable;
    std::vector<std::size_t> exact;
    bool any_named = false;
    for (std::size_t i = 0; i < cls.methods.size(); ++i) {
      const MethodDecl& m = cls.methods[i];
      if (m.name != name) continue;
      any_named = true;
      if (m.params.size() != args.size()) continue;
      bool ok = true;
      bool is_exact = true;
      for (std::size_t a = 0; a < args.size(); ++a) {
        if (!IsAssignable(m.params[a].type, args[a])) ok = false;
        if (!(m.params[a].type == args[a])) is_exact = false;
      }
      if (ok) applicable.push_back(i);
      if (ok && is_exact) exact.push_back(i);
    }
    if (!any_named) {
      Report(line, DiagCode::kUnresolvedSymbol,
             "cannot find symbol '" + cls.name + "." + name + "'", name);
      return std::nullopt;
    }
    if (exact.size() == 1) return exact.front();
    if (applicable.size() == 1) return applicable.front();
    if (applicable.empty()) {
      Report(line, DiagCode::kTypeMismatch,
             "no overload of '" + cls.name + "." + name + "' accepts " + DescribeArgs(args));
    } else {
      Report(line, DiagCode::kTypeMismatch,
             "call to '" + cls.name + "." + name + "' is ambiguous for " + DescribeArgs(args));
    }
    return std::nullopt;
  }

  Type CheckCall(const Expr& e, const CallExpr& call) {
    int line = e.meta.span.line;
    const ClassDecl* static_owner = nullptr;
    std::optional<TypeName> receiver_type;
    bool receiver_failed = false;
    if (call.receiver) {
      const Expr& recv = **call.receiver;
      static_owner = AsClassName(recv);
      if (static_owner == nullptr) {
        const auto* id = recv.As<Identifier>();
        if (id != nullptr && FindLocal(id->name) == nullptr &&
            current_->FindField(id->name) == nullptr) {
          Report(line, DiagCode::kUnresolvedSymbol, "cannot find symbol '" + id->name + "'",
                 id->name);
          receiver_failed = true;
        } else {
          receiver_type = CheckExpr(recv);
          if (!receiver_type) receiver_failed = true;
        }
      }
    }

    std::vector<TypeName> args;
    bool args_failed = false;
    for (const auto& a : call.args) {
      Type t = CheckExpr(a);
      if (!t) {
        args_failed = true;
        continue;
      }
      args.push_back(*t);
    }
    if (receiver_failed || args_failed) return std::nullopt;
    for (const auto& a : args) {
      if (a.kind == K::kVoid) {
        Report(line, DiagCode::kTypeMismatch, "void value passed as an argument");
        return std::nullopt;
      }
    }

    if (!call.receiver) {
      bool has_method = false;
      for (const auto& m : current_->methods) has_method |= m.name == call.method;
      if (!has_method) return CheckBuiltin(e, call, args);
      auto index = ResolveOverload(*current_, call.method, args, line);
      if (!index) return std::nullopt;
      const MethodDecl& m = current_->methods[*index];
      if (!m.is_static && is_static_context_) {
        Report(line, DiagCode::kTypeMismatch,
               "instance method '" + m.name + "' called from a static context");
        return std::nullopt;
      }
      out_.calls[e.meta.id] = CallBinding{
          m.is_static ? CallBinding::Kind::kStatic : CallBinding::Kind::kInstance,
          current_->name, *index, false};
      return m.return_type;
    }

    if (static_owner != nullptr) {
      auto index = ResolveOverload(*static_owner, call.method, args, line);
      if (!index) return std::nullopt;
      const MethodDecl& m = static_owner->methods[*index];
      if (!m.is_static) {
        Report(line, DiagCode::kTypeMismatch,
               "method '" + static_owner->name + "." + m.name + "' is not static");
        return std::nullopt;
      }
      out_.calls[e.meta.id] =
          CallBinding{CallBinding::Kind::kStatic, static_owner->name, *index, false};
      return m.return_type;
    }

    if (receiver_type->kind != K::kClass) {
      Report(line, DiagCode::kUnresolvedSymbol,
             "cannot find method '" + call.method + "' on " + receiver_type->ToString(),
             call.method);
      return std::nullopt;
    }
    const ClassDecl* cls = FindClass(receiver_type->class_name);
    if (cls == nullptr) return std::nullopt;
    auto index = ResolveOverload(*cls, call.method, args, line);
    if (!index) return std::nullopt;
    const MethodDecl& m = cls->methods[*index];
    out_.calls[e.meta.id] = CallBinding{
        m.is_static ? CallBinding::Kind::kStatic : CallBinding::Kind::kInstance, cls->name,
        *index, true};
    return m.return_type;
  }

  Type CheckBuiltin(const Expr& e, const CallExpr& call, const std::vector<TypeName>& args) {
    int line = e.meta.span.line;
    Builtin builtin;
    if (!LookupBuiltin(call.method, &builtin)) {
      Report(line, DiagCode::kUnresolvedSymbol, "cannot find symbol '" + call.method + "'",
             call.method);
      return std::nullopt;
    }
    out_.calls[e.meta.id] = CallBinding{CallBinding::Kind::kBuiltin, {}, 0, false};
    auto bad = [&]() -> Type {
      Report(line, DiagCode::kTypeMismatch,
             "builtin '" + call.method + "' does not accept " + DescribeArgs(args));
      return std::nullopt;
    };
    auto is = [&](std::size_t i, K kind) { return args[i].kind == kind; };
    auto is_listish = [&](std::size_t i) { return is(i, K::kList) || is(i, K::kEmptyList); };
    switch (builtin) {
      case Builtin::kPrint:
        if (args.size() != 1) return bad();
        return TypeName::Void();
      case Builtin::kLength:
        if (args.size() != 1 || !(is(0, K::kString) || is_listish(0))) return bad();
        return TypeName::Int();
      case Builtin::kCharAt:
      case Builtin::kIndexOf:
        if (args.size() != 2 || !is(0, K::kString) || !is(1, K::kInt)) return bad();
        return TypeName::Int();
      case Builtin::kFromChars:
        if (args.size() != 1 || !IsAssignable(TypeName::List(TypeName::Int()), args[0])) {
          return bad();
        }
        return TypeName::String();
      case Builtin::kSubstring:
        if (args.size() != 3 || !is(0, K::kString) || !is(1, K::kInt) || !is(2, K::kInt)) {
          return bad();
        }
        return TypeName::String();
      case Builtin::kStr:
        if (args.size() != 1 || !(is(0, K::kInt) || is(0, K::kBool) || is(0, K::kString))) {
          return bad();
        }
        return TypeName::String();
      case Builtin::kAppend:
        if (args.size() != 2 || !is_listish(0)) return bad();
        if (is(0, K::kList) && !IsAssignable(args[0].Element(), args[1])) return bad();
        return TypeName::Void();
      case Builtin::kContains:
        if (args.size() != 2 || !is_listish(0)) return bad();
        if (is(0, K::kList) && !Comparable(args[0].Element(), args[1])) return bad();
        return TypeName::Bool();
      case Builtin::kEquals:
        if (args.size() != 2 || !Comparable(args[0], args[1])) return bad();
        return TypeName::Bool();
      case Builtin::kAssertEquals:
      case Builtin::kAssertNotEquals:
        if (args.size() != 2 || !Comparable(args[0], args[1])) return bad();
        return TypeName::Void();
      case Builtin::kAssertTrue:
      case Builtin::kAssertFalse:
        if (args.size() != 1 || !is(0, K::kBool)) return bad();
        return TypeName::Void();
    }
    return bad();
  }

  const std::vector<ClassEntry>& visible_;
  Semantics& out_;
  std::map<std::string, std::size_t> classes_;
  DiagnosticList diags_;

  std::string path_;
  const ClassDecl* current_ = nullptr;
  bool is_static_context_ = false;
  TypeName return_type_;
  std::vector<std::map<std::string, Local>> scopes_;
};

}  // namespace

DiagnosticList CheckClasses(const std::vector<ClassEntry>& visible,
                            const std::vector<std::size_t>& to_check, Semantics& out) {
  Checker checker(visible, out);
  for (std::size_t index : to_check) checker.CheckClass(index);
  return checker.TakeDiagnostics();
}

}  // namespace mtcgen::minilang
