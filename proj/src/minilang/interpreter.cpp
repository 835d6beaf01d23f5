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

#include "minilang/interpreter.hpp"

#include <deque>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "minilang/builtins.hpp"
#include "minilang/lexer.hpp"
#include "minilang/parser.hpp"

namespace mtcgen::minilang {

std::string_view OutcomeKindName(TestOutcome::Kind kind) {
  switch (kind) {
    case TestOutcome::Kind::kPass:
      return "PASS";
    case TestOutcome::Kind::kAssertFail:
      return "ASSERT_FAIL";
    case TestOutcome::Kind::kRuntimeError:
      return "RUNTIME_ERROR";
    case TestOutcome::Kind::kTimeout:
      return "TIMEOUT";
    case TestOutcome::Kind::kCompileError:
      return "COMPILE_ERROR";
  }
  return "UNKNOWN";
}

namespace {

struct ListObj;
struct ObjectObj;

struct Value {
  enum class Kind { kNull, kInt, kBool, kString, kList, kObject };
  Kind kind = Kind::kNull;
  std::int64_t i = 0;
  bool b = false;
  std::shared_ptr<const std::string> s;
  ListObj* list = nullptr;
  ObjectObj* obj = nullptr;

  static Value Null() { return {}; }
  static Value Int(std::int64_t v) {
    Value r;
    r.kind = Kind::kInt;
    r.i = v;
    return r;
  }
  static Value Bool(bool v) {
    Value r;
    r.kind = Kind::kBool;
    r.b = v;
    return r;
  }
  static Value Str(std::string v) {
    Value r;
    r.kind = Kind::kString;
    r.s = std::make_shared<const std::string>(std::move(v));
    return r;
  }
  static Value List(ListObj* l) {
    Value r;
    r.kind = Kind::kList;
    r.list = l;
    return r;
  }
  static Value Object(ObjectObj* o) {
    Value r;
    r.kind = Kind::kObject;
    r.obj = o;
    return r;
  }
  bool IsNull() const { return kind == Kind::kNull; }
};

struct ListObj {
  std::vector<Value> items;
};

struct ObjectObj {
  const ClassDecl* cls = nullptr;
  std::vector<Value> fields;
  std::uint64_t serial = 0;
};

struct AssertFailure {
  std::string message;
  NodeId node;
};
struct RuntimeFailure {
  std::string message;
};
struct TimeoutFailure {
  std::string message;
};

Value DefaultValue(const TypeName& type) {
  switch (type.kind) {
    case TypeName::Kind::kInt:
      return Value::Int(0);
    case TypeName::Kind::kBool:
      return Value::Bool(false);
    default:
      return Value::Null();
  }
}

bool ValueEquals(const Value& a, const Value& b) {
  if (a.IsNull() || b.IsNull()) return a.IsNull() && b.IsNull();
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::kInt:
      return a.i == b.i;
    case Value::Kind::kBool:
      return a.b == b.b;
    case Value::Kind::kString:
      return *a.s == *b.s;
    case Value::Kind::kList: {
      if (a.list == b.list) return true;
      if (a.list->items.size() != b.list->items.size()) return false;
      for (std::size_t i = 0; i < a.list->items.size(); ++i) {
        if (!ValueEquals(a.list->items[i], b.list->items[i])) return false;
      }
      return true;
    }
    case Value::Kind::kObject:
      return a.obj == b.obj;
    case Value::Kind::kNull:
      return true;
  }
  return false;
}

std::string Render(const Value& v, int depth = 0) {
  switch (v.kind) {
    case Value::Kind::kNull:
      return "null";
    case Value::Kind::kInt:
      return std::to_string(v.i);
    case Value::Kind::kBool:
      return v.b ? "true" : "false";
    case Value::Kind::kString: {
      constexpr std::size_t kMax = 200;
      if (v.s->size() > kMax) return QuoteString(v.s->substr(0, kMax)) + "...";
      return QuoteString(*v.s);
    }
    case Value::Kind::kList: {
      if (depth > 3) return "[...]";
      std::string out = "[";
      std::size_t n = v.list->items.size();
      for (std::size_t i = 0; i < n && i < 20; ++i) {
        if (i > 0) out += ", ";
        out += Render(v.list->items[i], depth + 1);
      }
      if (n > 20) out += ", ...";
      return out + "]";
    }
    case Value::Kind::kObject:
      return v.obj->cls->name + "@" + std::to_string(v.obj->serial);
  }
  return "?";
}

// Text used when a value is concatenated onto a string.
std::string Stringify(const Value& v) {
  if (v.kind == Value::Kind::kString) return *v.s;
  return Render(v);
}

std::int64_t WrapAdd(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
std::int64_t WrapSub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
std::int64_t WrapMul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

class Interpreter {
 public:
  Interpreter(const Program& program, const CheckedTestClass& tests, const Limits& limits)
      : program_(program), tests_(tests), limits_(limits) {
    for (const auto& cls : program_.classes()) classes_.emplace(cls.name, &cls);
    classes_.emplace(tests_.decl.name, &tests_.decl);
  }

  TestOutcome Run(const MethodDecl& test) {
    started_ = std::chrono::steady_clock::now();
    try {
      InitStatics();
      Value instance = Instantiate(tests_.decl);
      Invoke(tests_.decl, test, instance, {});
      return TestOutcome{TestOutcome::Kind::kPass, "", std::nullopt};
    } catch (const AssertFailure& f) {
      return TestOutcome{TestOutcome::Kind::kAssertFail, f.message, f.node};
    } catch (const RuntimeFailure& f) {
      return TestOutcome{TestOutcome::Kind::kRuntimeError, f.message, std::nullopt};
    } catch (const TimeoutFailure& f) {
      return TestOutcome{TestOutcome::Kind::kTimeout, f.message, std::nullopt};
    } catch (const std::bad_alloc&) {
      return TestOutcome{TestOutcome::Kind::kRuntimeError, "out of memory", std::nullopt};
    }
  }

 private:
  struct Frame {
    const ClassDecl* cls = nullptr;
    Value self;
    std::vector<std::pair<std::string, Value>> locals;
    Value returned;
  };

  // ---- bookkeeping ----

  void Tick(std::uint64_t cost = 1) {
    steps_ += cost;
    if (steps_ > limits_.max_steps) {
      throw TimeoutFailure{"step limit of " + std::to_string(limits_.max_steps) + " exceeded"};
    }
    if (steps_ >= next_clock_check_) {
      next_clock_check_ = steps_ + 4096;
      if (std::chrono::steady_clock::now() - started_ > limits_.per_test_timeout) {
        throw TimeoutFailure{"wall-clock timeout of " +
                             std::to_string(limits_.per_test_timeout.count()) + "ms exceeded"};
      }
    }
  }

  [[noreturn]] static void Fail(std::string message) { throw RuntimeFailure{std::move(message)}; }

  const Semantics& SemFor(NodeId id) const {
    return id >= NodeIdAllocator::kTestIdBase ? tests_.semantics : program_.semantics();
  }

  template <typename Map>
  static const typename Map::mapped_type& Lookup(const Map& map, NodeId id) {
    auto it = map.find(id);
    if (it == map.end()) Fail("internal error: node " + std::to_string(id) + " is unbound");
    return it->second;
  }

  const ClassDecl& ClassNamed(const std::string& name) const {
    auto it = classes_.find(name);
    if (it == classes_.end()) Fail("internal error: unknown class '" + name + "'");
    return *it->second;
  }

  static std::size_t FieldIndex(const ClassDecl& cls, const std::string& name) {
    for (std::size_t i = 0; i < cls.fields.size(); ++i) {
      if (cls.fields[i].name == name) return i;
    }
    Fail("internal error: unknown field '" + cls.name + "." + name + "'");
  }

  ListObj* NewList() {
    lists_.push_back(std::make_unique<ListObj>());
    return lists_.back().get();
  }

  void InitStatics() {
    statics_.clear();
    for (const auto& [name, cls] : classes_) {
      auto& slots = statics_[name];
      slots.resize(cls->fields.size());
      for (std::size_t i = 0; i < cls->fields.size(); ++i) {
        slots[i] = DefaultValue(cls->fields[i].type);
      }
    }
    auto run_initializers = [&](const ClassDecl& cls) {
      Frame frame;
      frame.cls = &cls;
      for (std::size_t i = 0; i < cls.fields.size(); ++i) {
        const FieldDecl& f = cls.fields[i];
        if (f.is_static && f.init) statics_[cls.name][i] = Eval(*f.init, frame);
      }
    };
    for (const auto& cls : program_.classes()) run_initializers(cls);
    run_initializers(tests_.decl);
  }

  Value Instantiate(const ClassDecl& cls) {
    Tick();
    objects_.push_back(std::make_unique<ObjectObj>());
    ObjectObj* obj = objects_.back().get();
    obj->cls = &cls;
    obj->serial = objects_.size();
    obj->fields.resize(cls.fields.size());
    for (std::size_t i = 0; i < cls.fields.size(); ++i) {
      obj->fields[i] = DefaultValue(cls.fields[i].type);
    }
    Value self = Value::Object(obj);
    Frame frame;
    frame.cls = &cls;
    frame.self = self;
    for (std::size_t i = 0; i < cls.fields.size(); ++i) {
      const FieldDecl& f = cls.fields[i];
      if (!f.is_static && f.init) obj->fields[i] = Eval(*f.init, frame);
    }
    return self;
  }

  Value Invoke(const ClassDecl& cls, const MethodDecl& method, Value self,
               std::vector<Value> args) {
    Tick();
    if (depth_ >= limits_.max_call_depth) {
      Fail("stack overflow: call depth exceeds " + std::to_string(limits_.max_call_depth));
    }
    ++depth_;
    Frame frame;
    frame.cls = &cls;
    frame.self = std::move(self);
    for (std::size_t i = 0; i < method.params.size(); ++i) {
      frame.locals.emplace_back(method.params[i].name, std::move(args[i]));
    }
    bool returned = ExecBlock(method.body, frame);
    --depth_;
    if (!returned && !method.return_type.IsVoid()) {
      Fail("method '" + cls.name + "." + method.name + "' ended without returning a value");
    }
    return returned ? frame.returned : Value::Null();
  }

  // ---- statements ----

  // Returns true when a return statement executed.
  bool ExecBlock(const Block& block, Frame& frame) {
    std::size_t mark = frame.locals.size();
    bool returned = false;
    for (const auto& stmt : block.statements) {
      if (Exec(stmt, frame)) {
        returned = true;
        break;
      }
    }
    frame.locals.resize(mark);
    return returned;
  }

  bool Exec(const Stmt& stmt, Frame& frame) {
    Tick();
    if (const auto* s = stmt.As<VarDecl>()) {
      Value v = Eval(s->init, frame);
      frame.locals.emplace_back(s->name, std::move(v));
      return false;
    }
    if (const auto* s = stmt.As<AssignStmt>()) {
      ExecAssign(*s, frame);
      return false;
    }
    if (const auto* s = stmt.As<IfStmt>()) {
      if (EvalBool(s->condition, frame)) return ExecBlock(s->then_block, frame);
      if (s->else_block) return ExecBlock(*s->else_block, frame);
      return false;
    }
    if (const auto* s = stmt.As<WhileStmt>()) {
      while (EvalBool(s->condition, frame)) {
        if (ExecBlock(s->body, frame)) return true;
        Tick();
      }
      return false;
    }
    if (const auto* s = stmt.As<ReturnStmt>()) {
      frame.returned = s->value ? Eval(*s->value, frame) : Value::Null();
      return true;
    }
    if (const auto* s = stmt.As<ExprStmt>()) {
      Eval(s->expr, frame);
      return false;
    }
    if (const auto* s = stmt.As<ThrowStmt>()) {
      Value v = Eval(s->value, frame);
      Fail("uncaught exception: " + (v.IsNull() ? std::string("null") : *v.s));
    }
    return false;
  }

  Value* LocalSlot(const std::string& name, Frame& frame) {
    for (auto it = frame.locals.rbegin(); it != frame.locals.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    Fail("internal error: unknown local '" + name + "'");
  }

  Value& IdentSlot(const Expr& e, const Identifier& id, Frame& frame) {
    const IdentBinding& binding = Lookup(SemFor(e.meta.id).idents, e.meta.id);
    switch (binding.kind) {
      case IdentBinding::Kind::kLocal:
        return *LocalSlot(id.name, frame);
      case IdentBinding::Kind::kInstanceField: {
        ObjectObj* self = frame.self.obj;
        return self->fields[FieldIndex(*self->cls, id.name)];
      }
      case IdentBinding::Kind::kStaticField:
        return statics_[binding.owner][FieldIndex(ClassNamed(binding.owner), id.name)];
    }
    Fail("internal error: bad identifier binding");
  }

  Value& FieldSlot(const Expr& e, const FieldAccess& fa, Frame& frame) {
    const FieldBinding& binding = Lookup(SemFor(e.meta.id).fields, e.meta.id);
    const ClassDecl& owner = ClassNamed(binding.owner);
    std::size_t index = FieldIndex(owner, fa.field);
    if (binding.via_class_name) return statics_[binding.owner][index];
    Value obj = Eval(*fa.object, frame);
    if (binding.is_static) return statics_[binding.owner][index];
    if (obj.IsNull()) Fail("null dereference reading field '" + fa.field + "'");
    return obj.obj->fields[index];
  }

  // An assignable location. List elements are addressed by (list, index) so
  // that the location stays valid while the right-hand side runs.
  struct Place {
    Value* slot = nullptr;
    ListObj* list = nullptr;
    std::size_t index = 0;

    Value& Get() const {
      if (slot != nullptr) return *slot;
      if (index >= list->items.size()) {
        Fail("index " + std::to_string(index) + " out of bounds for length " +
             std::to_string(list->items.size()));
      }
      return list->items[index];
    }
  };

  Place IndexPlace(const IndexExpr& ix, Frame& frame) {
    Value target = Eval(*ix.target, frame);
    Value index = Eval(*ix.index, frame);
    if (target.IsNull()) Fail("null dereference indexing a list");
    const auto& items = target.list->items;
    if (index.i < 0 || static_cast<std::uint64_t>(index.i) >= items.size()) {
      Fail("index " + std::to_string(index.i) + " out of bounds for length " +
           std::to_string(items.size()));
    }
    return Place{nullptr, target.list, static_cast<std::size_t>(index.i)};
  }

  Place PlaceOf(const Expr& target, Frame& frame) {
    if (const auto* id = target.As<Identifier>()) return Place{&IdentSlot(target, *id, frame)};
    if (const auto* fa = target.As<FieldAccess>()) return Place{&FieldSlot(target, *fa, frame)};
    if (const auto* ix = target.As<IndexExpr>()) return IndexPlace(*ix, frame);
    Fail("internal error: expression is not assignable");
  }

  void ExecAssign(const AssignStmt& s, Frame& frame) {
    Place place = PlaceOf(s.target, frame);
    if (s.op == AssignOp::kAssign) {
      Value v = Eval(s.value, frame);
      place.Get() = std::move(v);
      return;
    }
    Value current = place.Get();
    Value rhs = Eval(s.value, frame);
    Value result;
    if (current.kind == Value::Kind::kString || current.IsNull()) {
      std::string text = Stringify(current) + Stringify(rhs);
      Tick(text.size() / 8);
      result = Value::Str(std::move(text));
    } else if (s.op == AssignOp::kAddAssign) {
      result = Value::Int(WrapAdd(current.i, rhs.i));
    } else if (s.op == AssignOp::kSubAssign) {
      result = Value::Int(WrapSub(current.i, rhs.i));
    } else {
      result = Value::Int(WrapMul(current.i, rhs.i));
    }
    place.Get() = std::move(result);
  }

  // ---- expressions ----

  bool EvalBool(const Expr& e, Frame& frame) { return Eval(e, frame).b; }

  Value Eval(const Expr& e, Frame& frame) {
    Tick();
    if (const auto* x = e.As<IntLiteral>()) return Value::Int(x->value);
    if (const auto* x = e.As<BoolLiteral>()) return Value::Bool(x->value);
    if (const auto* x = e.As<StringLiteral>()) return Value::Str(x->value);
    if (e.As<NullLiteral>()) return Value::Null();
    if (const auto* x = e.As<ListLiteral>()) {
      ListObj* list = NewList();
      for (const auto& item : x->elements) list->items.push_back(Eval(item, frame));
      return Value::List(list);
    }
    if (const auto* x = e.As<Identifier>()) return IdentSlot(e, *x, frame);
    if (e.As<ThisExpr>()) return frame.self;
    if (const auto* x = e.As<FieldAccess>()) return FieldSlot(e, *x, frame);
    if (const auto* x = e.As<UnaryExpr>()) {
      Value v = Eval(*x->operand, frame);
      if (x->op == UnaryOp::kNot) return Value::Bool(!v.b);
      return Value::Int(WrapSub(0, v.i));
    }
    if (const auto* x = e.As<BinaryExpr>()) return EvalBinary(e, *x, frame);
    if (const auto* x = e.As<CallExpr>()) return EvalCall(e, *x, frame);
    if (const auto* x = e.As<NewExpr>()) return Instantiate(ClassNamed(x->class_name));
    if (const auto* x = e.As<IndexExpr>()) return IndexPlace(*x, frame).Get();
    Fail("internal error: unknown expression");
  }

  Value EvalBinary(const Expr& e, const BinaryExpr& b, Frame& frame) {
    if (b.op == BinaryOp::kAnd) {
      if (!EvalBool(*b.lhs, frame)) return Value::Bool(false);
      return Value::Bool(EvalBool(*b.rhs, frame));
    }
    if (b.op == BinaryOp::kOr) {
      if (EvalBool(*b.lhs, frame)) return Value::Bool(true);
      return Value::Bool(EvalBool(*b.rhs, frame));
    }
    Value lhs = Eval(*b.lhs, frame);
    Value rhs = Eval(*b.rhs, frame);
    switch (b.op) {
      case BinaryOp::kEq:
        return Value::Bool(ValueEquals(lhs, rhs));
      case BinaryOp::kNe:
        return Value::Bool(!ValueEquals(lhs, rhs));
      case BinaryOp::kAdd: {
        const TypeName& type = Lookup(SemFor(e.meta.id).types, e.meta.id);
        if (type.kind == TypeName::Kind::kString) {
          std::string text = Stringify(lhs) + Stringify(rhs);
          Tick(text.size() / 8);
          return Value::Str(std::move(text));
        }
        if (type.kind == TypeName::Kind::kList || type.kind == TypeName::Kind::kEmptyList) {
          if (lhs.IsNull() || rhs.IsNull()) Fail("null dereference concatenating lists");
          ListObj* list = NewList();
          list->items = lhs.list->items;
          list->items.insert(list->items.end(), rhs.list->items.begin(), rhs.list->items.end());
          Tick(list->items.size() / 8);
          return Value::List(list);
        }
        return Value::Int(WrapAdd(lhs.i, rhs.i));
      }
      case BinaryOp::kSub:
        return Value::Int(WrapSub(lhs.i, rhs.i));
      case BinaryOp::kMul:
        return Value::Int(WrapMul(lhs.i, rhs.i));
      case BinaryOp::kDiv:
      case BinaryOp::kMod: {
        if (rhs.i == 0) Fail("division by zero");
        if (lhs.i == std::numeric_limits<std::int64_t>::min() && rhs.i == -1) {
          return Value::Int(b.op == BinaryOp::kDiv ? lhs.i : 0);
        }
        return Value::Int(b.op == BinaryOp::kDiv ? lhs.i / rhs.i : lhs.i % rhs.i);
      }
      case BinaryOp::kLt:
        return Value::Bool(lhs.i < rhs.i);
      case BinaryOp::kLe:
        return Value::Bool(lhs.i <= rhs.i);
      case BinaryOp::kGt:
        return Value::Bool(lhs.i > rhs.i);
      case BinaryOp::kGe:
        return Value::Bool(lhs.i >= rhs.i);
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        break;
    }
    Fail("internal error: unknown operator");
  }

  Value EvalCall(const Expr& e, const CallExpr& call, Frame& frame) {
    const CallBinding& binding = Lookup(SemFor(e.meta.id).calls, e.meta.id);
    if (binding.kind == CallBinding::Kind::kBuiltin) {
      std::vector<Value> args;
      args.reserve(call.args.size());
      for (const auto& a : call.args) args.push_back(Eval(a, frame));
      return CallBuiltin(e, call.method, args);
    }
    Value self;
    if (binding.receiver_is_value) {
      self = Eval(**call.receiver, frame);
    } else if (binding.kind == CallBinding::Kind::kInstance) {
      self = frame.self;
    }
    std::vector<Value> args;
    args.reserve(call.args.size());
    for (const auto& a : call.args) args.push_back(Eval(a, frame));
    const ClassDecl& owner = ClassNamed(binding.owner);
    const MethodDecl& method = owner.methods[binding.method_index];
    if (binding.kind == CallBinding::Kind::kStatic) {
      return Invoke(owner, method, Value::Null(), std::move(args));
    }
    if (self.IsNull()) Fail("null dereference calling '" + call.method + "'");
    return Invoke(owner, method, std::move(self), std::move(args));
  }

  static const std::string& RequireString(const Value& v, const std::string& builtin) {
    if (v.IsNull()) Fail("null argument to " + builtin);
    return *v.s;
  }

  static ListObj& RequireList(const Value& v, const std::string& builtin) {
    if (v.IsNull()) Fail("null argument to " + builtin);
    return *v.list;
  }

  Value CallBuiltin(const Expr& e, const std::string& name, const std::vector<Value>& args) {
    Builtin builtin;
    if (!LookupBuiltin(name, &builtin)) Fail("internal error: unknown builtin '" + name + "'");
    switch (builtin) {
      case Builtin::kPrint:
        return Value::Null();
      case Builtin::kLength: {
        if (args[0].kind == Value::Kind::kString) {
          return Value::Int(static_cast<std::int64_t>(args[0].s->size()));
        }
        return Value::Int(static_cast<std::int64_t>(RequireList(args[0], name).items.size()));
      }
      case Builtin::kCharAt: {
        const std::string& s = RequireString(args[0], name);
        std::int64_t i = args[1].i;
        if (i < 0 || static_cast<std::uint64_t>(i) >= s.size()) {
          Fail("charAt index " + std::to_string(i) + " out of bounds for length " +
               std::to_string(s.size()));
        }
        return Value::Int(static_cast<unsigned char>(s[static_cast<std::size_t>(i)]));
      }
      case Builtin::kIndexOf: {
        const std::string& s = RequireString(args[0], name);
        Tick(s.size() / 8);
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (static_cast<unsigned char>(s[i]) == args[1].i) {
            return Value::Int(static_cast<std::int64_t>(i));
          }
        }
        return Value::Int(-1);
      }
      case Builtin::kFromChars: {
        const ListObj& list = RequireList(args[0], name);
        Tick(list.items.size() / 8);
        std::string out;
        out.reserve(list.items.size());
        for (const auto& item : list.items) {
          if (item.IsNull() || item.i < 0 || item.i > 255) {
            Fail("fromChars: value " + Render(item) + " is not a character code");
          }
          out.push_back(static_cast<char>(static_cast<unsigned char>(item.i)));
        }
        return Value::Str(std::move(out));
      }
      case Builtin::kSubstring: {
        const std::string& s = RequireString(args[0], name);
        std::int64_t begin = args[1].i;
        std::int64_t end = args[2].i;
        if (begin < 0 || end < begin || static_cast<std::uint64_t>(end) > s.size()) {
          Fail("substring range [" + std::to_string(begin) + ", " + std::to_string(end) +
               ") out of bounds for length " + std::to_string(s.size()));
        }
        Tick(static_cast<std::uint64_t>(end - begin) / 8);
        return Value::Str(s.substr(static_cast<std::size_t>(begin),
                                   static_cast<std::size_t>(end - begin)));
      }
      case Builtin::kStr:
        return Value::Str(Stringify(args[0]));
      case Builtin::kAppend:
        RequireList(args[0], name).items.push_back(args[1]);
        return Value::Null();
      case Builtin::kContains: {
        const ListObj& list = RequireList(args[0], name);
        Tick(list.items.size() / 8);
        for (const auto& item : list.items) {
          if (ValueEquals(item, args[1])) return Value::Bool(true);
        }
        return Value::Bool(false);
      }
      case Builtin::kEquals:
        return Value::Bool(ValueEquals(args[0], args[1]));
      case Builtin::kAssertEquals:
        if (!ValueEquals(args[0], args[1])) {
          throw AssertFailure{"assertEquals failed: expected " + Render(args[0]) + " but was " +
                                  Render(args[1]),
                              e.meta.id};
        }
        return Value::Null();
      case Builtin::kAssertNotEquals:
        if (ValueEquals(args[0], args[1])) {
          throw AssertFailure{"assertNotEquals failed: both values are " + Render(args[0]),
                              e.meta.id};
        }
        return Value::Null();
      case Builtin::kAssertTrue:
        if (!args[0].b) throw AssertFailure{"assertTrue failed", e.meta.id};
        return Value::Null();
      case Builtin::kAssertFalse:
        if (args[0].b) throw AssertFailure{"assertFalse failed", e.meta.id};
        return Value::Null();
    }
    Fail("internal error: unhandled builtin");
  }

  const Program& program_;
  const CheckedTestClass& tests_;
  const Limits& limits_;
  std::map<std::string, const ClassDecl*> classes_;

  std::map<std::string, std::vector<Value>> statics_;
  std::deque<std::unique_ptr<ListObj>> lists_;
  std::deque<std::unique_ptr<ObjectObj>> objects_;
  std::uint64_t steps_ = 0;
  std::uint64_t next_clock_check_ = 0;
  int depth_ = 0;
  std::chrono::steady_clock::time_point started_;
};

}  // namespace

TestOutcome RunTestMethod(const Program& program, const CheckedTestClass& tests,
                          const std::string& method, const Limits& limits) {
  for (const auto& m : tests.decl.methods) {
    if (m.name == method && m.IsTest()) {
      Interpreter interpreter(program, tests, limits);
      return interpreter.Run(m);
    }
  }
  return TestOutcome{TestOutcome::Kind::kCompileError, "no @Test method named '" + method + "'",
                     std::nullopt};
}

TestOutcomes RunCheckedTestClass(const Program& program, const CheckedTestClass& tests,
                                 const Limits& limits) {
  TestOutcomes outcomes;
  for (const auto& m : tests.decl.methods) {
    if (!m.IsTest()) continue;
    Interpreter interpreter(program, tests, limits);
    outcomes[m.name] = interpreter.Run(m);
  }
  return outcomes;
}

TestOutcomes RunTestClass(const Program& program, const TestClass& tests, const Limits& limits) {
  TestCheckResult checked = CheckTestClass(program, tests);
  if (const auto* diags = std::get_if<DiagnosticList>(&checked)) {
    TestOutcomes outcomes;
    outcomes[tests.decl.name] =
        TestOutcome{TestOutcome::Kind::kCompileError, FormatDiagnostics(*diags), std::nullopt};
    return outcomes;
  }
  return RunCheckedTestClass(program, std::get<CheckedTestClass>(checked), limits);
}

}  // namespace mtcgen::minilang
