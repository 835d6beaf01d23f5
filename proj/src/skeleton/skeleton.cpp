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

#include "skeleton/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "code_model/corpus.hpp"
#include "common/error.hpp"
#include "minilang/builtins.hpp"
#include "minilang/visit.hpp"

namespace mtcgen::skeleton {
namespace {

using namespace minilang;

constexpr AssertionKind kKinds[] = {AssertionKind::kEq,        AssertionKind::kNe,
                                    AssertionKind::kTruePred,  AssertionKind::kFalsePred,
                                    AssertionKind::kOrderLt,   AssertionKind::kOrderLe};
constexpr Role kRoles[] = {Role::kSourceInput,    Role::kSourceOutput, Role::kFollowupInput,
                           Role::kFollowupOutput, Role::kConstant,     Role::kOther};

Expr Binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.node = BinaryExpr{op, std::move(lhs), std::move(rhs)};
  return e;
}

Expr Call(std::string method, std::vector<Expr> args) {
  Expr e;
  e.node = CallExpr{std::nullopt, std::move(method), std::move(args)};
  return e;
}

NormalizedAssertion Make(AssertionKind kind, const Expr& a, const Expr& b) {
  return {kind, {a, b}, std::nullopt};
}

NormalizedAssertion FromPredicate(const Expr& pred, bool positive) {
  if (const auto* u = pred.As<UnaryExpr>(); u != nullptr && u->op == UnaryOp::kNot) {
    return FromPredicate(*u->operand, !positive);
  }
  if (const auto* b = pred.As<BinaryExpr>()) {
    const Expr& l = *b->lhs;
    const Expr& r = *b->rhs;
    switch (b->op) {
      case BinaryOp::kEq:
        return Make(positive ? AssertionKind::kEq : AssertionKind::kNe, l, r);
      case BinaryOp::kNe:
        return Make(positive ? AssertionKind::kNe : AssertionKind::kEq, l, r);
      case BinaryOp::kLt:
        return positive ? Make(AssertionKind::kOrderLt, l, r) : Make(AssertionKind::kOrderLe, r, l);
      case BinaryOp::kLe:
        return positive ? Make(AssertionKind::kOrderLe, l, r) : Make(AssertionKind::kOrderLt, r, l);
      case BinaryOp::kGt:
        return positive ? Make(AssertionKind::kOrderLt, r, l) : Make(AssertionKind::kOrderLe, l, r);
      case BinaryOp::kGe:
        return positive ? Make(AssertionKind::kOrderLe, r, l) : Make(AssertionKind::kOrderLt, l, r);
      default:
        break;
    }
  }
  NormalizedAssertion out;
  out.kind = positive ? AssertionKind::kTruePred : AssertionKind::kFalsePred;
  out.predicate = pred;
  if (const auto* c = pred.As<CallExpr>()) {
    if (!c->receiver && c->method == "equals" && c->args.size() == 2) {
      return Make(positive ? AssertionKind::kEq : AssertionKind::kNe, c->args[0], c->args[1]);
    }
    if (c->receiver) out.operands.push_back(**c->receiver);
    for (const auto& a : c->args) out.operands.push_back(a);
  } else if (const auto* b = pred.As<BinaryExpr>()) {
    out.operands = {*b->lhs, *b->rhs};
  } else {
    out.operands = {pred};
  }
  return out;
}

bool IsAssertionCall(const Expr& e) {
  const auto* c = e.As<CallExpr>();
  return c != nullptr && !c->receiver && IsAssertionName(c->method);
}

// Where a value comes from. A version is one definition of a local.
struct Origin {
  enum class Kind { kVersion, kLiteral, kOpaque, kInvocation };
  Kind kind = Kind::kOpaque;
  int version = -1;
  // kInvocation: the pair invocation output (1 source, 2 follow-up).
  int invocation = 0;
  // Calls applied from the origin to the value, in application order.
  std::vector<std::string> path;

  static Origin Of(Kind kind, int version = -1, int invocation = 0) {
    return {kind, version, invocation, {}};
  }
};

using Origins = std::vector<Origin>;

struct Version {
  Origins origins;
  std::optional<Role> role;
};

struct Trace {
  std::optional<Role> role;
  std::vector<std::string> path;
  int depth = 0;
};

int InvocationOf(Role role) {
  switch (role) {
    case Role::kSourceInput:
    case Role::kSourceOutput:
      return 1;
    case Role::kFollowupInput:
    case Role::kFollowupOutput:
      return 2;
    default:
      return 0;
  }
}

class Extractor {
 public:
  Extractor(const Program& program, const CheckedTestClass& test, const coupling::CoupledPair& pair)
      : program_(program), test_(test), pair_(pair) {}

  std::optional<MethodRef> PairCallee(const Expr& e) const {
    if (!e.As<CallExpr>()) return std::nullopt;
    auto callee = code_model::CalleeOf(program_, test_.semantics, e);
    if (callee && (*callee == pair_.target || *callee == pair_.candidate)) return callee;
    return std::nullopt;
  }

  MrSkeleton Run(const MethodDecl& method) {
    for (const auto& s : method.body.statements) Statement(s);
    if (!followup_) {
      throw Error(ErrorCode::kNotExtractable,
                  method.name + ": the test does not invoke both methods of the pair");
    }
    if (!relation_) {
      throw Error(ErrorCode::kNotExtractable,
                  method.name + ": no assertion relates the two invocations");
    }
    MrSkeleton out;
    out.method_pair = {*source_, *followup_};
    std::sort(out.method_pair.begin(), out.method_pair.end(),
              [](const MethodRef& a, const MethodRef& b) { return a.ToString() < b.ToString(); });
    out.input_relation = input_relation_;
    out.assertion_kind = relation_->first;
    out.assertion_elements = relation_->second;
    std::sort(out.assertion_elements.begin(), out.assertion_elements.end());
    out.test_method = method.name;
    out.warnings = warnings_;
    return out;
  }

 private:
  void Statement(const Stmt& s) {
    if (const auto* v = s.As<VarDecl>()) {
      Define(v->name, Eval(v->init));
    } else if (const auto* a = s.As<AssignStmt>()) {
      Origins value = Eval(a->value);
      const Expr* base = &a->target;
      bool whole = true;
      while (true) {
        if (const auto* f = base->As<FieldAccess>()) {
          base = &*f->object;
        } else if (const auto* ix = base->As<IndexExpr>()) {
          Origins index = Eval(*ix->index);
          value.insert(value.end(), index.begin(), index.end());
          base = &*ix->target;
        } else {
          break;
        }
        whole = false;
      }
      if (const auto* id = base->As<Identifier>(); id != nullptr && IsLocal(*base)) {
        if (!whole || a->op != AssignOp::kAssign) {
          Origins prior = Eval(*base);
          value.insert(value.end(), prior.begin(), prior.end());
        }
        Define(id->name, std::move(value));
      }
    } else if (const auto* x = s.As<ExprStmt>()) {
      if (IsAssertionCall(x->expr)) {
        Assertion(x->expr);
      } else {
        Eval(x->expr);
      }
    }
  }

  void Assertion(const Expr& call) {
    for (const auto& arg : call.As<CallExpr>()->args) Eval(arg);
    NormalizedAssertion normalized = NormalizeAssertion(call);
    std::vector<Role> elements;
    std::set<int> reached;
    for (const auto& operand : normalized.operands) {
      Origins origins = Eval(operand);
      elements.push_back(Nearest(origins).role.value_or(Role::kOther));
      Reach(origins, reached);
    }
    if (reached.count(1) && reached.count(2)) {
      relation_ = std::make_pair(normalized.kind, std::move(elements));
    }
  }

  bool IsLocal(const Expr& e) const {
    auto it = test_.semantics.idents.find(e.meta.id);
    return it != test_.semantics.idents.end() &&
           it->second.kind == IdentBinding::Kind::kLocal;
  }

  void Define(const std::string& name, Origins origins) {
    versions_.push_back({std::move(origins), std::nullopt});
    current_[name] = static_cast<int>(versions_.size()) - 1;
  }

  static Origins WithCall(Origins origins, const std::string& name) {
    for (auto& o : origins) o.path.push_back(name);
    return origins;
  }

  Origins Eval(const Expr& e) {
    auto memo = memo_.find(e.meta.id);
    if (memo != memo_.end()) return memo->second;
    Origins out = EvalUncached(e);
    memo_[e.meta.id] = out;
    return out;
  }

  Origins EvalUncached(const Expr& e) {
    if (e.As<IntLiteral>() || e.As<BoolLiteral>() || e.As<StringLiteral>() ||
        e.As<NullLiteral>()) {
      return {Origin::Of(Origin::Kind::kLiteral)};
    }
    if (const auto* list = e.As<ListLiteral>()) {
      Origins out;
      for (const auto& item : list->elements) Append(out, Eval(item));
      if (out.empty()) out.push_back(Origin::Of(Origin::Kind::kLiteral));
      return out;
    }
    if (const auto* id = e.As<Identifier>()) {
      auto it = current_.find(id->name);
      if (!IsLocal(e) || it == current_.end()) return {Origin::Of(Origin::Kind::kOpaque)};
      return {Origin::Of(Origin::Kind::kVersion, it->second)};
    }
    if (const auto* f = e.As<FieldAccess>()) return Eval(*f->object);
    if (const auto* u = e.As<UnaryExpr>()) return Eval(*u->operand);
    if (const auto* b = e.As<BinaryExpr>()) {
      Origins out = Eval(*b->lhs);
      Append(out, Eval(*b->rhs));
      return out;
    }
    if (const auto* ix = e.As<IndexExpr>()) {
      Origins out = Eval(*ix->target);
      Append(out, Eval(*ix->index));
      return out;
    }
    if (const auto* c = e.As<CallExpr>()) return EvalCall(e, *c);
    return {Origin::Of(Origin::Kind::kOpaque)};
  }

  Origins EvalCall(const Expr& e, const CallExpr& c) {
    Origins operands;
    if (c.receiver) Append(operands, Eval(**c.receiver));
    for (const auto& a : c.args) Append(operands, Eval(a));
    auto callee = PairCallee(e);
    if (!callee) {
      if (operands.empty()) return {Origin::Of(Origin::Kind::kOpaque)};
      return WithCall(std::move(operands), c.method);
    }
    if (!source_) {
      source_ = callee;
      MarkInputs(c, Role::kSourceInput);
      return {Origin::Of(Origin::Kind::kInvocation, -1, 1)};
    }
    bool other_member = !(*callee == *source_) || pair_.target == pair_.candidate;
    if (!followup_ && other_member) {
      followup_ = callee;
      if (c.receiver) RelationFrom(Eval(**c.receiver));
      for (const auto& a : c.args) RelationFrom(Eval(a));
      std::set<int> reached = {2};
      Reach(operands, reached);
      followup_reach_ = reached;
      MarkInputs(c, Role::kFollowupInput);
      return {Origin::Of(Origin::Kind::kInvocation, -1, 2)};
    }
    warnings_.push_back("extra invocation of " + callee->ToString() + " ignored");
    return operands;
  }

  void RelationFrom(const Origins& arg) {
    Trace t = Nearest(arg, /*source_only=*/true);
    if (t.role) input_relation_.insert(input_relation_.end(), t.path.begin(), t.path.end());
  }

  void MarkInputs(const CallExpr& c, Role role) {
    auto mark = [&](const Expr& arg) {
      const auto* id = arg.As<Identifier>();
      if (id == nullptr || !IsLocal(arg)) return;
      auto it = current_.find(id->name);
      if (it != current_.end() && !versions_[it->second].role) versions_[it->second].role = role;
    };
    if (c.receiver) mark(**c.receiver);
    for (const auto& a : c.args) mark(a);
  }

  static void Append(Origins& to, const Origins& from) { to.insert(to.end(), from.begin(), from.end()); }

  void Candidates(const Origin& o, int depth, std::vector<Trace>& out, bool& constant_only) const {
    switch (o.kind) {
      case Origin::Kind::kLiteral:
        return;
      case Origin::Kind::kOpaque:
        constant_only = false;
        return;
      case Origin::Kind::kInvocation:
        out.push_back({o.invocation == 1 ? Role::kSourceOutput : Role::kFollowupOutput, o.path,
                       depth});
        return;
      case Origin::Kind::kVersion: {
        const Version& v = versions_[o.version];
        if (v.role) {
          out.push_back({v.role, o.path, depth});
          return;
        }
        for (const auto& inner : v.origins) {
          Origin extended = inner;
          extended.path.insert(extended.path.end(), o.path.begin(), o.path.end());
          Candidates(extended, depth + 1, out, constant_only);
        }
        return;
      }
    }
  }

  // Nearest root; ties go to the first operand.
  Trace Nearest(const Origins& origins, bool source_only = false) const {
    std::vector<Trace> found;
    bool constant_only = true;
    for (const auto& o : origins) Candidates(o, 0, found, constant_only);
    const Trace* best = nullptr;
    for (const auto& t : found) {
      if (source_only && InvocationOf(*t.role) != 1) continue;
      if (best == nullptr || t.depth < best->depth) best = &t;
    }
    if (best != nullptr) return *best;
    if (source_only) return {};
    return {constant_only && !origins.empty() ? Role::kConstant : Role::kOther, {}, 0};
  }

  void Reach(const Origins& origins, std::set<int>& reached) const {
    std::vector<Trace> found;
    bool constant_only = true;
    for (const auto& o : origins) Candidates(o, 0, found, constant_only);
    for (const auto& t : found) {
      int inv = InvocationOf(*t.role);
      reached.insert(inv);
      if (*t.role == Role::kFollowupOutput) reached.insert(followup_reach_.begin(), followup_reach_.end());
    }
  }

  const Program& program_;
  const CheckedTestClass& test_;
  const coupling::CoupledPair& pair_;
  std::vector<Version> versions_;
  std::map<std::string, int> current_;
  std::unordered_map<NodeId, Origins> memo_;
  std::optional<MethodRef> source_;
  std::optional<MethodRef> followup_;
  std::set<int> followup_reach_;
  std::vector<std::string> input_relation_;
  std::optional<std::pair<AssertionKind, std::vector<Role>>> relation_;
  std::vector<std::string> warnings_;
};

std::size_t PairCalls(const Extractor& x, const Block& block) {
  std::size_t n = 0;
  VisitBlockExprs(block, [&](const Expr& e) { n += x.PairCallee(e) ? 1 : 0; });
  return n;
}

bool PairCallOffStraightLine(const Extractor& x, const Block& body) {
  for (const auto& s : body.statements) {
    if (!s.As<IfStmt>() && !s.As<WhileStmt>()) continue;
    bool found = false;
    VisitStmt(s, [](const Stmt&) {}, [&](const Expr& e) { found = found || x.PairCallee(e); });
    if (found) return true;
  }
  return false;
}

std::vector<std::string> RefStrings(const std::vector<MethodRef>& refs) {
  std::vector<std::string> out;
  for (const auto& r : refs) out.push_back(r.ToString());
  return out;
}

}  // namespace

const char* AssertionKindName(AssertionKind kind) {
  switch (kind) {
    case AssertionKind::kEq:
      return "EQ";
    case AssertionKind::kNe:
      return "NE";
    case AssertionKind::kTruePred:
      return "TRUE_PRED";
    case AssertionKind::kFalsePred:
      return "FALSE_PRED";
    case AssertionKind::kOrderLt:
      return "ORDER_LT";
    case AssertionKind::kOrderLe:
      return "ORDER_LE";
  }
  return "";
}

const char* RoleName(Role role) {
  switch (role) {
    case Role::kSourceInput:
      return "SOURCE_INPUT";
    case Role::kSourceOutput:
      return "SOURCE_OUTPUT";
    case Role::kFollowupInput:
      return "FOLLOWUP_INPUT";
    case Role::kFollowupOutput:
      return "FOLLOWUP_OUTPUT";
    case Role::kConstant:
      return "CONSTANT";
    case Role::kOther:
      return "OTHER";
  }
  return "";
}

std::optional<AssertionKind> ParseAssertionKind(std::string_view name) {
  for (auto k : kKinds) {
    if (name == AssertionKindName(k)) return k;
  }
  return std::nullopt;
}

std::optional<Role> ParseRole(std::string_view name) {
  for (auto r : kRoles) {
    if (name == RoleName(r)) return r;
  }
  return std::nullopt;
}

NormalizedAssertion NormalizeAssertion(const Expr& call) {
  if (!IsAssertionCall(call)) {
    throw Error(ErrorCode::kNotAnAssertion, "not an assertion call");
  }
  const auto& c = *call.As<CallExpr>();
  std::size_t arity = c.method == "assertEquals" || c.method == "assertNotEquals" ? 2 : 1;
  if (c.args.size() != arity) {
    throw Error(ErrorCode::kNotAnAssertion, c.method + " with " + std::to_string(c.args.size()) +
                                                " arguments");
  }
  if (c.method == "assertEquals") return Make(AssertionKind::kEq, c.args[0], c.args[1]);
  if (c.method == "assertNotEquals") return Make(AssertionKind::kNe, c.args[0], c.args[1]);
  return FromPredicate(c.args[0], c.method == "assertTrue");
}

Expr ToAssertionCall(const NormalizedAssertion& n) {
  switch (n.kind) {
    case AssertionKind::kEq:
      return Call("assertEquals", n.operands);
    case AssertionKind::kNe:
      return Call("assertNotEquals", n.operands);
    case AssertionKind::kOrderLt:
      return Call("assertTrue", {Binary(BinaryOp::kLt, n.operands[0], n.operands[1])});
    case AssertionKind::kOrderLe:
      return Call("assertTrue", {Binary(BinaryOp::kLe, n.operands[0], n.operands[1])});
    case AssertionKind::kTruePred:
      return Call("assertTrue", {*n.predicate});
    case AssertionKind::kFalsePred:
      return Call("assertFalse", {*n.predicate});
  }
  return Expr{};
}

MrSkeleton ExtractSkeleton(const Program& program, const CheckedTestClass& test,
                           const coupling::CoupledPair& pair) {
  Extractor probe(program, test, pair);
  for (const auto& m : test.decl.methods) {
    if (!m.IsTest() || PairCalls(probe, m.body) < 2) continue;
    if (PairCallOffStraightLine(probe, m.body)) {
      throw Error(ErrorCode::kNotExtractable,
                  m.name + ": pair invocation inside a loop or branch");
    }
    return Extractor(program, test, pair).Run(m);
  }
  throw Error(ErrorCode::kNotExtractable,
              test.decl.name + ": no test method invokes the pair methods twice");
}

MrSkeleton ExtractReferenceSkeleton(const Program& program, const CheckedTestClass& test,
                                    const MethodRef& target) {
  for (const auto& pair : coupling::AnalyzeCoupling(program, target)) {
    for (const auto& m : test.decl.methods) {
      if (m.IsTest() && code_model::MethodCalls(program, test.semantics, m, pair.target) &&
          code_model::MethodCalls(program, test.semantics, m, pair.candidate)) {
        return ExtractSkeleton(program, test, pair);
      }
    }
  }
  throw Error(ErrorCode::kNotExtractable,
              test.decl.name + ": no test invokes a coupled pair of " + target.ToString());
}

SimilarityResult Compare(const MrSkeleton& generated, const MrSkeleton& reference) {
  SimilarityResult out;
  out.l1 = RefStrings(generated.method_pair) == RefStrings(reference.method_pair);
  if (!out.l1) out.mismatches.push_back("methodPair");
  if (generated.input_relation != reference.input_relation) {
    out.mismatches.push_back("inputRelation");
  }
  if (generated.assertion_kind != reference.assertion_kind) {
    out.mismatches.push_back("assertionKind");
  }
  if (generated.assertion_elements != reference.assertion_elements) {
    out.mismatches.push_back("assertionElements");
  }
  out.l2 = out.mismatches.empty();
  return out;
}

nlohmann::json SkeletonToJson(const MrSkeleton& s) {
  nlohmann::json elements = nlohmann::json::array();
  for (Role r : s.assertion_elements) elements.push_back(RoleName(r));
  nlohmann::json j = {{"methodPair", RefStrings(s.method_pair)},
                      {"inputRelation", s.input_relation},
                      {"assertionKind", AssertionKindName(s.assertion_kind)},
                      {"assertionElements", std::move(elements)}};
  if (!s.test_method.empty()) j["testMethod"] = s.test_method;
  if (!s.warnings.empty()) j["warnings"] = s.warnings;
  return j;
}

MrSkeleton SkeletonFromJson(const nlohmann::json& j) {
  MrSkeleton s;
  try {
    for (const auto& text : j.at("methodPair")) {
      auto ref = ParseMethodRef(text.get<std::string>());
      if (!ref) throw Error(ErrorCode::kInvalidArgument, "bad method ref " + text.dump());
      s.method_pair.push_back(*ref);
    }
    std::sort(s.method_pair.begin(), s.method_pair.end(),
              [](const MethodRef& a, const MethodRef& b) { return a.ToString() < b.ToString(); });
    s.input_relation = j.at("inputRelation").get<std::vector<std::string>>();
    auto kind = ParseAssertionKind(j.at("assertionKind").get<std::string>());
    if (!kind) throw Error(ErrorCode::kInvalidArgument, "bad assertion kind");
    s.assertion_kind = *kind;
    for (const auto& e : j.at("assertionElements")) {
      auto role = ParseRole(e.get<std::string>());
      if (!role) throw Error(ErrorCode::kInvalidArgument, "bad role " + e.dump());
      s.assertion_elements.push_back(*role);
    }
    std::sort(s.assertion_elements.begin(), s.assertion_elements.end());
    s.test_method = j.value("testMethod", "");
    s.warnings = j.value("warnings", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("skeleton JSON: ") + e.what());
  }
  if (s.method_pair.size() != 2 || s.assertion_elements.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "skeleton JSON needs two methods and an element");
  }
  return s;
}

nlohmann::json SimilarityToJson(const SimilarityResult& r) {
  return {{"l1", r.l1}, {"l2", r.l2}, {"mismatches", r.mismatches}};
}

}  // namespace mtcgen::skeleton
