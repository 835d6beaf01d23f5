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

#include "validation/mutation.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "minilang/printer.hpp"
#include "minilang/visit.hpp"

namespace mtcgen::validation {
namespace {

using namespace minilang;

constexpr BinaryOp kArithmetic[] = {BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul,
                                    BinaryOp::kDiv, BinaryOp::kMod};
constexpr BinaryOp kRelational[] = {BinaryOp::kEq, BinaryOp::kNe, BinaryOp::kLt,
                                    BinaryOp::kLe, BinaryOp::kGt, BinaryOp::kGe};
constexpr BinaryOp kConditional[] = {BinaryOp::kAnd, BinaryOp::kOr};

template <std::size_t N>
bool In(const BinaryOp (&ops)[N], BinaryOp op) {
  return std::find(std::begin(ops), std::end(ops), op) != std::end(ops);
}

struct Site {
  MutationOperator op;
  NodeId node;
  std::string before;
  std::string after;
};

std::vector<std::int64_t> IntReplacements(std::int64_t k) {
  std::vector<std::int64_t> out;
  auto add = [&](std::int64_t v) {
    if (v != k && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  if (k < INT64_MAX) add(k + 1);
  if (k > INT64_MIN) add(k - 1);
  add(0);
  return out;
}

std::string Trim(std::string s) {
  auto b = s.find_first_not_of(' ');
  auto e = s.find_last_not_of(" \n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Walks one method body in pre-order. With `apply` unset it records every
// site; otherwise it performs site number `*apply` and stops.
class Walker {
 public:
  explicit Walker(std::optional<std::size_t> apply) : apply_(apply) {}

  void WalkBlock(Block& block) {
    for (std::size_t i = 0; i < block.statements.size() && !done_; ++i) {
      Stmt& s = block.statements[i];
      if (s.As<AssignStmt>() || s.As<ExprStmt>()) {
        if (Hit({MutationOperator::kSdl, s.meta.id, Trim(PrintStmt(s, 0)), ""})) {
          block.statements.erase(block.statements.begin() + static_cast<std::ptrdiff_t>(i));
          return;
        }
      }
      WalkStmt(s);
    }
  }

  const std::vector<Site>& sites() const { return sites_; }
  bool done() const { return done_; }
  const Site& applied() const { return applied_; }

 private:
  bool Hit(Site site) {
    if (done_) return false;
    std::size_t index = counter_++;
    if (!apply_) {
      sites_.push_back(std::move(site));
      return false;
    }
    if (index != *apply_) return false;
    done_ = true;
    applied_ = std::move(site);
    return true;
  }

  void WalkStmt(Stmt& s) {
    if (auto* x = s.As<VarDecl>()) {
      WalkExpr(x->init);
    } else if (auto* x = s.As<AssignStmt>()) {
      WalkExpr(x->target);
      WalkExpr(x->value);
    } else if (auto* x = s.As<IfStmt>()) {
      WalkExpr(x->condition);
      WalkBlock(x->then_block);
      if (x->else_block) WalkBlock(*x->else_block);
    } else if (auto* x = s.As<WhileStmt>()) {
      WalkExpr(x->condition);
      WalkBlock(x->body);
    } else if (auto* x = s.As<ReturnStmt>()) {
      if (x->value) WalkExpr(*x->value);
    } else if (auto* x = s.As<ExprStmt>()) {
      WalkExpr(x->expr);
    } else if (auto* x = s.As<ThrowStmt>()) {
      WalkExpr(x->value);
    }
  }

  void WalkExpr(Expr& root) {
    VisitExprMut(root, [this](Expr& e) { MutateExpr(e); });
  }

  template <std::size_t N>
  void SwapOps(Expr& e, BinaryExpr& b, MutationOperator op, const BinaryOp (&ops)[N]) {
    BinaryOp original = b.op;
    for (BinaryOp alt : ops) {
      if (alt == original) continue;
      if (Hit({op, e.meta.id, BinaryOpSpelling(original), BinaryOpSpelling(alt)})) {
        b.op = alt;
        return;
      }
    }
  }

  void MutateExpr(Expr& e) {
    if (done_) return;
    if (auto* b = e.As<BinaryExpr>()) {
      if (In(kArithmetic, b->op)) {
        SwapOps(e, *b, MutationOperator::kAor, kArithmetic);
      } else if (In(kRelational, b->op)) {
        SwapOps(e, *b, MutationOperator::kRor, kRelational);
      } else if (In(kConditional, b->op)) {
        SwapOps(e, *b, MutationOperator::kCor, kConditional);
      }
    } else if (auto* lit = e.As<IntLiteral>()) {
      std::int64_t original = lit->value;
      for (std::int64_t alt : IntReplacements(original)) {
        if (Hit({MutationOperator::kLvr, e.meta.id, std::to_string(original),
                 std::to_string(alt)})) {
          lit->value = alt;
          return;
        }
      }
    } else if (auto* lit = e.As<BoolLiteral>()) {
      if (Hit({MutationOperator::kLvr, e.meta.id, lit->value ? "true" : "false",
               lit->value ? "false" : "true"})) {
        lit->value = !lit->value;
      }
    } else if (auto* lit = e.As<StringLiteral>()) {
      if (!lit->value.empty() &&
          Hit({MutationOperator::kLvr, e.meta.id, PrintExpr(e), "\"\""})) {
        lit->value.clear();
      }
    }
  }

  std::optional<std::size_t> apply_;
  std::size_t counter_ = 0;
  bool done_ = false;
  std::vector<Site> sites_;
  Site applied_{};
};

struct MethodLocation {
  std::size_t class_index;
  std::size_t method_index;
};

MethodLocation Locate(const Program& program, const MethodRef& method) {
  auto class_index = program.ClassIndex(method.class_name);
  if (class_index) {
    const auto& methods = program.classes()[*class_index].methods;
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (RefOf(program.classes()[*class_index], methods[i]) == method) {
        return {*class_index, i};
      }
    }
  }
  throw Error(ErrorCode::kUnknownMethod, "no such method: " + method.ToString());
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

const char* OperatorName(MutationOperator op) {
  switch (op) {
    case MutationOperator::kAor:
      return "AOR";
    case MutationOperator::kRor:
      return "ROR";
    case MutationOperator::kCor:
      return "COR";
    case MutationOperator::kLvr:
      return "LVR";
    case MutationOperator::kSdl:
      return "SDL";
  }
  return "";
}

std::optional<MutationOperator> ParseOperator(std::string_view name) {
  for (auto op : {MutationOperator::kAor, MutationOperator::kRor, MutationOperator::kCor,
                  MutationOperator::kLvr, MutationOperator::kSdl}) {
    if (name == OperatorName(op)) return op;
  }
  return std::nullopt;
}

std::vector<Mutant> MutateMethod(const Program& program, const MethodRef& method) {
  MethodLocation at = Locate(program, method);
  Block scratch = program.classes()[at.class_index].methods[at.method_index].body;
  Walker survey(std::nullopt);
  survey.WalkBlock(scratch);
  std::vector<Mutant> out;
  for (std::size_t i = 0; i < survey.sites().size(); ++i) {
    std::vector<ClassDecl> classes = program.classes();
    Walker apply(i);
    apply.WalkBlock(classes[at.class_index].methods[at.method_index].body);
    ProgramResult checked = CheckProgram(std::move(classes), program.paths());
    if (!checked.ok()) continue;
    const Site& site = apply.applied();
    out.push_back(
        Mutant{"", site.op, method, site.node, site.before, site.after, checked.program});
  }
  return out;
}

std::vector<Mutant> GenerateMutants(const Program& program, const coupling::CoupledPair& pair,
                                    const MutationConfig& config) {
  std::vector<Mutant> all = MutateMethod(program, pair.target);
  if (!(pair.candidate == pair.target)) {
    std::vector<Mutant> more = MutateMethod(program, pair.candidate);
    std::move(more.begin(), more.end(), std::back_inserter(all));
  }
  for (std::size_t i = 0; i < all.size(); ++i) all[i].id = "m" + std::to_string(i + 1);
  if (all.size() <= config.cap) return all;
  std::vector<Mutant> sample;
  std::mt19937_64 rng(config.seed);
  std::sample(std::make_move_iterator(all.begin()), std::make_move_iterator(all.end()),
              std::back_inserter(sample), config.cap, rng);
  return sample;
}

std::string MutantDiff(const Program& original, const Mutant& mutant) {
  const ClassDecl* before_cls = original.FindClass(mutant.method.class_name);
  const ClassDecl* after_cls = mutant.program->FindClass(mutant.method.class_name);
  if (before_cls == nullptr || after_cls == nullptr) {
    throw Error(ErrorCode::kUnknownMethod, "no such class: " + mutant.method.class_name);
  }
  std::vector<std::string> a = Lines(PrintClass(*before_cls));
  std::vector<std::string> b = Lines(PrintClass(*after_cls));
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  constexpr std::size_t kContext = 3;
  std::size_t start = prefix > kContext ? prefix - kContext : 0;
  std::size_t a_end = std::min(a.size(), a.size() - suffix + kContext);
  std::size_t b_end = std::min(b.size(), b.size() - suffix + kContext);
  const std::string& path = original.PathOf(*original.ClassIndex(mutant.method.class_name));
  std::ostringstream out;
  out << "--- a/" << path << "\n+++ b/" << path << "\n";
  out << "@@ -" << start + 1 << "," << a_end - start << " +" << start + 1 << ","
      << b_end - start << " @@ " << mutant.id << " " << OperatorName(mutant.op) << "\n";
  for (std::size_t i = start; i < prefix; ++i) out << " " << a[i] << "\n";
  for (std::size_t i = prefix; i < a.size() - suffix; ++i) out << "-" << a[i] << "\n";
  for (std::size_t i = prefix; i < b.size() - suffix; ++i) out << "+" << b[i] << "\n";
  for (std::size_t i = a.size() - suffix; i < a_end; ++i) out << " " << a[i] << "\n";
  return out.str();
}

}  // namespace mtcgen::validation
