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

// Pre-order traversal helpers. Children are visited left to right in source
// order.

#ifndef MTCGEN_MINILANG_VISIT_HPP_
#define MTCGEN_MINILANG_VISIT_HPP_

#include "minilang/ast.hpp"

namespace mtcgen::minilang {
namespace visit_internal {

// E is `Expr` or `const Expr`; B and S follow the same constness.
template <typename E, typename Fn>
void Expr_(E& e, Fn& fn) {
  fn(e);
  if (auto* x = e.template As<ListLiteral>()) {
    for (auto& item : x->elements) Expr_(item, fn);
  } else if (auto* x = e.template As<FieldAccess>()) {
    Expr_(*x->object, fn);
  } else if (auto* x = e.template As<UnaryExpr>()) {
    Expr_(*x->operand, fn);
  } else if (auto* x = e.template As<BinaryExpr>()) {
    Expr_(*x->lhs, fn);
    Expr_(*x->rhs, fn);
  } else if (auto* x = e.template As<CallExpr>()) {
    if (x->receiver) Expr_(**x->receiver, fn);
    for (auto& a : x->args) Expr_(a, fn);
  } else if (auto* x = e.template As<IndexExpr>()) {
    Expr_(*x->target, fn);
    Expr_(*x->index, fn);
  }
}

template <typename B, typename StmtFn, typename ExprFn>
void Block_(B& block, StmtFn& on_stmt, ExprFn& on_expr);

template <typename S, typename StmtFn, typename ExprFn>
void Stmt_(S& s, StmtFn& on_stmt, ExprFn& on_expr) {
  on_stmt(s);
  if (auto* x = s.template As<VarDecl>()) {
    Expr_(x->init, on_expr);
  } else if (auto* x = s.template As<AssignStmt>()) {
    Expr_(x->target, on_expr);
    Expr_(x->value, on_expr);
  } else if (auto* x = s.template As<IfStmt>()) {
    Expr_(x->condition, on_expr);
    Block_(x->then_block, on_stmt, on_expr);
    if (x->else_block) Block_(*x->else_block, on_stmt, on_expr);
  } else if (auto* x = s.template As<WhileStmt>()) {
    Expr_(x->condition, on_expr);
    Block_(x->body, on_stmt, on_expr);
  } else if (auto* x = s.template As<ReturnStmt>()) {
    if (x->value) Expr_(*x->value, on_expr);
  } else if (auto* x = s.template As<ExprStmt>()) {
    Expr_(x->expr, on_expr);
  } else if (auto* x = s.template As<ThrowStmt>()) {
    Expr_(x->value, on_expr);
  }
}

template <typename B, typename StmtFn, typename ExprFn>
void Block_(B& block, StmtFn& on_stmt, ExprFn& on_expr) {
  for (auto& s : block.statements) Stmt_(s, on_stmt, on_expr);
}

}  // namespace visit_internal

// Calls fn(expr) for `e` and every nested expression.
template <typename Fn>
void VisitExpr(const Expr& e, Fn&& fn) {
  visit_internal::Expr_(e, fn);
}

// Calls on_stmt for `s` and nested statements and on_expr for every
// expression, in source order.
template <typename StmtFn, typename ExprFn>
void VisitStmt(const Stmt& s, StmtFn&& on_stmt, ExprFn&& on_expr) {
  visit_internal::Stmt_(s, on_stmt, on_expr);
}

template <typename StmtFn, typename ExprFn>
void VisitBlock(const Block& block, StmtFn&& on_stmt, ExprFn&& on_expr) {
  visit_internal::Block_(block, on_stmt, on_expr);
}

template <typename ExprFn>
void VisitBlockExprs(const Block& block, ExprFn&& on_expr) {
  VisitBlock(block, [](const Stmt&) {}, on_expr);
}

// Mutable variants; same order as the const ones.
template <typename Fn>
void VisitExprMut(Expr& e, Fn&& fn) {
  visit_internal::Expr_(e, fn);
}

template <typename StmtFn, typename ExprFn>
void VisitBlockMut(Block& block, StmtFn&& on_stmt, ExprFn&& on_expr) {
  visit_internal::Block_(block, on_stmt, on_expr);
}

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_VISIT_HPP_
