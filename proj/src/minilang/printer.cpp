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

#include "minilang/printer.hpp"

#include "minilang/lexer.hpp"

namespace mtcgen::minilang {
namespace {

std::string Indent(int level) { return std::string(static_cast<std::size_t>(level) * 4, ' '); }

bool IsNegativeLiteral(const Expr& e) {
  const auto* lit = e.As<IntLiteral>();
  return lit != nullptr && lit->value < 0;
}

// Operand of `.`, `[` or a postfix chain.
std::string PrintPostfixBase(const Expr& e) {
  if (e.As<BinaryExpr>() || e.As<UnaryExpr>() || IsNegativeLiteral(e)) {
    return "(" + PrintExpr(e) + ")";
  }
  return PrintExpr(e);
}

std::string PrintBinaryOperand(const Expr& e) {
  if (e.As<BinaryExpr>()) return "(" + PrintExpr(e) + ")";
  return PrintExpr(e);
}

std::string PrintArgs(const std::vector<Expr>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += ", ";
    s += PrintExpr(args[i]);
  }
  return s + ")";
}

std::string PrintBlock(const Block& block, int indent) {
  std::string s = "{\n";
  for (const auto& stmt : block.statements) s += PrintStmt(stmt, indent + 1);
  s += Indent(indent) + "}";
  return s;
}

std::string PrintIfChain(const IfStmt& s, int indent) {
  std::string out = "if (" + PrintExpr(s.condition) + ") " + PrintBlock(s.then_block, indent);
  if (!s.else_block) return out;
  const Block& else_block = *s.else_block;
  if (else_block.statements.size() == 1) {
    if (const auto* nested = else_block.statements.front().As<IfStmt>()) {
      return out + " else " + PrintIfChain(*nested, indent);
    }
  }
  return out + " else " + PrintBlock(else_block, indent);
}

std::string Modifiers(bool is_static) { return is_static ? "static " : ""; }

std::string PrintMethodHead(const MethodDecl& method) {
  std::string s = Modifiers(method.is_static) + method.return_type.ToString() + " " +
                  method.name + "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i > 0) s += ", ";
    s += method.params[i].type.ToString() + " " + method.params[i].name;
  }
  return s + ")";
}

}  // namespace

std::string PrintExpr(const Expr& expr) {
  if (const auto* e = expr.As<IntLiteral>()) return std::to_string(e->value);
  if (const auto* e = expr.As<BoolLiteral>()) return e->value ? "true" : "false";
  if (const auto* e = expr.As<StringLiteral>()) return QuoteString(e->value);
  if (expr.As<NullLiteral>()) return "null";
  if (const auto* e = expr.As<ListLiteral>()) {
    std::string s = "[";
    for (std::size_t i = 0; i < e->elements.size(); ++i) {
      if (i > 0) s += ", ";
      s += PrintExpr(e->elements[i]);
    }
    return s + "]";
  }
  if (const auto* e = expr.As<Identifier>()) return e->name;
  if (expr.As<ThisExpr>()) return "this";
  if (const auto* e = expr.As<FieldAccess>()) return PrintPostfixBase(*e->object) + "." + e->field;
  if (const auto* e = expr.As<UnaryExpr>()) {
    const Expr& operand = *e->operand;
    std::string inner = PrintExpr(operand);
    bool starts_with_digit = !inner.empty() && inner[0] >= '0' && inner[0] <= '9';
    if (operand.As<BinaryExpr>() || operand.As<IntLiteral>() ||
        (e->op == UnaryOp::kNeg && starts_with_digit)) {
      inner = "(" + inner + ")";
    }
    return UnaryOpSpelling(e->op) + inner;
  }
  if (const auto* e = expr.As<BinaryExpr>()) {
    return PrintBinaryOperand(*e->lhs) + " " + BinaryOpSpelling(e->op) + " " +
           PrintBinaryOperand(*e->rhs);
  }
  if (const auto* e = expr.As<CallExpr>()) {
    std::string s;
    if (e->receiver) s = PrintPostfixBase(**e->receiver) + ".";
    return s + e->method + PrintArgs(e->args);
  }
  if (const auto* e = expr.As<NewExpr>()) return "new " + e->class_name + "()";
  if (const auto* e = expr.As<IndexExpr>()) {
    return PrintPostfixBase(*e->target) + "[" + PrintExpr(*e->index) + "]";
  }
  return "";
}

std::string PrintStmt(const Stmt& stmt, int indent) {
  std::string pad = Indent(indent);
  if (const auto* s = stmt.As<VarDecl>()) {
    std::string type = s->type ? s->type->ToString() : "var";
    return pad + type + " " + s->name + " = " + PrintExpr(s->init) + ";\n";
  }
  if (const auto* s = stmt.As<AssignStmt>()) {
    return pad + PrintExpr(s->target) + " " + AssignOpSpelling(s->op) + " " +
           PrintExpr(s->value) + ";\n";
  }
  if (const auto* s = stmt.As<IfStmt>()) return pad + PrintIfChain(*s, indent) + "\n";
  if (const auto* s = stmt.As<WhileStmt>()) {
    return pad + "while (" + PrintExpr(s->condition) + ") " + PrintBlock(s->body, indent) + "\n";
  }
  if (const auto* s = stmt.As<ReturnStmt>()) {
    if (!s->value) return pad + "return;\n";
    return pad + "return " + PrintExpr(*s->value) + ";\n";
  }
  if (const auto* s = stmt.As<ExprStmt>()) return pad + PrintExpr(s->expr) + ";\n";
  if (const auto* s = stmt.As<ThrowStmt>()) return pad + "throw " + PrintExpr(s->value) + ";\n";
  return "";
}

std::string PrintSignature(const MethodDecl& method) { return PrintMethodHead(method) + ";"; }

std::string PrintMethod(const MethodDecl& method, int indent) {
  std::string pad = Indent(indent);
  std::string s;
  for (const auto& a : method.annotations) s += pad + "@" + a + "\n";
  s += pad + PrintMethodHead(method) + " " + PrintBlock(method.body, indent) + "\n";
  return s;
}

std::string PrintClass(const ClassDecl& cls) {
  std::string s = "class " + cls.name + " {\n";
  for (const auto& f : cls.fields) {
    s += Indent(1) + Modifiers(f.is_static) + f.type.ToString() + " " + f.name;
    if (f.init) s += " = " + PrintExpr(*f.init);
    s += ";\n";
  }
  for (std::size_t i = 0; i < cls.methods.size(); ++i) {
    if (i > 0 || !cls.fields.empty()) s += "\n";
    s += PrintMethod(cls.methods[i], 1);
  }
  return s + "}\n";
}

std::string PrintClasses(const std::vector<ClassDecl>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) s += "\n";
    s += PrintClass(classes[i]);
  }
  return s;
}

std::string PrettyPrint(const Program& program) { return PrintClasses(program.classes()); }

}  // namespace mtcgen::minilang
