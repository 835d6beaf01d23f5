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

#include "minilang/parser.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>
#include <utility>

#include "minilang/lexer.hpp"

namespace mtcgen::minilang {
namespace {

constexpr int kMaxNesting = 200;

struct SyntaxError {
  int line;
  std::string message;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, NodeIdAllocator& ids)
      : tokens_(std::move(tokens)), ids_(ids) {}

  std::vector<ClassDecl> ParseFile() {
    std::vector<ClassDecl> classes;
    while (true) {
      CheckLexError();
      if (Peek().kind == TokenKind::kEof) break;
      classes.push_back(ParseClass());
    }
    return classes;
  }

  Expr ParseStandaloneExpression() {
    Expr e = ParseExpr();
    if (Peek().kind != TokenKind::kEof) Fail("unexpected '" + Peek().text + "' after expression");
    return e;
  }

 private:
  // ---- token helpers ----
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& Next() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kError) Fail(t.text, t.line);
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void Fail(const std::string& message, int line = -1) const {
    throw SyntaxError{line < 0 ? Peek().line : line, message};
  }
  void CheckLexError() const {
    if (Peek().kind == TokenKind::kError) Fail(Peek().text, Peek().line);
  }
  bool Accept(std::string_view punct) {
    CheckLexError();
    if (Peek().Is(punct)) {
      Next();
      return true;
    }
    return false;
  }
  bool AcceptWord(std::string_view word) {
    CheckLexError();
    if (Peek().IsWord(word)) {
      Next();
      return true;
    }
    return false;
  }
  void Expect(std::string_view punct) {
    if (!Accept(punct)) Fail("expected '" + std::string(punct) + "' but found " + Describe(Peek()));
  }
  void ExpectWord(std::string_view word) {
    if (!AcceptWord(word)) {
      Fail("expected '" + std::string(word) + "' but found " + Describe(Peek()));
    }
  }
  std::string ExpectIdentifier(std::string_view what) {
    CheckLexError();
    const Token& t = Peek();
    if (t.kind != TokenKind::kIdent || IsKeyword(t.text)) {
      Fail("expected " + std::string(what) + " but found " + Describe(t));
    }
    return Next().text;
  }
  static std::string Describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::kEof:
        return "end of input";
      case TokenKind::kString:
        return "string literal";
      default:
        return "'" + t.text + "'";
    }
  }
  NodeMeta Meta(const Token& at) { return NodeMeta{ids_.Next(), SourceSpan{at.line, at.column}}; }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.Fail("nesting too deep");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  // ---- declarations ----
  ClassDecl ParseClass() {
    const Token& start = Peek();
    ExpectWord("class");
    ClassDecl cls;
    cls.meta = Meta(start);
    cls.name = ExpectIdentifier("class name");
    Expect("{");
    while (!Accept("}")) {
      if (Peek().kind == TokenKind::kEof) Fail("unterminated class body");
      ParseMember(cls);
    }
    return cls;
  }

  void ParseMember(ClassDecl& cls) {
    const Token& start = Peek();
    std::vector<std::string> annotations;
    while (Accept("@")) annotations.push_back(ExpectIdentifier("annotation name"));
    bool is_static = AcceptWord("static");
    TypeName type;
    if (AcceptWord("void")) {
      type = TypeName::Void();
    } else {
      type = ParseType();
    }
    const Token& name_tok = Peek();
    std::string name = ExpectIdentifier("member name");
    if (Accept("(")) {
      MethodDecl m;
      m.meta = Meta(start);
      m.name = std::move(name);
      m.return_type = std::move(type);
      m.is_static = is_static;
      std::sort(annotations.begin(), annotations.end());
      annotations.erase(std::unique(annotations.begin(), annotations.end()), annotations.end());
      m.annotations = std::move(annotations);
      if (!Accept(")")) {
        do {
          Param p;
          p.type = ParseType();
          p.name = ExpectIdentifier("parameter name");
          m.params.push_back(std::move(p));
        } while (Accept(","));
        Expect(")");
      }
      m.body = ParseBlock();
      cls.methods.push_back(std::move(m));
      return;
    }
    if (!annotations.empty()) Fail("annotations are only allowed on methods", start.line);
    if (type.IsVoid()) Fail("field '" + name + "' cannot have type void", name_tok.line);
    FieldDecl f;
    f.meta = Meta(start);
    f.name = std::move(name);
    f.type = std::move(type);
    f.is_static = is_static;
    if (Accept("=")) f.init = ParseExpr();
    Expect(";");
    cls.fields.push_back(std::move(f));
  }

  TypeName ParseType() {
    DepthGuard guard(*this);
    CheckLexError();
    if (AcceptWord("int")) return TypeName::Int();
    if (AcceptWord("bool")) return TypeName::Bool();
    if (AcceptWord("string")) return TypeName::String();
    if (AcceptWord("list")) {
      Expect("<");
      TypeName elem = ParseType();
      Expect(">");
      return TypeName::List(std::move(elem));
    }
    return TypeName::Class(ExpectIdentifier("type name"));
  }

  bool LooksLikeDeclaration() const {
    const Token& t = Peek();
    if (t.kind != TokenKind::kIdent) return false;
    if (t.text == "int" || t.text == "bool" || t.text == "string") return true;
    if (t.text == "list") return Peek(1).Is("<");
    if (IsKeyword(t.text)) return false;
    const Token& n = Peek(1);
    return n.kind == TokenKind::kIdent && !IsKeyword(n.text);
  }

  // ---- statements ----
  Block ParseBlock() {
    DepthGuard guard(*this);
    const Token& start = Peek();
    Expect("{");
    Block block;
    block.meta = Meta(start);
    while (!Accept("}")) {
      if (Peek().kind == TokenKind::kEof) Fail("unterminated block");
      block.statements.push_back(ParseStatement());
    }
    return block;
  }

  Stmt ParseStatement() {
    DepthGuard guard(*this);
    CheckLexError();
    const Token& start = Peek();
    Stmt stmt;
    stmt.meta = Meta(start);
    if (AcceptWord("if")) {
      stmt.node = ParseIfRest();
      return stmt;
    }
    if (AcceptWord("while")) {
      Expect("(");
      Expr cond = ParseExpr();
      Expect(")");
      stmt.node = WhileStmt{std::move(cond), ParseBlock()};
      return stmt;
    }
    if (AcceptWord("return")) {
      ReturnStmt r;
      if (!Peek().Is(";")) r.value = ParseExpr();
      Expect(";");
      stmt.node = std::move(r);
      return stmt;
    }
    if (AcceptWord("throw")) {
      Expr value = ParseExpr();
      Expect(";");
      stmt.node = ThrowStmt{std::move(value)};
      return stmt;
    }
    if (AcceptWord("var")) {
      std::string name = ExpectIdentifier("variable name");
      Expect("=");
      Expr init = ParseExpr();
      Expect(";");
      stmt.node = VarDecl{std::nullopt, std::move(name), std::move(init)};
      return stmt;
    }
    if (LooksLikeDeclaration()) {
      TypeName type = ParseType();
      std::string name = ExpectIdentifier("variable name");
      if (!Accept("=")) Fail("local variable '" + name + "' needs an initializer");
      Expr init = ParseExpr();
      Expect(";");
      stmt.node = VarDecl{std::move(type), std::move(name), std::move(init)};
      return stmt;
    }
    Expr expr = ParseExpr();
    std::optional<AssignOp> op;
    if (Accept("=")) {
      op = AssignOp::kAssign;
    } else if (Accept("+=")) {
      op = AssignOp::kAddAssign;
    } else if (Accept("-=")) {
      op = AssignOp::kSubAssign;
    } else if (Accept("*=")) {
      op = AssignOp::kMulAssign;
    }
    if (op) {
      Expr value = ParseExpr();
      Expect(";");
      stmt.node = AssignStmt{*op, std::move(expr), std::move(value)};
      return stmt;
    }
    Expect(";");
    stmt.node = ExprStmt{std::move(expr)};
    return stmt;
  }

  IfStmt ParseIfRest() {
    Expect("(");
    Expr cond = ParseExpr();
    Expect(")");
    IfStmt s{std::move(cond), ParseBlock(), std::nullopt};
    if (AcceptWord("else")) {
      if (Peek().IsWord("if")) {
        DepthGuard guard(*this);
        const Token& at = Peek();
        Next();
        Block wrapper;
        wrapper.meta = Meta(at);
        Stmt nested;
        nested.meta = Meta(at);
        nested.node = ParseIfRest();
        wrapper.statements.push_back(std::move(nested));
        s.else_block = std::move(wrapper);
      } else {
        s.else_block = ParseBlock();
      }
    }
    return s;
  }

  // ---- expressions ----
  Expr MakeBinary(const Token& at, BinaryOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.meta = Meta(at);
    e.node = BinaryExpr{op, std::move(lhs), std::move(rhs)};
    return e;
  }

  Expr ParseExpr() {
    DepthGuard guard(*this);
    return ParseOr();
  }

  Expr ParseOr() {
    Expr lhs = ParseAnd();
    while (Peek().Is("||")) {
      const Token& at = Next();
      lhs = MakeBinary(at, BinaryOp::kOr, std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  Expr ParseAnd() {
    Expr lhs = ParseEquality();
    while (Peek().Is("&&")) {
      const Token& at = Next();
      lhs = MakeBinary(at, BinaryOp::kAnd, std::move(lhs), ParseEquality());
    }
    return lhs;
  }

  Expr ParseEquality() {
    Expr lhs = ParseRelational();
    while (Peek().Is("==") || Peek().Is("!=")) {
      const Token& at = Next();
      BinaryOp op = at.text == "==" ? BinaryOp::kEq : BinaryOp::kNe;
      lhs = MakeBinary(at, op, std::move(lhs), ParseRelational());
    }
    return lhs;
  }

  Expr ParseRelational() {
    Expr lhs = ParseAdditive();
    while (Peek().Is("<") || Peek().Is("<=") || Peek().Is(">") || Peek().Is(">=")) {
      const Token& at = Next();
      BinaryOp op = at.text == "<"    ? BinaryOp::kLt
                    : at.text == "<=" ? BinaryOp::kLe
                    : at.text == ">"  ? BinaryOp::kGt
                                      : BinaryOp::kGe;
      lhs = MakeBinary(at, op, std::move(lhs), ParseAdditive());
    }
    return lhs;
  }

  Expr ParseAdditive() {
    Expr lhs = ParseMultiplicative();
    while (Peek().Is("+") || Peek().Is("-")) {
      const Token& at = Next();
      BinaryOp op = at.text == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = MakeBinary(at, op, std::move(lhs), ParseMultiplicative());
    }
    return lhs;
  }

  Expr ParseMultiplicative() {
    Expr lhs = ParseUnary();
    while (Peek().Is("*") || Peek().Is("/") || Peek().Is("%")) {
      const Token& at = Next();
      BinaryOp op = at.text == "*"   ? BinaryOp::kMul
                    : at.text == "/" ? BinaryOp::kDiv
                                     : BinaryOp::kMod;
      lhs = MakeBinary(at, op, std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  Expr ParseUnary() {
    DepthGuard guard(*this);
    CheckLexError();
    const Token& at = Peek();
    if (Accept("!")) {
      Expr e;
      e.meta = Meta(at);
      e.node = UnaryExpr{UnaryOp::kNot, ParseUnary()};
      return e;
    }
    if (Accept("-")) {
      CheckLexError();
      if (Peek().kind == TokenKind::kInt) {
        // `-<digits>` is a single negative literal.
        const Token& digits = Next();
        Expr lit;
        lit.meta = Meta(at);
        lit.node = IntLiteral{ParseIntText(digits, /*negative=*/true)};
        return ParsePostfix(std::move(lit));
      }
      Expr e;
      e.meta = Meta(at);
      e.node = UnaryExpr{UnaryOp::kNeg, ParseUnary()};
      return e;
    }
    return ParsePostfix(ParsePrimary());
  }

  std::int64_t ParseIntText(const Token& tok, bool negative) {
    std::uint64_t magnitude = 0;
    auto [ptr, ec] =
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), magnitude);
    constexpr std::uint64_t kMaxPositive = std::numeric_limits<std::int64_t>::max();
    if (ec != std::errc() || magnitude > kMaxPositive + (negative ? 1 : 0)) {
      Fail("integer literal out of range", tok.line);
    }
    if (negative) return static_cast<std::int64_t>(0 - magnitude);
    return static_cast<std::int64_t>(magnitude);
  }

  std::vector<Expr> ParseArgs() {
    std::vector<Expr> args;
    if (Accept(")")) return args;
    do {
      args.push_back(ParseExpr());
    } while (Accept(","));
    Expect(")");
    return args;
  }

  Expr ParsePostfix(Expr base) {
    int chain = 0;
    while (true) {
      CheckLexError();
      const Token& at = Peek();
      if (Accept(".")) {
        if (++chain > kMaxNesting) Fail("expression chain too long");
        std::string member = ExpectIdentifier("member name");
        Expr e;
        e.meta = Meta(at);
        if (Accept("(")) {
          e.node = CallExpr{Box<Expr>(std::move(base)), std::move(member), ParseArgs()};
        } else {
          e.node = FieldAccess{std::move(base), std::move(member)};
        }
        base = std::move(e);
        continue;
      }
      if (Accept("[")) {
        if (++chain > kMaxNesting) Fail("expression chain too long");
        Expr index = ParseExpr();
        Expect("]");
        Expr e;
        e.meta = Meta(at);
        e.node = IndexExpr{std::move(base), std::move(index)};
        base = std::move(e);
        continue;
      }
      return base;
    }
  }

  Expr ParsePrimary() {
    CheckLexError();
    const Token& at = Peek();
    Expr e;
    e.meta = Meta(at);
    switch (at.kind) {
      case TokenKind::kInt: {
        const Token& digits = Next();
        e.node = IntLiteral{ParseIntText(digits, /*negative=*/false)};
        return e;
      }
      case TokenKind::kString:
        e.node = StringLiteral{Next().text};
        return e;
      case TokenKind::kIdent:
        break;
      case TokenKind::kPunct:
        if (Accept("(")) {
          Expr inner = ParseExpr();
          Expect(")");
          return inner;
        }
        if (Accept("[")) {
          ListLiteral list;
          if (!Accept("]")) {
            do {
              list.elements.push_back(ParseExpr());
            } while (Accept(","));
            Expect("]");
          }
          e.node = std::move(list);
          return e;
        }
        Fail("unexpected " + Describe(at));
      default:
        Fail("unexpected " + Describe(at));
    }
    if (AcceptWord("true")) {
      e.node = BoolLiteral{true};
    } else if (AcceptWord("false")) {
      e.node = BoolLiteral{false};
    } else if (AcceptWord("null")) {
      e.node = NullLiteral{};
    } else if (AcceptWord("this")) {
      e.node = ThisExpr{};
    } else if (AcceptWord("new")) {
      std::string cls = ExpectIdentifier("class name");
      Expect("(");
      Expect(")");
      e.node = NewExpr{std::move(cls)};
    } else {
      std::string name = ExpectIdentifier("expression");
      if (Accept("(")) {
        e.node = CallExpr{std::nullopt, std::move(name), ParseArgs()};
      } else {
        e.node = Identifier{std::move(name)};
      }
    }
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  NodeIdAllocator& ids_;
};

}  // namespace

ParseResult ParseSource(std::string_view path, std::string_view text, NodeIdAllocator& ids) {
  ParseResult result;
  Parser parser(Tokenize(text), ids);
  try {
    result.classes = parser.ParseFile();
  } catch (const SyntaxError& e) {
    result.classes.clear();
    result.diagnostics.push_back(
        Diagnostic{std::string(path), e.line, DiagCode::kParseError, e.message, {}});
  }
  return result;
}

std::optional<Expr> ParseExpression(std::string_view text, NodeIdAllocator& ids) {
  Parser parser(Tokenize(text), ids);
  try {
    return parser.ParseStandaloneExpression();
  } catch (const SyntaxError&) {
    return std::nullopt;
  }
}

}  // namespace mtcgen::minilang
