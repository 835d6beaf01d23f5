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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "minilang/interpreter.hpp"
#include "minilang/parser.hpp"
#include "minilang/printer.hpp"
#include "minilang/program.hpp"
#include "support/random_ast.hpp"

namespace mtcgen::minilang {
namespace {

ProgramPtr MustParse(const std::string& text) {
  ProgramResult result = ParseProgram({SourceFile{"src/A.mini", text}});
  EXPECT_TRUE(result.ok()) << FormatDiagnostics(result.diagnostics);
  return result.program;
}

DiagnosticList MustFail(const std::string& text) {
  ProgramResult result = ParseProgram({SourceFile{"src/A.mini", text}});
  EXPECT_FALSE(result.ok());
  return result.diagnostics;
}

TestOutcomes RunTests(const Program& program, const std::string& test_text,
                 const Limits& limits = {}) {
  TestParseResult parsed = ParseTestSource("test/T.mini", test_text);
  EXPECT_TRUE(parsed.diagnostics.empty()) << FormatDiagnostics(parsed.diagnostics);
  EXPECT_EQ(parsed.classes.size(), 1u);
  return RunTestClass(program, parsed.classes.front(), limits);
}

TEST(ParseTest, EmptyClass) {
  auto program = MustParse("class A { }");
  ASSERT_EQ(program->classes().size(), 1u);
  EXPECT_EQ(program->classes()[0].name, "A");
  EXPECT_EQ(PrettyPrint(*program), "class A {\n}\n");
}

TEST(ParseTest, UnresolvedCallNamesSymbol) {
  auto diags = MustFail("class A { int f() { return g(); } }");
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, DiagCode::kUnresolvedSymbol);
  EXPECT_EQ(diags[0].symbol, "g");
  EXPECT_EQ(diags[0].ToString().rfind("src/A.mini:1: UNRESOLVED_SYMBOL: ", 0), 0u);
}

TEST(ParseTest, SyntaxErrorIsParseError) {
  auto diags = MustFail("class A { int f( { } }");
  ASSERT_FALSE(diags.empty());
  EXPECT_EQ(diags[0].code, DiagCode::kParseError);
}

TEST(ParseTest, DuplicateDeclarations) {
  EXPECT_TRUE(HasCode(MustFail("class A { }\nclass A { }"), DiagCode::kDuplicateDecl));
  EXPECT_TRUE(HasCode(MustFail("class A { int x; bool x; }"), DiagCode::kDuplicateDecl));
  EXPECT_TRUE(HasCode(MustFail("class A { void f(int a) { } void f(int b) { } }"),
                      DiagCode::kDuplicateDecl));
  EXPECT_TRUE(HasCode(MustFail("class A { void f(int a, int a) { } }"), DiagCode::kDuplicateDecl));
}

TEST(ParseTest, OverloadsAreAllowed) {
  auto program = MustParse(
      "class B { static int f(string s) { return 1; } static int f(string s, string t) { "
      "return 2; } }");
  EXPECT_EQ(program->ResolveName("B", "f").size(), 2u);
}

TEST(ParseTest, TypeMismatches) {
  EXPECT_TRUE(HasCode(MustFail("class A { int f() { return true; } }"), DiagCode::kTypeMismatch));
  EXPECT_TRUE(HasCode(MustFail("class A { void f() { if (1) { } } }"), DiagCode::kTypeMismatch));
  EXPECT_TRUE(
      HasCode(MustFail("class A { void f() { int x = \"s\"; } }"), DiagCode::kTypeMismatch));
  EXPECT_TRUE(HasCode(MustFail("class A { int x; static int f() { return x; } }"),
                      DiagCode::kTypeMismatch));
  EXPECT_TRUE(HasCode(MustFail("class A { void f() { var x = null; } }"), DiagCode::kTypeMismatch));
}

TEST(ParseTest, UnknownTypeIsUnresolved) {
  auto diags = MustFail("class A { Missing f() { return null; } }");
  ASSERT_FALSE(diags.empty());
  EXPECT_EQ(diags[0].code, DiagCode::kUnresolvedSymbol);
  EXPECT_EQ(diags[0].symbol, "Missing");
}

TEST(MethodRefTest, ParsesAndPrints) {
  auto ref = ParseMethodRef("AESCodec.encryptText(string, SecretKey)");
  ASSERT_TRUE(ref.has_value());
  EXPECT_EQ(ref->ToString(), "AESCodec.encryptText(string,SecretKey)");
  auto nested = ParseMethodRef("A.f(list<list<int>>,int)");
  ASSERT_TRUE(nested.has_value());
  EXPECT_EQ(nested->params.size(), 2u);
  EXPECT_EQ(nested->params[0].ToString(), "list<list<int>>");
  EXPECT_FALSE(ParseMethodRef("noDot").has_value());
  EXPECT_FALSE(ParseMethodRef("A.f(int").has_value());
}

TEST(PrinterTest, CanonicalLayout) {
  auto program = MustParse(
      "class A { static int k = 3; int add(int a, int b) { if (a > b) { return a + b * 2; } "
      "else if (a == b) { return 0; } else { return -a; } } }");
  EXPECT_EQ(PrettyPrint(*program),
            "class A {\n"
            "    static int k = 3;\n"
            "\n"
            "    int add(int a, int b) {\n"
            "        if (a > b) {\n"
            "            return a + (b * 2);\n"
            "        } else if (a == b) {\n"
            "            return 0;\n"
            "        } else {\n"
            "            return -a;\n"
            "        }\n"
            "    }\n"
            "}\n");
}

TEST(PrinterTest, RoundTripRandomAsts) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::vector<ClassDecl> classes = testing::RandomClasses(seed);
    std::string text = PrintClasses(classes);
    NodeIdAllocator ids;
    ParseResult reparsed = ParseSource("gen.mini", text, ids);
    ASSERT_TRUE(reparsed.ok()) << "seed " << seed << "\n"
                               << FormatDiagnostics(reparsed.diagnostics) << text;
    ASSERT_EQ(reparsed.classes, classes) << "seed " << seed << "\n" << text;
    EXPECT_EQ(PrintClasses(reparsed.classes), text);
  }
}

constexpr const char* kCounter = R"(
class Counter {
    static int created = 0;
    int value;

    static Counter make() {
        created += 1;
        return new Counter();
    }

    void add(int n) {
        value = value + n;
    }
}
)";

TEST(InterpreterTest, OutcomeKinds) {
  auto program = MustParse(kCounter);
  auto outcomes = RunTests(*program, R"(
class T {
    @Test
    void passes() {
        Counter c = Counter.make();
        c.add(3);
        assertEquals(3, c.value);
    }

    @Test
    void fails() {
        assertEquals("a", "b");
    }

    @Test
    void divides() {
        int z = 0;
        print(str(1 / z));
    }

    @Test
    void nullField() {
        Counter c = null;
        c.add(1);
    }

    @Test
    void outOfBounds() {
        list<int> xs = [1, 2];
        assertEquals(0, xs[2]);
    }

    @Test
    void throws() {
        throw "illegal input";
    }

    @Test
    void spins() {
        while (true) {
        }
    }

    @Test
    void recurses() {
        recurses();
    }
}
)");
  EXPECT_EQ(outcomes.at("passes").kind, TestOutcome::Kind::kPass);
  EXPECT_EQ(outcomes.at("fails").kind, TestOutcome::Kind::kAssertFail);
  EXPECT_TRUE(outcomes.at("fails").failed_assertion.has_value());
  EXPECT_EQ(outcomes.at("divides").kind, TestOutcome::Kind::kRuntimeError);
  EXPECT_EQ(outcomes.at("nullField").kind, TestOutcome::Kind::kRuntimeError);
  EXPECT_EQ(outcomes.at("outOfBounds").kind, TestOutcome::Kind::kRuntimeError);
  EXPECT_EQ(outcomes.at("throws").kind, TestOutcome::Kind::kRuntimeError);
  EXPECT_EQ(outcomes.at("spins").kind, TestOutcome::Kind::kTimeout);
  EXPECT_EQ(outcomes.at("recurses").kind, TestOutcome::Kind::kRuntimeError);
}

TEST(InterpreterTest, CompileErrorIsClassLevel) {
  auto program = MustParse(kCounter);
  auto outcomes = RunTests(*program, R"(
class Broken {
    @Test
    void a() {
        Counter.missing();
    }

    @Test
    void b() {
    }
}
)");
  ASSERT_EQ(outcomes.size(), 1u);
  EXPECT_EQ(outcomes.at("Broken").kind, TestOutcome::Kind::kCompileError);
  EXPECT_NE(outcomes.at("Broken").message.find("UNRESOLVED_SYMBOL"), std::string::npos);
}

TEST(InterpreterTest, TestsAreIsolated) {
  auto program = MustParse(kCounter);
  const char* first = R"(
class T {
    @Test
    void one() {
        Counter.make();
        assertEquals(1, Counter.created);
    }

    @Test
    void two() {
        Counter.make();
        assertEquals(1, Counter.created);
    }
}
)";
  const char* reordered = R"(
class T {
    @Test
    void two() {
        Counter.make();
        assertEquals(1, Counter.created);
    }

    @Test
    void one() {
        Counter.make();
        assertEquals(1, Counter.created);
    }
}
)";
  auto a = RunTests(*program, first);
  auto b = RunTests(*program, reordered);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.at("one").kind, TestOutcome::Kind::kPass);
  EXPECT_EQ(a.at("two").kind, TestOutcome::Kind::kPass);
}

TEST(InterpreterTest, ValueSemantics) {
  auto program = MustParse("class A { }");
  auto outcomes = RunTests(*program, R"(
class T {
    @Test
    void values() {
        list<int> a = [1, 2, 3];
        list<int> b = [1, 2];
        append(b, 3);
        assertEquals(a, b);
        assertTrue(a == b);
        string s = "ab" + 1 + true;
        assertEquals("ab1true", s);
        assertEquals(98, charAt(s, 1));
        assertEquals("b1", substring(s, 1, 3));
        assertEquals("hi", fromChars([104, 105]));
        assertEquals(-1, indexOf(s, 122));
        assertEquals(-7, -7 % 10);
        assertEquals(-3, -7 / 2);
        A x = new A();
        A y = new A();
        assertTrue(x != y);
        assertTrue(equals(x, x));
        string n = null;
        n += "z";
        assertEquals("nullz", n);
        list<int> c = a + [4];
        assertEquals(4, length(c));
        assertEquals(3, length(a));
        c[0] -= 5;
        assertEquals(-4, c[0]);
    }
}
)");
  EXPECT_EQ(outcomes.at("values").kind, TestOutcome::Kind::kPass) << outcomes.at("values").message;
}

TEST(InterpreterTest, Deterministic) {
  auto program = MustParse(kCounter);
  const char* tests = R"(
class T {
    @Test
    void a() {
        Counter c = Counter.make();
        int i = 0;
        while (i < 100) {
            c.add(i);
            i += 1;
        }
        assertEquals(4950, c.value);
    }
}
)";
  EXPECT_EQ(RunTests(*program, tests), RunTests(*program, tests));
}

}  // namespace
}  // namespace mtcgen::minilang
