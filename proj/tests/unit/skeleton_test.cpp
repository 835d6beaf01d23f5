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

#include <random>
#include <regex>
#include <string>
#include <vector>

#include "code_model/corpus.hpp"
#include "common/error.hpp"
#include "minilang/parser.hpp"
#include "minilang/printer.hpp"
#include "skeleton/skeleton.hpp"
#include "support/pairs.hpp"
#include "support/random_skeleton.hpp"
#include "support/temp_dir.hpp"

namespace mtcgen::skeleton {
namespace {

using code_model::Corpus;
using code_model::LoadCorpus;
using testing::CorpusDir;
using testing::kDecrypt;
using testing::kEncrypt;
using testing::MustPair;
using testing::MustRef;

constexpr const char* kRoundTrip = R"(
        string plainText = "Hello AES!";
        SecretKey secKey = AESCodec.getSecretEncryptionKey();
        list<int> cipherText = AESCodec.encryptText(plainText, secKey);
        string decryptedText = AESCodec.decryptText(cipherText, secKey);
        assertEquals(plainText, decryptedText);)";

minilang::Expr ParseExpression(const std::string& text) {
  auto parsed = minilang::ParseTestSource(
      "E.mini", "class E {\n    @Test\n    void e() {\n        " + text + ";\n    }\n}\n");
  EXPECT_TRUE(parsed.diagnostics.empty()) << minilang::FormatDiagnostics(parsed.diagnostics);
  return parsed.classes.at(0).decl.methods.at(0).body.statements.at(0).As<minilang::ExprStmt>()->expr;
}

class AesSkeletonTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = LoadCorpus(CorpusDir("aes"));
    pair_ = MustPair(*corpus_.program, kEncrypt, kDecrypt);
  }

  minilang::CheckedTestClass Checked(const std::string& body) {
    auto parsed = minilang::ParseTestSource(
        "T.mini", "class T {\n    @Test\n    void t() {" + body + "\n    }\n}\n");
    EXPECT_TRUE(parsed.diagnostics.empty()) << minilang::FormatDiagnostics(parsed.diagnostics);
    auto checked = minilang::CheckTestClass(*corpus_.program, parsed.classes.at(0));
    EXPECT_TRUE(std::holds_alternative<minilang::CheckedTestClass>(checked))
        << minilang::FormatDiagnostics(std::get<minilang::DiagnosticList>(checked));
    return std::get<minilang::CheckedTestClass>(checked);
  }

  MrSkeleton Extract(const std::string& body) {
    return ExtractSkeleton(*corpus_.program, Checked(body), pair_);
  }

  ErrorCode ExtractError(const std::string& body) {
    try {
      Extract(body);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  }

  Corpus corpus_;
  coupling::CoupledPair pair_;
};

TEST_F(AesSkeletonTest, RoundTrip) {
  MrSkeleton s = Extract(kRoundTrip);
  ASSERT_EQ(s.method_pair.size(), 2u);
  EXPECT_EQ(s.method_pair[0].ToString(), kDecrypt);
  EXPECT_EQ(s.method_pair[1].ToString(), kEncrypt);
  EXPECT_TRUE(s.input_relation.empty());
  EXPECT_EQ(s.assertion_kind, AssertionKind::kEq);
  EXPECT_EQ(s.assertion_elements,
            (std::vector<Role>{Role::kSourceInput, Role::kFollowupOutput}));
  EXPECT_EQ(s.test_method, "t");
}

TEST_F(AesSkeletonTest, AssertTrueEqualityMatchesAssertEquals) {
  MrSkeleton a = Extract(kRoundTrip);
  MrSkeleton b = Extract(std::regex_replace(
      kRoundTrip, std::regex(R"(assertEquals\(plainText, decryptedText\))"),
      "assertTrue(plainText == decryptedText)"));
  MrSkeleton c = Extract(std::regex_replace(
      kRoundTrip, std::regex(R"(assertEquals\(plainText, decryptedText\))"),
      "assertTrue(equals(decryptedText, plainText))"));
  EXPECT_TRUE(Compare(a, b).l2);
  EXPECT_TRUE(Compare(a, c).l2);
}

TEST_F(AesSkeletonTest, NegatedAssertionDiffersOnlyInKind) {
  MrSkeleton a = Extract(kRoundTrip);
  MrSkeleton ne = Extract(std::regex_replace(
      kRoundTrip, std::regex(R"(assertEquals\(plainText, decryptedText\))"),
      "assertFalse(plainText == decryptedText)"));
  EXPECT_EQ(ne.assertion_kind, AssertionKind::kNe);
  SimilarityResult r = Compare(a, ne);
  EXPECT_TRUE(r.l1);
  EXPECT_FALSE(r.l2);
  EXPECT_EQ(r.mismatches, (std::vector<std::string>{"assertionKind"}));
}

TEST_F(AesSkeletonTest, LiteralAssertionNeverMatchesRoundTrip) {
  MrSkeleton literal = Extract(R"(
        SecretKey k = SecretKey.of(3);
        assertEquals("Hi", AESCodec.decryptText(AESCodec.encryptText("Hi", k), k));)");
  EXPECT_NE(std::find(literal.assertion_elements.begin(), literal.assertion_elements.end(),
                      Role::kConstant),
            literal.assertion_elements.end());
  SimilarityResult r = Compare(literal, Extract(kRoundTrip));
  EXPECT_TRUE(r.l1);
  EXPECT_FALSE(r.l2);
}

TEST_F(AesSkeletonTest, RenamingVariablesKeepsSkeleton) {
  std::string renamed = kRoundTrip;
  for (const auto& [from, to] : std::vector<std::pair<std::string, std::string>>{
           {"plainText", "x"}, {"secKey", "key1"}, {"cipherText", "y"}, {"decryptedText", "z"}}) {
    renamed = std::regex_replace(renamed, std::regex("\\b" + from + "\\b"), to);
  }
  EXPECT_EQ(SkeletonToJson(Extract(kRoundTrip)), SkeletonToJson(Extract(renamed)));
}

TEST_F(AesSkeletonTest, LastRelatingAssertionWins) {
  MrSkeleton s = Extract(std::string(kRoundTrip) + R"(
        assertTrue(length(cipherText) <= length(decryptedText));
        assertEquals(3, 3);)");
  EXPECT_EQ(s.assertion_kind, AssertionKind::kOrderLe);
  EXPECT_EQ(s.assertion_elements,
            (std::vector<Role>{Role::kFollowupInput, Role::kFollowupOutput}));
}

TEST_F(AesSkeletonTest, ExtraInvocationsAreIgnoredWithWarning) {
  MrSkeleton s = Extract(std::string(kRoundTrip) + R"(
        list<int> again = AESCodec.encryptText("x", secKey);)");
  EXPECT_EQ(s.warnings.size(), 1u);
  nlohmann::json expected = SkeletonToJson(Extract(kRoundTrip));
  expected["warnings"] = s.warnings;
  EXPECT_EQ(SkeletonToJson(s), expected);
}

TEST_F(AesSkeletonTest, NotExtractable) {
  EXPECT_EQ(ExtractError(R"(
        SecretKey k = SecretKey.of(3);
        int i = 0;
        while (i < 2) {
            list<int> c = AESCodec.encryptText("ab", k);
            assertEquals("ab", AESCodec.decryptText(c, k));
            i += 1;
        })"),
            ErrorCode::kNotExtractable);
  EXPECT_EQ(ExtractError(R"(
        list<int> c = AESCodec.encryptText("ab", SecretKey.of(3));
        assertEquals(2, length(c));)"),
            ErrorCode::kNotExtractable);
  EXPECT_EQ(ExtractError(R"(
        SecretKey k = SecretKey.of(3);
        list<int> c = AESCodec.encryptText("ab", k);
        string d = AESCodec.decryptText([1], k);
        assertTrue(true);)"),
            ErrorCode::kNotExtractable);
}

TEST_F(AesSkeletonTest, ReferenceFromCorpusTests) {
  const auto& file = corpus_.tests.at(0);
  MrSkeleton reference =
      ExtractReferenceSkeleton(*corpus_.program, file.classes.at(0), MustRef(kEncrypt));
  EXPECT_EQ(reference.test_method, "encryptThenDecryptReturnsPlainText");
  EXPECT_TRUE(Compare(Extract(kRoundTrip), reference).l2);
}

TEST(SkeletonInputRelationTest, HelperTransformationIsRecorded) {
  auto program = minilang::ParseProgram({{"src/Text.mini", R"(
class Text {
    static int weight(string text) {
        return length(text);
    }

    static int weightOf(string text) {
        return length(text);
    }

    static string reverse(string text) {
        list<int> out = [];
        int i = length(text) - 1;
        while (i >= 0) {
            append(out, charAt(text, i));
            i -= 1;
        }
        return fromChars(out);
    }
}
)"}});
  ASSERT_TRUE(program.ok());
  auto parsed = minilang::ParseTestSource("T.mini", R"(
class T {
    @Test
    void t() {
        string source = "abc";
        int sourceOut = Text.weight(source);
        string followUp = Text.reverse(source);
        int followOut = Text.weightOf(followUp);
        assertEquals(sourceOut, followOut);
    }
}
)");
  auto checked = std::get<minilang::CheckedTestClass>(
      minilang::CheckTestClass(*program.program, parsed.classes.at(0)));
  coupling::CoupledPair pair;
  pair.target = MustRef("Text.weight(string)");
  pair.candidate = MustRef("Text.weightOf(string)");
  MrSkeleton s = ExtractSkeleton(*program.program, checked, pair);
  EXPECT_EQ(s.input_relation, (std::vector<std::string>{"reverse"}));
  EXPECT_EQ(s.assertion_elements,
            (std::vector<Role>{Role::kSourceOutput, Role::kFollowupOutput}));
}

TEST(NormalizeTest, Table) {
  auto kind = [](const std::string& text) {
    return AssertionKindName(NormalizeAssertion(ParseExpression(text)).kind);
  };
  EXPECT_STREQ(kind("assertTrue(x == y)"), "EQ");
  EXPECT_STREQ(kind("assertFalse(x == y)"), "NE");
  EXPECT_STREQ(kind("assertEquals(x, y)"), "EQ");
  EXPECT_STREQ(kind("assertNotEquals(x, y)"), "NE");
  EXPECT_STREQ(kind("assertTrue(equals(x, y))"), "EQ");
  EXPECT_STREQ(kind("assertFalse(equals(x, y))"), "NE");
  EXPECT_STREQ(kind("assertTrue(x < y)"), "ORDER_LT");
  EXPECT_STREQ(kind("assertTrue(x <= y)"), "ORDER_LE");
  EXPECT_STREQ(kind("assertTrue(x > y)"), "ORDER_LT");
  EXPECT_STREQ(kind("assertFalse(x < y)"), "ORDER_LE");
  EXPECT_STREQ(kind("assertTrue(!(x == y))"), "NE");
  EXPECT_STREQ(kind("assertTrue(x.customizedEquals(y))"), "TRUE_PRED");
  EXPECT_STREQ(kind("assertFalse(flag)"), "FALSE_PRED");

  auto swapped = NormalizeAssertion(ParseExpression("assertTrue(a > b)"));
  EXPECT_EQ(minilang::PrintExpr(swapped.operands[0]), "b");
  auto pred = NormalizeAssertion(ParseExpression("assertTrue(x.customizedEquals(y))"));
  ASSERT_EQ(pred.operands.size(), 2u);
  EXPECT_EQ(minilang::PrintExpr(pred.operands[1]), "y");
}

TEST(NormalizeTest, NotAnAssertion) {
  try {
    NormalizeAssertion(ParseExpression("print(\"x\")"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnAssertion);
  }
}

TEST(NormalizeTest, Idempotent) {
  for (const char* text :
       {"assertTrue(x == y)", "assertFalse(x == y)", "assertEquals(x, y)", "assertTrue(x < y)",
        "assertFalse(x <= y)", "assertTrue(x >= y)", "assertTrue(!flag)", "assertFalse(p(x))",
        "assertTrue(a && b)", "assertTrue(x.customizedEquals(y))", "assertFalse(equals(a, b))"}) {
    NormalizedAssertion once = NormalizeAssertion(ParseExpression(text));
    minilang::Expr canonical = ToAssertionCall(once);
    EXPECT_EQ(NormalizeAssertion(canonical), once) << text;
    EXPECT_EQ(minilang::PrintExpr(ToAssertionCall(NormalizeAssertion(canonical))),
              minilang::PrintExpr(canonical))
        << text;
  }
}

TEST(CompareTest, RandomizedProperties) {
  std::mt19937_64 rng(2026);
  int l2_count = 0;
  for (int i = 0; i < 500; ++i) {
    MrSkeleton a = testing::RandomSkeleton(rng);
    MrSkeleton b = testing::RandomSkeleton(rng);
    if (rng() % 2 == 0) b = testing::NearSkeleton(a, b, rng);
    SimilarityResult ab = Compare(a, b);
    SimilarityResult ba = Compare(b, a);
    EXPECT_TRUE(!ab.l2 || ab.l1);
    EXPECT_EQ(ab.l1, ba.l1);
    EXPECT_EQ(ab.l2, ba.l2);
    EXPECT_EQ(ab.mismatches, ba.mismatches);
    EXPECT_EQ(ab.l2, ab.mismatches.empty());
    SimilarityResult aa = Compare(a, a);
    EXPECT_TRUE(aa.l1 && aa.l2);
    l2_count += ab.l2 ? 1 : 0;
    EXPECT_EQ(SkeletonToJson(SkeletonFromJson(SkeletonToJson(a))), SkeletonToJson(a));
  }
  EXPECT_GT(l2_count, 0);
}

TEST(CompareTest, DifferentPairFailsL1) {
  MrSkeleton a;
  a.method_pair = {MustRef("A.a()"), MustRef("A.b()")};
  a.assertion_elements = {Role::kSourceInput};
  MrSkeleton c = a;
  c.method_pair = {MustRef("A.a()"), MustRef("A.c()")};
  SimilarityResult r = Compare(a, c);
  EXPECT_FALSE(r.l1);
  EXPECT_FALSE(r.l2);
  EXPECT_EQ(r.mismatches, (std::vector<std::string>{"methodPair"}));
}

}  // namespace
}  // namespace mtcgen::skeleton
