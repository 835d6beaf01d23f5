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

#include "code_model/corpus.hpp"
#include "code_model/facts.hpp"
#include "code_model/tokenizer.hpp"
#include "common/error.hpp"
#include "common/files.hpp"
#include "minilang/interpreter.hpp"
#include "minilang/printer.hpp"
#include "support/temp_dir.hpp"

namespace mtcgen::code_model {
namespace {

using minilang::MethodRef;
using minilang::ParseMethodRef;
using minilang::TypeName;
using testing::CorpusDir;
using testing::TempDir;

MethodRef Ref(const std::string& text) {
  auto ref = ParseMethodRef(text);
  EXPECT_TRUE(ref.has_value()) << text;
  return *ref;
}

TEST(TokenizerTest, SplitsCamelCaseUnderscoresAndDigits) {
  EXPECT_EQ(NameTokens("encryptText"), (std::set<std::string>{"encrypt", "text"}));
  EXPECT_EQ(NameTokens("decryptText"), (std::set<std::string>{"decrypt", "text"}));
  EXPECT_EQ(NameTokens("getSecretEncryptionKey"),
            (std::set<std::string>{"secret", "encryption", "key"}));
  EXPECT_EQ(NameTokens("base642bytes"), (std::set<std::string>{"base", "bytes"}));
  EXPECT_EQ(NameTokens("parseHTTPResponse_v2"),
            (std::set<std::string>{"parse", "http", "response"}));
  EXPECT_EQ(NameTokens("isEmpty"), (std::set<std::string>{"empty"}));
}

TEST(TokenizerTest, NeverEmptyForNamedMethods) {
  EXPECT_EQ(NameTokens("get"), (std::set<std::string>{"get"}));
  EXPECT_EQ(NameTokens("f"), (std::set<std::string>{"f"}));
  EXPECT_EQ(NameTokens("toA"), (std::set<std::string>{"toa"}));
}

TEST(TokenizerTest, LowercaseTokenIsIdempotent) {
  for (const char* t : {"text", "cipher", "element", "bytes"}) {
    EXPECT_EQ(NameTokens(t), (std::set<std::string>{t}));
  }
}

TEST(TokenizerTest, CustomStoplist) {
  EXPECT_EQ(NameTokens("encryptText", {"text"}), (std::set<std::string>{"encrypt"}));
  EXPECT_EQ(NameTokens("getValue", {"value"}), (std::set<std::string>{"get"}));
}

TEST(FactsTest, EncryptTextSignature) {
  Corpus corpus = LoadCorpus(CorpusDir("aes"));
  MethodFacts facts =
      ExtractFacts(*corpus.program, Ref("AESCodec.encryptText(string,SecretKey)"));
  EXPECT_EQ(facts.name_tokens, (std::set<std::string>{"encrypt", "text"}));
  EXPECT_EQ(facts.para_ret_types,
            (std::set<TypeName>{TypeName::String(), TypeName::Class("SecretKey"),
                                TypeName::List(TypeName::Int())}));
  EXPECT_EQ(facts.calls, (std::set<MethodRef>{Ref("Cipher.getInstance(string)"),
                                              Ref("Cipher.init(int,SecretKey)"),
                                              Ref("Cipher.doFinal(string)")}));
  EXPECT_EQ(facts.read_fields, (std::set<FieldRef>{{"Cipher", "ENCRYPT_MODE"}}));
  EXPECT_TRUE(facts.write_fields.empty());
}

TEST(FactsTest, EmptyBodyHasNoFacts) {
  auto result = minilang::ParseProgram({{"src/E.mini", "class E { void noop() { } }"}});
  ASSERT_TRUE(result.ok());
  MethodFacts facts = ExtractFacts(*result.program, Ref("E.noop()"));
  EXPECT_TRUE(facts.calls.empty());
  EXPECT_TRUE(facts.read_fields.empty());
  EXPECT_TRUE(facts.write_fields.empty());
  EXPECT_TRUE(facts.para_ret_types.empty());
  EXPECT_EQ(facts.name_tokens, (std::set<std::string>{"noop"}));
}

TEST(FactsTest, BoxInsertWritesWhatGetReads) {
  Corpus corpus = LoadCorpus(CorpusDir("box"));
  MethodFacts insert = ExtractFacts(*corpus.program, Ref("Box.insertElement(int)"));
  MethodFacts get = ExtractFacts(*corpus.program, Ref("Box.getElements()"));
  std::set<FieldRef> shared;
  for (const auto& f : insert.write_fields) {
    if (get.read_fields.count(f)) shared.insert(f);
  }
  EXPECT_EQ(shared, (std::set<FieldRef>{{"Box", "element"}}));
  EXPECT_TRUE(get.write_fields.empty());
}

TEST(FactsTest, WritesAndReadsByPosition) {
  auto result = minilang::ParseProgram({{"src/S.mini", R"(
class S {
    int a;
    int b;
    list<int> xs = [];
    static int k = 0;

    void touch(S other) {
        a = 1;
        b += 2;
        other.a = a;
        xs[0] = k;
        S.k = length(xs);
        print(str(b));
        S fresh = new S();
        missing(1);
    }
}
)"}});
  // `missing` does not resolve, so the checker rejects the program.
  ASSERT_FALSE(result.ok());
  auto ok = minilang::ParseProgram({{"src/S.mini", R"(
class S {
    int a;
    int b;
    list<int> xs = [];
    static int k = 0;

    void touch(S other) {
        a = 1;
        b += 2;
        other.a = a;
        xs[0] = k;
        S.k = length(xs);
        print(str(b));
        S fresh = new S();
    }
}
)"}});
  ASSERT_TRUE(ok.ok()) << minilang::FormatDiagnostics(ok.diagnostics);
  MethodFacts facts = ExtractFacts(*ok.program, Ref("S.touch(S)"));
  EXPECT_EQ(facts.write_fields,
            (std::set<FieldRef>{{"S", "a"}, {"S", "b"}, {"S", "xs"}, {"S", "k"}}));
  EXPECT_EQ(facts.read_fields,
            (std::set<FieldRef>{{"S", "a"}, {"S", "b"}, {"S", "xs"}, {"S", "k"}}));
  EXPECT_EQ(facts.calls, (std::set<MethodRef>{MethodRef{"builtin", "length", {}},
                                              MethodRef{"builtin", "print", {}},
                                              MethodRef{"builtin", "str", {}},
                                              MethodRef{"S", "<init>", {}}}));
}

TEST(FactsTest, UnknownMethodThrows) {
  Corpus corpus = LoadCorpus(CorpusDir("box"));
  try {
    ExtractFacts(*corpus.program, Ref("Box.nothing()"));
    FAIL() << "expected UNKNOWN_METHOD";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownMethod);
  }
}

TEST(FactsTest, StableUnderPrettyPrintRoundTrip) {
  for (const char* name : {"aes", "aes-wrongkey", "box", "base64", "isolated"}) {
    Corpus corpus = LoadCorpus(CorpusDir(name));
    auto reparsed =
        minilang::ParseProgram({{"src/All.mini", minilang::PrettyPrint(*corpus.program)}});
    ASSERT_TRUE(reparsed.ok()) << name;
    for (const auto& cls : corpus.program->classes()) {
      EXPECT_EQ(ExtractClassFacts(*corpus.program, cls.name),
                ExtractClassFacts(*reparsed.program, cls.name))
          << name << " " << cls.name;
    }
  }
}

TEST(FactsTest, JsonShape) {
  Corpus corpus = LoadCorpus(CorpusDir("box"));
  auto json = FactsToJson(ExtractFacts(*corpus.program, Ref("Box.insertElement(int)")));
  EXPECT_EQ(json["method"], "Box.insertElement(int)");
  EXPECT_EQ(json["nameTokens"], nlohmann::json({"element", "insert"}));
  EXPECT_EQ(json["writeFields"], nlohmann::json({"Box.element"}));
  EXPECT_EQ(json["paraRetTypes"], nlohmann::json({"int"}));
}

TEST(CorpusTest, MissingDirectoryIsCorpusError) {
  try {
    LoadCorpus(CorpusDir("does-not-exist"));
    FAIL() << "expected CORPUS error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorpus);
  }
}

TEST(CorpusTest, LoadsAesWithTests) {
  Corpus corpus = LoadCorpus(CorpusDir("aes"));
  EXPECT_EQ(corpus.sources.size(), 3u);
  ASSERT_EQ(corpus.tests.size(), 1u);
  EXPECT_EQ(corpus.tests[0].path, "test/AESCodecTest.mini");
  EXPECT_TRUE(corpus.tests[0].diagnostics.empty())
      << minilang::FormatDiagnostics(corpus.tests[0].diagnostics);
  for (const auto& cls : corpus.tests[0].classes) {
    auto outcomes = minilang::RunCheckedTestClass(*corpus.program, cls, {});
    for (const auto& [name, outcome] : outcomes) {
      EXPECT_EQ(outcome.kind, minilang::TestOutcome::Kind::kPass) << name << outcome.message;
    }
  }
}

std::string EncryptCallingTest(int i) {
  return "class EncTest" + std::to_string(i) +
         " {\n    @Test\n    void t() {\n        list<int> c = AESCodec.encryptText(\"x\", "
         "AESCodec.defaultKey);\n        assertEquals(1, length(c));\n    }\n}\n";
}

void CopySources(const std::string& from, const TempDir& to) {
  for (const auto& f : ListFiles(CorpusDir(from) / "src", ".mini")) {
    WriteFile(to / ("src/" + f.filename().string()), ReadFile(f));
  }
}

TEST(InvocationExamplesTest, FirstThreePerMember) {
  TempDir dir;
  CopySources("aes", dir);
  for (int i = 0; i < 5; ++i) {
    WriteFile(dir / ("test/Enc" + std::to_string(i) + ".mini"), EncryptCallingTest(i));
  }
  Corpus corpus = LoadCorpus(dir.path());
  auto examples =
      RetrieveInvocationExamples(corpus, Ref("AESCodec.encryptText(string,SecretKey)"),
                                 Ref("AESCodec.decryptText(list<int>,SecretKey)"));
  ASSERT_EQ(examples.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(examples[i].origin_path, "test/Enc" + std::to_string(i) + ".mini");
    EXPECT_EQ(examples[i].invoked.name, "encryptText");
    EXPECT_NE(examples[i].test_method_source.find("encryptText("), std::string::npos);
  }
  auto again =
      RetrieveInvocationExamples(corpus, Ref("AESCodec.encryptText(string,SecretKey)"),
                                 Ref("AESCodec.decryptText(list<int>,SecretKey)"));
  ASSERT_EQ(again.size(), examples.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    EXPECT_EQ(again[i].test_method_source, examples[i].test_method_source);
  }
}

TEST(InvocationExamplesTest, ExclusionByPath) {
  TempDir dir;
  CopySources("aes", dir);
  for (int i = 0; i < 4; ++i) {
    WriteFile(dir / ("test/Enc" + std::to_string(i) + ".mini"), EncryptCallingTest(i));
  }
  Corpus corpus = LoadCorpus(dir.path());
  auto examples = RetrieveInvocationExamples(
      corpus, Ref("AESCodec.encryptText(string,SecretKey)"),
      Ref("AESCodec.decryptText(list<int>,SecretKey)"), 3, {"test/Enc0.mini"});
  ASSERT_EQ(examples.size(), 3u);
  EXPECT_EQ(examples[0].origin_path, "test/Enc1.mini");
}

TEST(InvocationExamplesTest, NoTestDirectory) {
  Corpus corpus = LoadCorpus(CorpusDir("base64"));
  EXPECT_TRUE(corpus.tests.empty());
  EXPECT_TRUE(RetrieveInvocationExamples(corpus, Ref("Base64.base642bytes(string)"),
                                         Ref("Base64.base642bytes(string,string)"))
                  .empty());
}

TEST(InvocationExamplesTest, OnePerMember) {
  TempDir dir;
  CopySources("box", dir);
  WriteFile(dir / "test/A.mini",
            "class A {\n    @Test\n    void ins() {\n        Box b = new Box();\n"
            "        b.insertElement(1);\n    }\n}\n");
  WriteFile(dir / "test/B.mini",
            "class B {\n    @Test\n    void get() {\n        Box b = new Box();\n"
            "        assertEquals(0, length(b.getElements()));\n    }\n}\n");
  Corpus corpus = LoadCorpus(dir.path());
  auto examples = RetrieveInvocationExamples(corpus, Ref("Box.insertElement(int)"),
                                             Ref("Box.getElements()"));
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_EQ(examples[0].invoked.name, "insertElement");
  EXPECT_EQ(examples[1].invoked.name, "getElements");
}

}  // namespace
}  // namespace mtcgen::code_model
