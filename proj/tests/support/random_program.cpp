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

#include "support/random_program.hpp"

#include <random>
#include <set>
#include <vector>

namespace mtcgen::testing {
namespace {

struct Sig {
  std::string name;
  std::vector<std::string> params;
  std::string ret;
};

const char* kTokens[] = {"encrypt", "decrypt", "text", "key", "get", "value", "size", "element"};
const char* kParamTypes[] = {"int", "string", "bool", "list<int>", "R"};
const char* kReturnTypes[] = {"void", "int", "string", "bool", "list<int>"};

std::string DefaultValue(const std::string& type) {
  if (type == "int") return "0";
  if (type == "string") return "\"s\"";
  if (type == "bool") return "true";
  if (type == "list<int>") return "[1]";
  return "new R()";
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::string Class() {
    int fields = Uniform(0, 6);
    std::string out = "class R {\n";
    for (int f = 0; f < fields; ++f) {
      out += std::string("    ") + (Chance(0.3) ? "static " : "") + "int f" + std::to_string(f) +
             ";\n";
    }
    std::vector<Sig> sigs;
    int methods = Uniform(1, 12);
    std::set<std::string> seen;
    while (static_cast<int>(sigs.size()) < methods) {
      Sig sig;
      if (!sigs.empty() && Chance(0.15)) {
        sig.name = sigs[Uniform(0, static_cast<int>(sigs.size()) - 1)].name;
      } else {
        sig.name = kTokens[Uniform(0, 7)];
        if (Chance(0.7)) {
          std::string second = kTokens[Uniform(0, 7)];
          second[0] = static_cast<char>(second[0] - 'a' + 'A');
          sig.name += second;
        }
      }
      int params = Uniform(0, 2);
      for (int p = 0; p < params; ++p) sig.params.push_back(kParamTypes[Uniform(0, 4)]);
      sig.ret = kReturnTypes[Uniform(0, 4)];
      std::string key = sig.name + "(";
      for (const auto& p : sig.params) key += p + ",";
      if (!seen.insert(key).second) continue;
      sigs.push_back(sig);
    }
    for (const auto& sig : sigs) {
      out += "\n    " + sig.ret + " " + sig.name + "(";
      for (std::size_t p = 0; p < sig.params.size(); ++p) {
        if (p > 0) out += ", ";
        out += sig.params[p] + " p" + std::to_string(p);
      }
      out += ") {\n";
      int statements = Uniform(0, 5);
      for (int s = 0; s < statements; ++s) out += "        " + Statement(fields, sigs) + "\n";
      if (sig.ret != "void") out += "        return " + DefaultValue(sig.ret) + ";\n";
      out += "    }\n";
    }
    return out + "}\n";
  }

 private:
  int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string Local() { return "v" + std::to_string(locals_++); }

  std::string Statement(int fields, const std::vector<Sig>& sigs) {
    int pick = Uniform(0, fields > 0 ? 7 : 3);
    switch (pick) {
      case 0:
      case 1: {
        const Sig& callee = sigs[Uniform(0, static_cast<int>(sigs.size()) - 1)];
        std::string call = callee.name + "(";
        for (std::size_t p = 0; p < callee.params.size(); ++p) {
          if (p > 0) call += ", ";
          call += DefaultValue(callee.params[p]);
        }
        return call + ");";
      }
      case 2:
        return "print(str(1));";
      case 3:
        return "int " + Local() + " = length(\"ab\");";
      case 4:
        return "int " + Local() + " = f" + std::to_string(Uniform(0, fields - 1)) + ";";
      case 5:
        return "f" + std::to_string(Uniform(0, fields - 1)) + " = 1;";
      case 6:
        return "f" + std::to_string(Uniform(0, fields - 1)) + " += 1;";
      default:
        return "this.f" + std::to_string(Uniform(0, fields - 1)) + " = 2;";
    }
  }

  std::mt19937_64 rng_;
  int locals_ = 0;
};

}  // namespace

std::string RandomCouplingClass(std::uint64_t seed) { return Generator(seed).Class(); }

}  // namespace mtcgen::testing
