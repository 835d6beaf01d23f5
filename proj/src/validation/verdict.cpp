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

#include "validation/verdict.hpp"

#include <cstdio>

namespace mtcgen::validation {
namespace {

using namespace minilang;

std::string Rate(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

std::size_t CountTests(const ClassDecl& cls) {
  std::size_t n = 0;
  for (const auto& m : cls.methods) n += m.IsTest() ? 1 : 0;
  return n;
}

std::string Violation(double p, const MutantRate& m) {
  std::string head = "mutant " + m.id + " (" + OperatorName(m.op) + "): ";
  if (p < m.p_prime) return head + "p=" + Rate(p) + " < p'=" + Rate(m.p_prime);
  return head + "p=p'=" + Rate(p) + " below 1.00";
}

}  // namespace

PassRate ComputePassRate(const Program& program, const TestClass& tests, const Limits& limits) {
  PassRate out;
  out.total = CountTests(tests.decl);
  TestCheckResult checked = CheckTestClass(program, tests);
  if (auto* diags = std::get_if<DiagnosticList>(&checked)) {
    out.note = "COMPILE_ERROR: " + FormatDiagnostics(*diags);
    return out;
  }
  out.outcomes = RunCheckedTestClass(program, std::get<CheckedTestClass>(checked), limits);
  for (const auto& [name, outcome] : out.outcomes) {
    if (outcome.kind == TestOutcome::Kind::kPass) ++out.passed;
  }
  if (out.total > 0) out.rate = static_cast<double>(out.passed) / static_cast<double>(out.total);
  return out;
}

const char* DecisionName(Decision decision) {
  switch (decision) {
    case Decision::kRetained:
      return "RETAINED";
    case Decision::kFiltered:
      return "FILTERED";
    case Decision::kRetainedNoMutants:
      return "RETAINED_NO_MUTANTS";
  }
  return "";
}

bool RetainAgainst(double p, double p_prime) {
  return p > p_prime || (p == 1.0 && p_prime == 1.0);
}

RuleOutcome ApplyRule(double p, const std::vector<double>& p_primes, Aggregation aggregation) {
  RuleOutcome out;
  if (p_primes.empty()) return out;
  std::size_t held = 0;
  for (std::size_t i = 0; i < p_primes.size(); ++i) {
    if (RetainAgainst(p, p_primes[i])) {
      ++held;
    } else if (!out.first_violation) {
      out.first_violation = i;
    }
  }
  bool retained = aggregation == Aggregation::kEveryMutant ? held == p_primes.size()
                                                           : 2 * held > p_primes.size();
  out.decision = retained ? Decision::kRetained : Decision::kFiltered;
  return out;
}

ValidationVerdict Validate(const std::string& candidate, const TestClass& tests,
                           const Program& program, const std::vector<Mutant>& mutants,
                           const Limits& limits, Aggregation aggregation) {
  ValidationVerdict out;
  out.candidate = candidate;
  out.p = ComputePassRate(program, tests, limits).rate;
  std::vector<double> p_primes;
  for (const auto& m : mutants) {
    double p_prime = ComputePassRate(*m.program, tests, limits).rate;
    out.per_mutant.push_back({m.id, m.op, p_prime});
    p_primes.push_back(p_prime);
  }
  RuleOutcome rule = ApplyRule(out.p, p_primes, aggregation);
  out.decision = rule.decision;
  if (mutants.empty()) {
    out.reason = "no mutants; retained conservatively";
  } else if (rule.decision == Decision::kFiltered) {
    out.reason = Violation(out.p, out.per_mutant[*rule.first_violation]);
  } else if (rule.first_violation) {
    out.reason = "majority of mutants satisfy p > p' or p = p' = 1; first exception " +
                 Violation(out.p, out.per_mutant[*rule.first_violation]);
  } else if (out.p == 1.0) {
    out.reason = "p > p' or p = p' = 1.00 for all " + std::to_string(mutants.size()) + " mutants";
  } else {
    out.reason = "p=" + Rate(out.p) + " > p' for all " + std::to_string(mutants.size()) +
                 " mutants";
  }
  return out;
}

nlohmann::json VerdictToJson(const ValidationVerdict& verdict) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& m : verdict.per_mutant) {
    per.push_back({{"id", m.id}, {"operator", OperatorName(m.op)}, {"pPrime", m.p_prime}});
  }
  return {{"candidate", verdict.candidate},
          {"p", verdict.p},
          {"perMutant", std::move(per)},
          {"decision", DecisionName(verdict.decision)},
          {"reason", verdict.reason}};
}

}  // namespace mtcgen::validation
