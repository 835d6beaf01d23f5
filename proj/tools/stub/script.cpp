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

#include "stub/script.hpp"

#include "common/error.hpp"
#include "common/files.hpp"
#include "json.hpp"

namespace mtcgen::stub {
namespace {

std::vector<std::string> Strings(const nlohmann::json& rule, const char* key) {
  if (!rule.contains(key)) return {};
  return rule.at(key).get<std::vector<std::string>>();
}

bool Contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

std::vector<ScriptRule> ReadScript(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
  std::vector<ScriptRule> rules;
  try {
    for (const auto& r : doc.at("rules")) {
      ScriptRule rule{Strings(r, "all"), Strings(r, "last"), ""};
      if (r.contains("replyFile")) {
        rule.reply = ReadFile(path.parent_path() / r.at("replyFile").get<std::string>());
      } else {
        rule.reply = r.at("reply").get<std::string>();
      }
      rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
  return rules;
}

std::optional<std::string> MatchScript(const std::vector<ScriptRule>& rules,
                                       const llm::ChatRequest& request) {
  const llm::Message* last_user = nullptr;
  for (const auto& m : request.messages) {
    if (m.role == llm::Role::kUser) last_user = &m;
  }
  for (const auto& rule : rules) {
    bool ok = true;
    for (const auto& needle : rule.all) {
      bool found = false;
      for (const auto& m : request.messages) found = found || Contains(m.content, needle);
      ok = ok && found;
    }
    for (const auto& needle : rule.last) {
      ok = ok && last_user != nullptr && Contains(last_user->content, needle);
    }
    if (ok) return rule.reply;
  }
  return std::nullopt;
}

Responder ScriptResponder(std::vector<ScriptRule> rules) {
  return [rules = std::move(rules)](const llm::ChatRequest& request) {
    return MatchScript(rules, request);
  };
}

std::string ResponderProvider::DoComplete(const llm::ChatRequest& request,
                                          const std::string& digest) {
  auto reply = responder_(request);
  if (!reply) {
    RecordMiss(digest);
    throw Error(ErrorCode::kFixtureMiss, "no scripted reply for request " + digest);
  }
  RecordHit(digest);
  return *reply;
}

}  // namespace mtcgen::stub
