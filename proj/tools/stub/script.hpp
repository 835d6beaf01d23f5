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

#ifndef MTCGEN_TOOLS_STUB_SCRIPT_HPP_
#define MTCGEN_TOOLS_STUB_SCRIPT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "llm_gateway/chat.hpp"
#include "llm_gateway/provider.hpp"
#include "stub/stub_server.hpp"

namespace mtcgen::stub {

// A rule matches when every `all` substring occurs in some message and every
// `last` substring occurs in the last user message.
struct ScriptRule {
  std::vector<std::string> all;
  std::vector<std::string> last;
  std::string reply;
};

// Reads {"rules": [{"all": [...], "last": [...], "reply" | "replyFile": ...}]}.
// replyFile is relative to the script's directory.
std::vector<ScriptRule> ReadScript(const std::filesystem::path& path);

// First matching rule wins.
std::optional<std::string> MatchScript(const std::vector<ScriptRule>& rules,
                                       const llm::ChatRequest& request);

Responder ScriptResponder(std::vector<ScriptRule> rules);

// In-process provider over a responder; nullopt raises kFixtureMiss.
class ResponderProvider : public llm::ChatProvider {
 public:
  explicit ResponderProvider(Responder responder) : responder_(std::move(responder)) {}

 protected:
  std::string DoComplete(const llm::ChatRequest& request, const std::string& digest) override;

 private:
  Responder responder_;
};

}  // namespace mtcgen::stub

#endif  // MTCGEN_TOOLS_STUB_SCRIPT_HPP_
