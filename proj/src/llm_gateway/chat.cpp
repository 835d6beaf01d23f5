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

#include "llm_gateway/chat.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdio>

#include "common/error.hpp"

namespace mtcgen::llm {
namespace {

std::string NextSessionId() {
  static std::atomic<std::uint64_t> counter{0};
  return "session-" + std::to_string(++counter);
}

Role ParseRole(const std::string& name) {
  if (name == "system") return Role::kSystem;
  if (name == "user") return Role::kUser;
  if (name == "assistant") return Role::kAssistant;
  throw Error(ErrorCode::kInvalidArgument, "unknown chat role: " + name);
}

ProviderKind ParseKind(const std::string& name) {
  if (name == "http-chat") return ProviderKind::kHttpChat;
  if (name == "replay") return ProviderKind::kReplay;
  if (name == "record") return ProviderKind::kRecord;
  throw Error(ErrorCode::kConfig, "unknown provider kind: " + name);
}

}  // namespace

const char* RoleName(Role role) {
  switch (role) {
    case Role::kSystem:
      return "system";
    case Role::kUser:
      return "user";
    case Role::kAssistant:
      return "assistant";
  }
  return "";
}

const char* ProviderKindName(ProviderKind kind) {
  switch (kind) {
    case ProviderKind::kHttpChat:
      return "http-chat";
    case ProviderKind::kReplay:
      return "replay";
    case ProviderKind::kRecord:
      return "record";
  }
  return "";
}

void ProviderConfig::Validate() const {
  if (!(temperature >= 0.0 && temperature <= 2.0)) {
    throw Error(ErrorCode::kConfig, "temperature must be within [0, 2]");
  }
  if (max_tokens <= 0) throw Error(ErrorCode::kConfig, "maxTokens must be positive");
  if (max_attempts < 1) throw Error(ErrorCode::kConfig, "maxAttempts must be at least 1");
  if ((kind == ProviderKind::kReplay || kind == ProviderKind::kRecord) && fixture_path.empty()) {
    throw Error(ErrorCode::kConfig,
                std::string(ProviderKindName(kind)) + " provider requires fixturePath");
  }
  if ((kind == ProviderKind::kHttpChat || kind == ProviderKind::kRecord) && endpoint.empty()) {
    throw Error(ErrorCode::kConfig,
                std::string(ProviderKindName(kind)) + " provider requires endpoint");
  }
}

ProviderConfig ProviderConfigFromJson(const nlohmann::json& json) {
  if (!json.is_object()) throw Error(ErrorCode::kConfig, "provider config must be an object");
  ProviderConfig c;
  try {
    if (json.contains("kind")) c.kind = ParseKind(json["kind"].get<std::string>());
    c.endpoint = json.value("endpoint", c.endpoint);
    c.model = json.value("model", c.model);
    c.temperature = json.value("temperature", c.temperature);
    c.max_tokens = json.value("maxTokens", c.max_tokens);
    c.api_key_env_var = json.value("apiKeyEnvVar", c.api_key_env_var);
    c.fixture_path = json.value("fixturePath", c.fixture_path);
    c.max_attempts = json.value("maxAttempts", c.max_attempts);
    c.initial_backoff =
        std::chrono::milliseconds(json.value("initialBackoffMs", c.initial_backoff.count()));
    c.request_timeout =
        std::chrono::seconds(json.value("requestTimeoutSec", c.request_timeout.count()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("bad provider config: ") + e.what());
  }
  c.Validate();
  return c;
}

nlohmann::json ProviderConfigToJson(const ProviderConfig& c) {
  return {{"kind", ProviderKindName(c.kind)},
          {"endpoint", c.endpoint},
          {"model", c.model},
          {"temperature", c.temperature},
          {"maxTokens", c.max_tokens},
          {"apiKeyEnvVar", c.api_key_env_var},
          {"fixturePath", c.fixture_path},
          {"maxAttempts", c.max_attempts},
          {"initialBackoffMs", c.initial_backoff.count()},
          {"requestTimeoutSec", c.request_timeout.count()}};
}

nlohmann::json MessagesToJson(const std::vector<Message>& messages) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : messages) out.push_back({{"role", RoleName(m.role)}, {"content", m.content}});
  return out;
}

std::vector<Message> MessagesFromJson(const nlohmann::json& json) {
  std::vector<Message> out;
  for (const auto& m : json) {
    out.push_back({ParseRole(m.at("role").get<std::string>()), m.at("content").get<std::string>()});
  }
  return out;
}

std::string CanonicalRequest(const ChatRequest& request) {
  char temperature[32];
  std::snprintf(temperature, sizeof(temperature), "%.6f", request.temperature);
  nlohmann::json j = {{"model", request.model},
                      {"temperature", temperature},
                      {"messages", MessagesToJson(request.messages)}};
  return j.dump();
}

std::string RequestDigest(const ChatRequest& request) {
  std::string text = CanonicalRequest(request);
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInternal, "SHA-256 digest failed");
  }
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[hash[i] >> 4]);
    out.push_back(kHex[hash[i] & 0xf]);
  }
  return out;
}

ChatSession::ChatSession(std::string system_message, const ProviderConfig& config)
    : id_(NextSessionId()),
      model_(config.model),
      temperature_(config.temperature),
      max_tokens_(config.max_tokens) {
  messages_.push_back({Role::kSystem, std::move(system_message)});
}

ChatRequest ChatSession::NextRequest(std::string_view user_message) const {
  ChatRequest request{model_, temperature_, max_tokens_, messages_};
  request.messages.push_back({Role::kUser, std::string(user_message)});
  return request;
}

ChatSession ChatSession::Fork() const {
  ChatSession copy = *this;
  copy.id_ = NextSessionId();
  return copy;
}

}  // namespace mtcgen::llm
