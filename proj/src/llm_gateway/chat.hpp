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

#ifndef MTCGEN_LLM_GATEWAY_CHAT_HPP_
#define MTCGEN_LLM_GATEWAY_CHAT_HPP_

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mtcgen::llm {

enum class Role { kSystem, kUser, kAssistant };

const char* RoleName(Role role);

struct Message {
  Role role = Role::kUser;
  std::string content;

  bool operator==(const Message&) const = default;
};

enum class ProviderKind { kHttpChat, kReplay, kRecord };

const char* ProviderKindName(ProviderKind kind);

struct ProviderConfig {
  ProviderKind kind = ProviderKind::kReplay;
  std::string endpoint;  // e.g. http://127.0.0.1:8080/v1/chat/completions
  std::string model = "stub-model";
  double temperature = 0.2;
  int max_tokens = 2048;
  std::string api_key_env_var = "MTCGEN_API_KEY";
  std::string fixture_path;  // replay and record only
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{250};
  std::chrono::seconds request_timeout{120};

  // Throws Error(kConfig) when an invariant is violated.
  void Validate() const;
};

// Reads the keys kind, endpoint, model, temperature, maxTokens, apiKeyEnvVar,
// fixturePath, maxAttempts, initialBackoffMs, requestTimeoutSec; all optional.
ProviderConfig ProviderConfigFromJson(const nlohmann::json& json);
nlohmann::json ProviderConfigToJson(const ProviderConfig& config);

struct ChatRequest {
  std::string model;
  double temperature = 0.2;
  int max_tokens = 2048;
  std::vector<Message> messages;
};

// Canonical serialization of everything the reply may depend on.
std::string CanonicalRequest(const ChatRequest& request);
// Hex SHA-256 of CanonicalRequest.
std::string RequestDigest(const ChatRequest& request);

nlohmann::json MessagesToJson(const std::vector<Message>& messages);
std::vector<Message> MessagesFromJson(const nlohmann::json& json);

// Append-only conversation whose first message is the system message.
class ChatSession {
 public:
  ChatSession(std::string system_message, const ProviderConfig& config);

  const std::string& id() const { return id_; }
  const std::vector<Message>& messages() const { return messages_; }
  const std::string& model() const { return model_; }
  double temperature() const { return temperature_; }
  int max_tokens() const { return max_tokens_; }

  // The request that sending `user_message` next would issue.
  ChatRequest NextRequest(std::string_view user_message) const;
  void Append(Message message) { messages_.push_back(std::move(message)); }

  // Deep copy with a fresh id.
  ChatSession Fork() const;

 private:
  std::string id_;
  std::string model_;
  double temperature_;
  int max_tokens_;
  std::vector<Message> messages_;
};

}  // namespace mtcgen::llm

#endif  // MTCGEN_LLM_GATEWAY_CHAT_HPP_
