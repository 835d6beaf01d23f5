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

#ifndef MTCGEN_LLM_GATEWAY_PROVIDER_HPP_
#define MTCGEN_LLM_GATEWAY_PROVIDER_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "llm_gateway/chat.hpp"

namespace mtcgen::llm {

struct ProviderStats {
  int requests = 0;
  int replies = 0;
  int failures = 0;
  std::size_t prompt_chars = 0;
  std::size_t reply_chars = 0;
  // Digests served from a fixture, in request order.
  std::vector<std::string> hit_log;
  // Digests a replay fixture did not contain, in request order.
  std::vector<std::string> miss_log;
};

// Thread-safe; one provider may serve many sessions at once.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;

  // Throws Error(kProviderUnavailable) or Error(kFixtureMiss).
  std::string Complete(const ChatRequest& request);
  ProviderStats stats() const;

 protected:
  virtual std::string DoComplete(const ChatRequest& request, const std::string& digest) = 0;
  void RecordHit(const std::string& digest);
  void RecordMiss(const std::string& digest);

 private:
  mutable std::mutex mu_;
  ProviderStats stats_;
};

struct FixtureEntry {
  std::string digest;
  std::string model;
  std::string reply;
};

// JSON-lines fixture; later lines win on duplicate digests.
std::vector<FixtureEntry> ReadFixture(const std::filesystem::path& path);
std::string FixtureLine(const FixtureEntry& entry);

class ReplayProvider : public ChatProvider {
 public:
  explicit ReplayProvider(const std::filesystem::path& fixture);
  explicit ReplayProvider(const std::vector<FixtureEntry>& entries);

  std::size_t size() const { return replies_.size(); }

 protected:
  std::string DoComplete(const ChatRequest& request, const std::string& digest) override;

 private:
  std::map<std::string, std::string> replies_;
};

// Chat-completions over HTTP(S). The API key is read from the configured
// environment variable for every request and sent only as a bearer header.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(ProviderConfig config);

 protected:
  std::string DoComplete(const ChatRequest& request, const std::string& digest) override;

 private:
  ProviderConfig config_;
  std::string host_;
  std::string path_;
};

// Forwards to HTTP and appends each new (digest, reply) to the fixture file.
class RecordProvider : public ChatProvider {
 public:
  explicit RecordProvider(const ProviderConfig& config);

 protected:
  std::string DoComplete(const ChatRequest& request, const std::string& digest) override;

 private:
  HttpChatProvider upstream_;
  std::filesystem::path fixture_;
  std::mutex write_mu_;
  std::set<std::string> recorded_;
};

std::unique_ptr<ChatProvider> MakeProvider(const ProviderConfig& config);

// Sends `user_message` on `session`. On success the user message and the
// reply are appended; on failure the session is left unchanged.
std::string Send(ChatSession& session, ChatProvider& provider, std::string_view user_message);

}  // namespace mtcgen::llm

#endif  // MTCGEN_LLM_GATEWAY_PROVIDER_HPP_
