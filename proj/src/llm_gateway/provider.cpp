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

#include "llm_gateway/provider.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include "common/error.hpp"
#include "common/files.hpp"
#include "httplib.h"

namespace mtcgen::llm {
namespace {

bool IsTransientStatus(int status) { return status == 408 || status == 429 || status >= 500; }

}  // namespace

std::string ChatProvider::Complete(const ChatRequest& request) {
  std::string digest = RequestDigest(request);
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.requests;
    for (const auto& m : request.messages) stats_.prompt_chars += m.content.size();
  }
  try {
    std::string reply = DoComplete(request, digest);
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.replies;
    stats_.reply_chars += reply.size();
    return reply;
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.failures;
    throw;
  }
}

ProviderStats ChatProvider::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

void ChatProvider::RecordHit(const std::string& digest) {
  std::lock_guard<std::mutex> lock(mu_);
  stats_.hit_log.push_back(digest);
}

void ChatProvider::RecordMiss(const std::string& digest) {
  std::lock_guard<std::mutex> lock(mu_);
  stats_.miss_log.push_back(digest);
}

std::vector<FixtureEntry> ReadFixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open fixture " + path.string());
  std::vector<FixtureEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      out.push_back({j.at("digest").get<std::string>(), j.value("model", ""),
                     j.at("reply").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kIo, path.string() + ":" + std::to_string(line_no) +
                                      ": bad fixture record: " + e.what());
    }
  }
  return out;
}

std::string FixtureLine(const FixtureEntry& entry) {
  nlohmann::ordered_json j;
  j["digest"] = entry.digest;
  j["model"] = entry.model;
  j["reply"] = entry.reply;
  return j.dump() + "\n";
}

ReplayProvider::ReplayProvider(const std::filesystem::path& fixture)
    : ReplayProvider(ReadFixture(fixture)) {}

ReplayProvider::ReplayProvider(const std::vector<FixtureEntry>& entries) {
  for (const auto& e : entries) replies_[e.digest] = e.reply;
}

std::string ReplayProvider::DoComplete(const ChatRequest&, const std::string& digest) {
  auto it = replies_.find(digest);
  if (it == replies_.end()) {
    RecordMiss(digest);
    throw Error(ErrorCode::kFixtureMiss, "no recorded reply for request " + digest);
  }
  RecordHit(digest);
  return it->second;
}

HttpChatProvider::HttpChatProvider(ProviderConfig config) : config_(std::move(config)) {
  const std::string& url = config_.endpoint;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kConfig, "endpoint must be an http(s) URL: " + url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  host_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

std::string HttpChatProvider::DoComplete(const ChatRequest& request, const std::string&) {
  nlohmann::json body = {{"model", request.model},
                         {"temperature", request.temperature},
                         {"max_tokens", request.max_tokens},
                         {"messages", MessagesToJson(request.messages)}};
  std::string payload = body.dump();
  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env_var.c_str()); key != nullptr && *key) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  std::string last_error;
  auto backoff = config_.initial_backoff;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    httplib::Client client(host_);
    client.set_connection_timeout(config_.request_timeout);
    client.set_read_timeout(config_.request_timeout);
    client.set_write_timeout(config_.request_timeout);
    auto res = client.Post(path_, headers, payload, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      if (IsTransientStatus(res->status)) continue;
      break;
    }
    try {
      auto j = nlohmann::json::parse(res->body);
      return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      last_error = std::string("malformed response: ") + e.what();
      break;
    }
  }
  throw Error(ErrorCode::kProviderUnavailable, config_.endpoint + ": " + last_error);
}

RecordProvider::RecordProvider(const ProviderConfig& config)
    : upstream_(config), fixture_(config.fixture_path) {
  if (std::filesystem::exists(fixture_)) {
    for (const auto& e : ReadFixture(fixture_)) recorded_.insert(e.digest);
  } else {
    WriteFile(fixture_, "");
  }
}

std::string RecordProvider::DoComplete(const ChatRequest& request, const std::string& digest) {
  std::string reply = upstream_.Complete(request);
  std::lock_guard<std::mutex> lock(write_mu_);
  if (recorded_.insert(digest).second) {
    std::ofstream out(fixture_, std::ios::app | std::ios::binary);
    out << FixtureLine({digest, request.model, reply});
    if (!out) throw Error(ErrorCode::kIo, "cannot append to fixture " + fixture_.string());
  }
  return reply;
}

std::unique_ptr<ChatProvider> MakeProvider(const ProviderConfig& config) {
  config.Validate();
  switch (config.kind) {
    case ProviderKind::kHttpChat:
      return std::make_unique<HttpChatProvider>(config);
    case ProviderKind::kReplay:
      return std::make_unique<ReplayProvider>(config.fixture_path);
    case ProviderKind::kRecord:
      return std::make_unique<RecordProvider>(config);
  }
  throw Error(ErrorCode::kConfig, "unknown provider kind");
}

std::string Send(ChatSession& session, ChatProvider& provider, std::string_view user_message) {
  std::string reply = provider.Complete(session.NextRequest(user_message));
  session.Append({Role::kUser, std::string(user_message)});
  session.Append({Role::kAssistant, reply});
  return reply;
}

}  // namespace mtcgen::llm
