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

#include "stub/stub_server.hpp"

#include <map>

#include "httplib.h"

namespace mtcgen::stub {

StubLlmServer::StubLlmServer(Responder responder, int fail_first)
    : responder_(std::move(responder)),
      server_(std::make_unique<httplib::Server>()),
      fail_first_(fail_first) {
  Install();
}

StubLlmServer::~StubLlmServer() { Stop(); }

void StubLlmServer::Install() {
  server_->Post("/v1/chat/completions", [this](const httplib::Request& req,
                                               httplib::Response& res) {
    int n = ++requests_;
    {
      std::lock_guard<std::mutex> lock(mu_);
      authorization_.push_back(req.get_header_value("Authorization"));
    }
    if (n <= fail_first_) {
      res.status = 503;
      res.set_content(R"({"error":"warming up"})", "application/json");
      return;
    }
    llm::ChatRequest request;
    try {
      auto body = nlohmann::json::parse(req.body);
      request.model = body.value("model", "");
      request.temperature = body.value("temperature", 0.0);
      request.max_tokens = body.value("max_tokens", 0);
      request.messages = llm::MessagesFromJson(body.at("messages"));
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
      return;
    }
    auto reply = responder_(request);
    if (!reply) {
      res.status = 404;
      res.set_content(R"({"error":"no reply for request"})", "application/json");
      return;
    }
    nlohmann::json out = {
        {"object", "chat.completion"},
        {"model", request.model},
        {"choices",
         {{{"index", 0},
           {"finish_reason", "stop"},
           {"message", {{"role", "assistant"}, {"content", *reply}}}}}}};
    res.set_content(out.dump(), "application/json");
  });
}

int StubLlmServer::Start(int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port("127.0.0.1");
  } else {
    port_ = server_->bind_to_port("127.0.0.1", port) ? port : -1;
  }
  if (port_ < 0) return port_;
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

bool StubLlmServer::Listen(const std::string& host, int port) {
  port_ = port;
  return server_->listen(host, port);
}

void StubLlmServer::Stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string StubLlmServer::endpoint() const {
  return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
}

std::vector<std::string> StubLlmServer::authorization_headers() const {
  std::lock_guard<std::mutex> lock(mu_);
  return authorization_;
}

Responder FixtureResponder(const std::vector<llm::FixtureEntry>& entries) {
  auto replies = std::make_shared<std::map<std::string, std::string>>();
  for (const auto& e : entries) (*replies)[e.digest] = e.reply;
  return [replies](const llm::ChatRequest& request) -> std::optional<std::string> {
    auto it = replies->find(llm::RequestDigest(request));
    if (it == replies->end()) return std::nullopt;
    return it->second;
  };
}

}  // namespace mtcgen::stub
