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

#ifndef MTCGEN_TOOLS_STUB_STUB_SERVER_HPP_
#define MTCGEN_TOOLS_STUB_STUB_SERVER_HPP_

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "llm_gateway/chat.hpp"
#include "llm_gateway/provider.hpp"

namespace httplib {
class Server;
}

namespace mtcgen::stub {

// Returns the reply for a request, or nullopt to answer 404.
using Responder = std::function<std::optional<std::string>(const llm::ChatRequest&)>;

// Minimal chat-completions server for local testing. Serves POST
// /v1/chat/completions on 127.0.0.1.
class StubLlmServer {
 public:
  explicit StubLlmServer(Responder responder, int fail_first = 0);
  ~StubLlmServer();
  StubLlmServer(const StubLlmServer&) = delete;
  StubLlmServer& operator=(const StubLlmServer&) = delete;

  // Binds to `port` (0 picks a free one) and serves on a background thread.
  int Start(int port = 0);
  // Serves on the calling thread until Stop().
  bool Listen(const std::string& host, int port);
  void Stop();

  std::string endpoint() const;
  int requests() const { return requests_.load(); }
  std::vector<std::string> authorization_headers() const;

 private:
  void Install();

  Responder responder_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  int fail_first_;
  std::atomic<int> requests_{0};
  mutable std::mutex mu_;
  std::vector<std::string> authorization_;
};

// Responder that answers from a fixture (digest -> reply).
Responder FixtureResponder(const std::vector<llm::FixtureEntry>& entries);

}  // namespace mtcgen::stub

#endif  // MTCGEN_TOOLS_STUB_STUB_SERVER_HPP_
