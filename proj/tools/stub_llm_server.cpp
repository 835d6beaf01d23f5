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

#include <csignal>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "common/error.hpp"
#include "llm_gateway/provider.hpp"
#include "stub/script.hpp"
#include "stub/stub_server.hpp"

namespace {

mtcgen::stub::StubLlmServer* running = nullptr;

void HandleSignal(int) {
  if (running != nullptr) running->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offline chat-completions server answering from a script or a fixture"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string script;
  std::string fixture;
  int fail_first = 0;
  app.add_option("--host", host, "Bind address");
  app.add_option("--port", port, "Port");
  auto* script_opt =
      app.add_option("--script", script, "Rule script JSON")->check(CLI::ExistingFile);
  app.add_option("--fixture", fixture, "Replay fixture JSONL")
      ->check(CLI::ExistingFile)
      ->excludes(script_opt);
  app.add_option("--fail-first", fail_first, "Answer the first N requests with HTTP 503");
  CLI11_PARSE(app, argc, argv);

  try {
    mtcgen::stub::Responder responder;
    if (!script.empty()) {
      responder = mtcgen::stub::ScriptResponder(mtcgen::stub::ReadScript(script));
    } else if (!fixture.empty()) {
      responder = mtcgen::stub::FixtureResponder(mtcgen::llm::ReadFixture(fixture));
    } else {
      std::cerr << "error: --script or --fixture is required\n";
      return 1;
    }
    mtcgen::stub::StubLlmServer server(std::move(responder), fail_first);
    running = &server;
    std::signal(SIGINT, HandleSignal);
    std::signal(SIGTERM, HandleSignal);
    std::cerr << "listening on " << host << ":" << port << "\n";
    if (!server.Listen(host, port)) {
      std::cerr << "error: cannot bind " << host << ":" << port << "\n";
      return 1;
    }
    std::cerr << "served " << server.requests() << " requests\n";
  } catch (const mtcgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
