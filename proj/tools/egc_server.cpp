// Copyright 2026 The EGC Concierge Authors.
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

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "egc/error.hpp"
#include "egc/recommender.hpp"
#include "egc/service.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Affective tourist recommender HTTP service"};
  std::string data_dir = "./data";
  if (const char *env = std::getenv("EGC_DATA_DIR")) data_dir = env;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool no_persist = false;
  std::string ui_dir, session_file;
  app.add_option("--data-dir", data_dir, "Data directory (env EGC_DATA_DIR)");
  app.add_option("--host", host);
  app.add_option("--port", port)->check(CLI::Range(0, 65535));
  app.add_flag("--no-persist", no_persist, "Keep taboo and FV writes in memory only");
  app.add_option("--ui-dir", ui_dir, "Static UI assets served under /ui (default <data-dir>/../ui/dist)");
  app.add_option("--sessions", session_file, "Session snapshot file (default <data-dir>/sessions.json)");
  CLI11_PARSE(app, argc, argv);

  // Handle shutdown on a dedicated thread instead of in a signal handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  try {
    const std::filesystem::path data = data_dir;
    auto kb = std::make_shared<const egc::KnowledgeBase>(egc::KnowledgeBase::load(data));
    std::shared_ptr<egc::AffectStore> store =
        egc::AffectStore::open(egc::affect_paths(data), !no_persist);
    egc::ServiceOptions options;
    options.session_file = session_file.empty() ? data / "sessions.json" : std::filesystem::path(session_file);
    options.ui_dir = ui_dir.empty() ? data.parent_path() / "ui" / "dist" : std::filesystem::path(ui_dir);
    egc::Service service(kb, store, options);

    const int bound = service.bind(host, port);
    if (bound < 0) {
      std::cerr << "egc_server: cannot bind " << host << ":" << port << '\n';
      return 1;
    }
    std::atomic<bool> signalled{false};
    std::thread waiter([&] {
      int sig = 0;
      sigwait(&signals, &sig);
      signalled = true;
      service.stop();
    });
    std::cerr << "egc_server: listening on http://" << host << ":" << bound << '\n';
    service.serve();
    // serve() can also end without a signal; wake the waiter so it exits.
    if (!signalled) pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
  } catch (const egc::Error &e) {
    std::cerr << "egc_server: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
