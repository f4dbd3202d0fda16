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

#ifndef EGC_SERVICE_HPP_
#define EGC_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "egc/affect_store.hpp"
#include "egc/recommender.hpp"

namespace egc {

struct ServiceOptions {
  // Sessions are written here on stop() and read back on start.
  std::optional<std::filesystem::path> session_file;
  // Static files served under /ui when the directory exists.
  std::optional<std::filesystem::path> ui_dir;
  RecommendOptions recommend;
};

// JSON-over-HTTP facade. Endpoints (see docs/api.md):
//   POST   /sessions                      {user_id}
//   POST   /sessions/{id}/utterance       {text, context?}
//   GET    /sessions/{id}/history
//   GET    /users/{id}/taboo
//   POST   /users/{id}/taboo              {lexeme}
//   DELETE /users/{id}/taboo/{lexeme}
//   PUT    /users/{id}/fv                 {lexeme, value, expected_version?}
//   GET    /pois?category=&near=&k=
//   GET    /pois/{poi_id}
//   GET    /health
class Service {
 public:
  Service(std::shared_ptr<const KnowledgeBase> kb, std::shared_ptr<AffectStore> store,
          ServiceOptions options = {});
  ~Service();
  Service(const Service &) = delete;
  Service &operator=(const Service &) = delete;

  // Binds without serving; port 0 picks a free port. Returns the bound port
  // or -1.
  int bind(const std::string &host, int port);
  // Blocks until stop().
  bool serve();
  // Stops serving and writes the session snapshot, if configured.
  void stop();
  bool running() const;
  void wait_until_ready() const;

  void save_sessions() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// 32 lowercase hex digits from the system entropy source.
std::string random_session_id();

}  // namespace egc

#endif  // EGC_SERVICE_HPP_
