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
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "egc/json_io.hpp"
#include "egc/recommender.hpp"
#include "egc/service.hpp"
#include "httplib.h"

namespace fs = std::filesystem;
using egc::Json;

namespace {

// A running service over a private copy of the shipped data directory.
class Harness {
 public:
  Harness() {
    dir_ = fs::temp_directory_path() /
           ("egc-service-" + egc::random_session_id().substr(0, 12));
    fs::create_directories(dir_);
    fs::copy(EGC_SOURCE_DATA_DIR, dir_ / "data", fs::copy_options::recursive);
    start();
  }
  ~Harness() {
    stop();
    fs::remove_all(dir_);
  }

  void start() {
    const fs::path data = dir_ / "data";
    kb_ = std::make_shared<const egc::KnowledgeBase>(egc::KnowledgeBase::load(data));
    store_ = egc::AffectStore::open(egc::affect_paths(data), true);
    egc::ServiceOptions options;
    options.session_file = data / "sessions.json";
    options.ui_dir = dir_ / "ui";
    fs::create_directories(dir_ / "ui");
    std::ofstream(dir_ / "ui" / "index.html") << "<!doctype html><title>egc</title>";
    service_ = std::make_unique<egc::Service>(kb_, store_, options);
    port_ = service_->bind("127.0.0.1", 0);
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { service_->serve(); });
    service_->wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void stop() {
    if (!service_) return;
    service_->stop();
    thread_.join();
    client_.reset();
    service_.reset();
  }

  httplib::Client &http() { return *client_; }
  const fs::path &data_dir() const { return dir_; }
  std::shared_ptr<egc::AffectStore> store() const { return store_; }

  std::string new_session(const std::string &user) {
    auto r = http().Post("/sessions", Json{{"user_id", user}}.dump(), "application/json");
    REQUIRE(r);
    REQUIRE(r->status == 201);
    return Json::parse(r->body).at("session_id").get<std::string>();
  }

  Json say(const std::string &session, const Json &body, int expect = 200) {
    auto r = http().Post("/sessions/" + session + "/utterance", body.dump(), "application/json");
    REQUIRE(r);
    CHECK(r->status == expect);
    return Json::parse(r->body);
  }

 private:
  fs::path dir_;
  std::shared_ptr<const egc::KnowledgeBase> kb_;
  std::shared_ptr<egc::AffectStore> store_;
  std::unique_ptr<egc::Service> service_;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
  int port_ = 0;
};

std::vector<std::string> words(const Json &response) {
  std::vector<std::string> out;
  for (const auto &item : response.at("recommendations")) out.push_back(item.at("word"));
  return out;
}

}  // namespace

TEST_CASE("health and sessions") {
  Harness h;
  auto health = h.http().Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  const std::string a = h.new_session("kenji"), b = h.new_session("kenji");
  CHECK(a.size() == 32);
  CHECK(a != b);
  CHECK(a.find_first_not_of("0123456789abcdef") == std::string::npos);

  auto anon = h.http().Post("/sessions", "", "application/json");
  REQUIRE(anon);
  CHECK(Json::parse(anon->body).at("user_id") == "guest");

  auto missing = h.http().Get("/sessions/0123456789abcdef0123456789abcdef/history");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto missing_post = h.http().Post("/sessions/00ff/utterance", R"({"text":"hi"})", "application/json");
  REQUIRE(missing_post);
  CHECK(missing_post->status == 404);
}

TEST_CASE("utterances return the ranked list and append history") {
  Harness h;
  const std::string s = h.new_session("guest");
  Json r = h.say(s, {{"text", "I would like to eat a lunch."}});
  REQUIRE(r.at("recommendations").size() == 5);
  CHECK(r["recommendations"][0]["word"] == "okonomiyaki");
  CHECK(r["intent"] == "FoodGift");
  CHECK(r["query_word"] == "lunch");
  CHECK(r["emotion"]["sign"] == "pleasure");
  CHECK(std::abs(r["emotion"]["degree"].get<double>() - 0.3464) < 1e-4);
  CHECK(r["emotion"]["types"] == Json::array({"joy", "happy-for"}));
  CHECK(r["turn"] == 0);
  for (const auto &item : r["recommendations"]) {
    CHECK(item.contains("g1"));
    CHECK(item.contains("poi_id"));
    CHECK(item["score"].get<double>() >= r["query_score"].get<double>());
  }

  Json second = h.say(s, {{"text", "I am going to get to the Hiroshima castle."}});
  CHECK(second["turn"] == 1);
  CHECK(words(second).size() == 10);
  CHECK(words(second)[0] == "gokuraku temple");

  auto hist = h.http().Get("/sessions/" + s + "/history");
  REQUIRE(hist);
  Json turns = Json::parse(hist->body).at("turns");
  REQUIRE(turns.size() == 2);
  CHECK(turns[0]["utterance"] == "I would like to eat a lunch.");
  CHECK(turns[0]["response"] == r);
  // GET is idempotent.
  auto again = h.http().Get("/sessions/" + s + "/history");
  CHECK(again->body == hist->body);

  // Same snapshot, same bytes.
  const std::string other = h.new_session("guest");
  Json replay = h.say(other, {{"text", "I would like to eat a lunch."}});
  CHECK(replay.dump() == r.dump());
}

TEST_CASE("malformed utterance bodies are rejected") {
  Harness h;
  const std::string s = h.new_session("guest");
  auto bad_json = h.http().Post("/sessions/" + s + "/utterance", "{not json", "application/json");
  REQUIRE(bad_json);
  CHECK(bad_json->status == 422);
  h.say(s, {{"txt", "hello"}}, 422);
  h.say(s, {{"text", 5}}, 422);
  h.say(s, {{"text", "I eat lunch"}, {"context", {{"target", "nobody"}}}}, 422);
  auto hist = h.http().Get("/sessions/" + s + "/history");
  CHECK(Json::parse(hist->body).at("turns").empty());
}

TEST_CASE("confirmation needs an earlier prospect") {
  Harness h;
  const std::string s = h.new_session("guest");
  h.say(s, {{"text", "I eat lunch"}, {"context", {{"confirmed", true}}}}, 422);
  Json hope = h.say(s, {{"text", "I will eat lunch"}, {"context", {{"prospective", true}}}});
  std::set<std::string> types(hope["emotion"]["types"].begin(), hope["emotion"]["types"].end());
  CHECK(types.count("hope"));
  Json sat = h.say(s, {{"text", "I eat lunch"}, {"context", {{"confirmed", true}}}});
  std::set<std::string> t2(sat["emotion"]["types"].begin(), sat["emotion"]["types"].end());
  CHECK(t2.count("satisfaction"));
  h.say(s, {{"text", "I eat lunch"}, {"context", {{"confirmed", true}}}}, 422);
}

TEST_CASE("displeasure utterances persist taboo entries before responding") {
  Harness h;
  const std::string s = h.new_session("kenji");
  Json r = h.say(s, {{"text", "I go to the atomic bomb dome"}});
  CHECK(r["emotion"]["sign"] == "displeasure");
  CHECK(r["new_taboo"] == Json::array({"atomic bomb dome"}));
  std::ifstream taboo(h.data_dir() / "data" / "taboo.tsv");
  std::string content((std::istreambuf_iterator<char>(taboo)), std::istreambuf_iterator<char>());
  CHECK(content.find("kenji\tatomic bomb dome\t") != std::string::npos);

  auto list = h.http().Get("/users/kenji/taboo");
  REQUIRE(list);
  Json j = Json::parse(list->body);
  REQUIRE(j["taboo"].size() == 1);
  CHECK(j["taboo"][0]["lexeme"] == "atomic bomb dome");
}

TEST_CASE("taboo endpoints") {
  Harness h;
  auto add = h.http().Post("/users/kenji/taboo", R"({"lexeme":"Gokuraku Temple"})",
                           "application/json");
  REQUIRE(add);
  CHECK(add->status == 200);
  const std::string s = h.new_session("kenji");
  Json r = h.say(s, {{"text", "I am going to get to the Hiroshima castle."}});
  for (const auto &w : words(r)) CHECK(w != "gokuraku temple");

  auto bad = h.http().Post("/users/kenji/taboo", R"({"lexeme":""})", "application/json");
  CHECK(bad->status == 422);
  auto missing = h.http().Delete("/users/kenji/taboo/torii");
  CHECK(missing->status == 404);
  auto del = h.http().Delete("/users/kenji/taboo/gokuraku%20temple");
  REQUIRE(del);
  CHECK(del->status == 200);
  CHECK(Json::parse(del->body)["taboo"].empty());
  Json after = h.say(s, {{"text", "I am going to get to the Hiroshima castle."}});
  CHECK(words(after)[0] == "gokuraku temple");
}

TEST_CASE("favorite value updates") {
  Harness h;
  auto put = [&](const Json &body) {
    auto r = h.http().Put("/users/kenji/fv", body.dump(), "application/json");
    REQUIRE(r);
    return r;
  };
  CHECK(put({{"lexeme", "lunch"}, {"value", 1.5}})->status == 422);
  CHECK(put({{"lexeme", "lunch"}, {"value", "high"}})->status == 422);
  CHECK(put({{"value", 0.2}})->status == 422);
  auto ok = put({{"lexeme", "lunch"}, {"value", -0.4}});
  CHECK(ok->status == 200);
  const auto version = Json::parse(ok->body).at("version").get<std::uint64_t>();
  CHECK(put({{"lexeme", "lunch"}, {"value", 0.1}, {"expected_version", version - 1}})->status ==
        409);
  CHECK(put({{"lexeme", "lunch"}, {"value", 0.1}, {"expected_version", version}})->status == 200);
  CHECK(h.store()->lookup_fv("lunch", "kenji") == 0.1);
  CHECK(h.store()->lookup_fv("lunch", "guest") == 0.6);
}

TEST_CASE("POI browsing") {
  Harness h;
  auto all = h.http().Get("/pois?category=food");
  REQUIRE(all);
  CHECK(all->status == 200);
  const Json listing = Json::parse(all->body);
  for (const auto &p : listing["pois"]) CHECK(p["category"] == "food");

  auto near = h.http().Get("/pois?near=hiroshima%20castle&k=3");
  REQUIRE(near);
  Json items = Json::parse(near->body)["pois"];
  REQUIRE(items.size() == 3);
  for (std::size_t i = 1; i < items.size(); ++i) {
    CHECK(items[i - 1]["distance_km"].get<double>() <= items[i]["distance_km"].get<double>());
  }
  CHECK(h.http().Get("/pois?near=atlantis")->status == 404);
  CHECK(h.http().Get("/pois?category=castle")->status == 422);
  CHECK(h.http().Get("/pois?k=0")->status == 422);

  auto one = h.http().Get("/pois/S01");
  REQUIRE(one);
  CHECK(Json::parse(one->body)["name"] == "hiroshima castle");
  CHECK(h.http().Get("/pois/S999")->status == 404);
}

TEST_CASE("static UI is served when present") {
  Harness h;
  auto page = h.http().Get("/ui/index.html");
  REQUIRE(page);
  CHECK(page->status == 200);
  CHECK(page->body.find("<title>egc</title>") != std::string::npos);
}

TEST_CASE("sessions survive a restart") {
  Harness h;
  const std::string s = h.new_session("kenji");
  h.say(s, {{"text", "I would like to eat a lunch."}});
  h.stop();
  CHECK(fs::exists(h.data_dir() / "data" / "sessions.json"));
  h.start();
  auto hist = h.http().Get("/sessions/" + s + "/history");
  REQUIRE(hist);
  CHECK(hist->status == 200);
  CHECK(Json::parse(hist->body)["turns"].size() == 1);
  Json next = h.say(s, {{"text", "I am hungry"}});
  CHECK(next["turn"] == 1);
}

TEST_CASE("concurrent utterances append exactly one turn each") {
  Harness h;
  const std::string s = h.new_session("guest");
  std::vector<std::thread> threads;
  std::atomic<int> failures{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      httplib::Client c(h.http().host(), h.http().port());
      for (int i = 0; i < 5; ++i) {
        auto r = c.Post("/sessions/" + s + "/utterance",
                        Json{{"text", t % 2 ? "I am hungry" : "I go to Kure"}}.dump(),
                        "application/json");
        if (!r || r->status != 200) ++failures;
      }
    });
  }
  for (auto &t : threads) t.join();
  CHECK(failures == 0);
  auto hist = h.http().Get("/sessions/" + s + "/history");
  Json turns = Json::parse(hist->body)["turns"];
  REQUIRE(turns.size() == 20);
  for (std::size_t i = 0; i < turns.size(); ++i) CHECK(turns[i]["response"]["turn"] == i);
}
