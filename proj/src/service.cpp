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

#include "egc/service.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <vector>

#include "httplib.h"
#include "egc/error.hpp"
#include "egc/json_io.hpp"
#include "egc/text.hpp"

namespace egc {

namespace {

struct Session {
  std::string id;
  std::string user_id;
  std::vector<Json> turns;
  bool pending_prospect = false;
  std::mutex mu;
};

// Request failure carrying its HTTP status.
struct HttpError {
  int status;
  std::string message;
};

void reply(httplib::Response &res, int status, const Json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json parse_body(const httplib::Request &req) {
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw HttpError{422, "body must be a JSON object"};
  return j;
}

std::string require_string(const Json &body, const char *key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    throw HttpError{422, std::string("'") + key + "' must be a string"};
  }
  std::string value = normalize_lexeme(it->get<std::string>());
  if (value.empty()) throw HttpError{422, std::string("'") + key + "' must not be empty"};
  return value;
}

Json taboo_json(const AffectSnapshot &snap, const std::string &user) {
  Json entries = Json::array();
  for (const auto &[lexeme, ts] : snap.taboo.entries(user)) {
    entries.push_back({{"lexeme", lexeme}, {"added", ts}});
  }
  return Json{{"user_id", user}, {"taboo", entries}, {"version", snap.version}};
}

}  // namespace

std::string random_session_id() {
  static std::mutex mu;
  static std::random_device rd;
  std::lock_guard lock(mu);
  std::string out;
  char buf[9];
  for (int i = 0; i < 4; ++i) {
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(rd()));
    out += buf;
  }
  return out;
}

struct Service::Impl {
  std::shared_ptr<const KnowledgeBase> kb;
  std::shared_ptr<AffectStore> store;
  ServiceOptions options;
  Recommender recommender;
  httplib::Server server;

  mutable std::mutex sessions_mu;
  std::map<std::string, std::shared_ptr<Session>> sessions;

  Impl(std::shared_ptr<const KnowledgeBase> k, std::shared_ptr<AffectStore> s, ServiceOptions o)
      : kb(std::move(k)), store(std::move(s)), options(std::move(o)), recommender(kb, *store) {
    load_sessions();
    routes();
  }

  std::shared_ptr<Session> session(const std::string &id) const {
    std::lock_guard lock(sessions_mu);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw HttpError{404, "unknown session"};
    return it->second;
  }

  // Wraps a handler so domain errors map onto status codes.
  template <typename F>
  httplib::Server::Handler guard(F f) {
    return [f](const httplib::Request &req, httplib::Response &res) {
      try {
        f(req, res);
      } catch (const HttpError &e) {
        reply(res, e.status, Json{{"error", e.message}});
      } catch (const VersionConflict &e) {
        reply(res, 409, Json{{"error", e.what()}});
      } catch (const LookupError &e) {
        reply(res, 404, Json{{"error", e.what()}});
      } catch (const InvalidArgument &e) {
        reply(res, 422, Json{{"error", e.what()}});
      } catch (const Error &e) {
        reply(res, 422, Json{{"error", e.what()}});
      } catch (const std::exception &e) {
        reply(res, 500, Json{{"error", e.what()}});
      }
    };
  }

  void routes() {
    server.Get("/health", guard([](const httplib::Request &, httplib::Response &res) {
                 reply(res, 200, Json{{"status", "ok"}});
               }));

    server.Post("/sessions", guard([this](const httplib::Request &req, httplib::Response &res) {
                  std::string user = "guest";
                  if (!req.body.empty()) {
                    Json body = parse_body(req);
                    if (body.contains("user_id")) user = require_string(body, "user_id");
                  }
                  auto s = std::make_shared<Session>();
                  s->id = random_session_id();
                  s->user_id = user;
                  {
                    std::lock_guard lock(sessions_mu);
                    sessions.emplace(s->id, s);
                  }
                  reply(res, 201, Json{{"session_id", s->id}, {"user_id", user}});
                }));

    server.Post(R"(/sessions/([0-9a-f]+)/utterance)",
                guard([this](const httplib::Request &req, httplib::Response &res) {
                  auto s = session(req.matches[1]);
                  Json body = parse_body(req);
                  auto text = body.find("text");
                  if (text == body.end() || !text->is_string()) {
                    throw HttpError{422, "'text' must be a string"};
                  }
                  reply(res, 200, utterance(*s, text->get<std::string>(), body));
                }));

    server.Get(R"(/sessions/([0-9a-f]+)/history)",
               guard([this](const httplib::Request &req, httplib::Response &res) {
                 auto s = session(req.matches[1]);
                 std::lock_guard lock(s->mu);
                 reply(res, 200,
                       Json{{"session_id", s->id}, {"user_id", s->user_id}, {"turns", s->turns}});
               }));

    server.Get(R"(/users/([^/]+)/taboo)",
               guard([this](const httplib::Request &req, httplib::Response &res) {
                 reply(res, 200, taboo_json(*store->snapshot(), normalize_lexeme(req.matches[1].str())));
               }));

    server.Post(R"(/users/([^/]+)/taboo)",
                guard([this](const httplib::Request &req, httplib::Response &res) {
                  const std::string user = normalize_lexeme(req.matches[1].str());
                  std::string lexeme = require_string(parse_body(req), "lexeme");
                  store->record_taboo(user, lexeme);
                  reply(res, 200, taboo_json(*store->snapshot(), user));
                }));

    server.Delete(R"(/users/([^/]+)/taboo/(.+))",
                  guard([this](const httplib::Request &req, httplib::Response &res) {
                    const std::string user = normalize_lexeme(req.matches[1].str());
                    const std::string lexeme = normalize_lexeme(req.matches[2].str());
                    if (!store->is_taboo(user, lexeme)) throw HttpError{404, "not in taboo list"};
                    store->clear_taboo(user, lexeme);
                    reply(res, 200, taboo_json(*store->snapshot(), user));
                  }));

    server.Put(R"(/users/([^/]+)/fv)",
               guard([this](const httplib::Request &req, httplib::Response &res) {
                 const std::string user = normalize_lexeme(req.matches[1].str());
                 Json body = parse_body(req);
                 std::string lexeme = require_string(body, "lexeme");
                 auto value = body.find("value");
                 if (value == body.end() || !value->is_number()) {
                   throw HttpError{422, "'value' must be a number"};
                 }
                 std::optional<std::uint64_t> expected;
                 if (auto ev = body.find("expected_version"); ev != body.end() && !ev->is_null()) {
                   if (!ev->is_number_unsigned()) {
                     throw HttpError{422, "'expected_version' must be a non-negative integer"};
                   }
                   expected = ev->get<std::uint64_t>();
                 }
                 const double v = value->get<double>();
                 if (!fv_in_range(v)) throw HttpError{422, "value outside [-1, 1]"};
                 std::uint64_t version = store->set_personal_fv(user, lexeme, v, expected);
                 reply(res, 200, Json{{"user_id", user}, {"lexeme", lexeme}, {"value", v},
                                      {"version", version}});
               }));

    server.Get("/pois", guard([this](const httplib::Request &req, httplib::Response &res) {
                 reply(res, 200, pois(req));
               }));

    server.Get(R"(/pois/([^/]+))", guard([this](const httplib::Request &req,
                                                httplib::Response &res) {
                 const Poi *p = kb->catalog.by_id(req.matches[1].str());
                 if (!p) throw HttpError{404, "unknown POI"};
                 reply(res, 200, Json(*p));
               }));

    if (options.ui_dir && std::filesystem::is_directory(*options.ui_dir)) {
      server.set_mount_point("/ui", options.ui_dir->string());
    }
  }

  Json utterance(Session &s, const std::string &text, const Json &body) {
    std::lock_guard lock(s.mu);
    RecommendOptions opts = options.recommend;
    if (auto ctx = body.find("context"); ctx != body.end()) {
      EmotionContext c = context_from_json(*ctx);
      if (c.confirmed && !s.pending_prospect) {
        throw HttpError{422, "confirmed requires an earlier prospective turn"};
      }
      // other_fv defaults to the subject's FV unless the client sent one.
      if (!ctx->contains("other_fv")) {
        auto frames = [&]() -> std::optional<CaseFrame> {
          try {
            auto f = parse_utterance(text, kb->lexicon);
            for (const auto &fr : f) {
              if (classify_intent(fr, kb->lexicon) != Intent::Other) return fr;
            }
            return f.front();
          } catch (const ParseFailure &) {
            return std::nullopt;
          }
        }();
        if (frames) {
          c.other_fv = store->lookup_fv(frames->slots.at(CaseRole::Subject), s.user_id);
        }
      }
      opts.context = c;
    }

    RecommendationList list = recommender.recommend(text, s.user_id, opts);
    auto snap = store->snapshot();
    auto bad = check_invariants(
        list, [&](std::string_view w) { return snap->is_taboo(s.user_id, w); }, opts);
    if (!bad.empty()) throw std::runtime_error("recommendation invariant violated: " + bad[0]);

    if (opts.context) {
      if (opts.context->prospective) s.pending_prospect = true;
      if (opts.context->confirmed) s.pending_prospect = false;
    }

    Json out = Json{{"intent", to_string(list.intent)},
                    {"query_word", list.query_word},
                    {"query_score", list.query_score},
                    {"recommendations", list.items},
                    {"keyword_mode", list.keyword_mode},
                    {"new_taboo", list.new_taboo},
                    {"emotion", list.emotion ? emotion_summary(*list.emotion) : Json()},
                    {"turn", s.turns.size()}};
    if (list.frame) out["frame"] = *list.frame;
    if (!list.reason.empty()) out["reason"] = list.reason;
    s.turns.push_back(Json{{"utterance", text}, {"response", out}});
    return out;
  }

  Json pois(const httplib::Request &req) {
    std::optional<Category> category;
    if (req.has_param("category") && !req.get_param_value("category").empty()) {
      category = parse_category(req.get_param_value("category"));
      if (!category) throw HttpError{422, "category must be spot, food or gift"};
    }
    std::size_t k = 10;
    if (req.has_param("k")) {
      unsigned long long parsed = 0;
      if (!parse_uint64(req.get_param_value("k"), parsed) || parsed == 0 || parsed > 10000) {
        throw HttpError{422, "k must be a positive integer"};
      }
      k = static_cast<std::size_t>(parsed);
    }
    Json items = Json::array();
    if (req.has_param("near") && !req.get_param_value("near").empty()) {
      const Poi *origin = kb->catalog.find(req.get_param_value("near"));
      if (!origin) throw HttpError{404, "unknown POI"};
      for (const Neighbor &n : kb->catalog.nearby(*origin, category.value_or(origin->category), k)) {
        Json j = *n.poi;
        j["distance_km"] = n.distance_km;
        items.push_back(std::move(j));
      }
    } else {
      for (const Poi &p : kb->catalog.pois()) {
        if (!category || p.category == *category) items.push_back(Json(p));
      }
    }
    return Json{{"pois", items}};
  }

  void load_sessions() {
    if (!options.session_file || !std::filesystem::exists(*options.session_file)) return;
    std::ifstream in(*options.session_file);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw LoadError(options.session_file->string(), 0, "malformed session snapshot");
    }
    for (const auto &entry : j.value("sessions", Json::array())) {
      auto s = std::make_shared<Session>();
      s->id = entry.at("session_id").get<std::string>();
      s->user_id = entry.at("user_id").get<std::string>();
      s->pending_prospect = entry.value("pending_prospect", false);
      for (const auto &t : entry.at("turns")) s->turns.push_back(t);
      sessions.emplace(s->id, std::move(s));
    }
  }

  void save_sessions() const {
    if (!options.session_file) return;
    Json all = Json::array();
    {
      std::lock_guard lock(sessions_mu);
      for (const auto &[id, s] : sessions) {
        std::lock_guard slock(s->mu);
        all.push_back(Json{{"session_id", id},
                           {"user_id", s->user_id},
                           {"pending_prospect", s->pending_prospect},
                           {"turns", s->turns}});
      }
    }
    auto tmp = *options.session_file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << Json{{"sessions", all}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, *options.session_file);
  }
};

Service::Service(std::shared_ptr<const KnowledgeBase> kb, std::shared_ptr<AffectStore> store,
                 ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(kb), std::move(store), std::move(options))) {}

Service::~Service() { impl_->server.stop(); }

int Service::bind(const std::string &host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::serve() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  impl_->server.stop();
  impl_->save_sessions();
}

bool Service::running() const { return impl_->server.is_running(); }

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

void Service::save_sessions() const { impl_->save_sessions(); }

}  // namespace egc
