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

#include "egc/json_io.hpp"

#include "egc/error.hpp"

namespace egc {

void to_json(Json &j, const CaseFrame &frame) {
  Json slots = Json::object();
  for (const auto &[role, lexeme] : frame.slots) slots[std::string(to_string(role))] = lexeme;
  j = Json{{"event_type", to_string(frame.event_type)},
           {"mood", to_string(frame.mood)},
           {"raw_text", frame.raw_text},
           {"slots", std::move(slots)}};
}

void to_json(Json &j, const EmotionResult &r) {
  j = emotion_summary(r);
  j["vector"] = {r.vector.f(0), r.vector.f(1), r.vector.f(2)};
  j["provenance"] = r.vector.provenance;
  j["octant"] = to_string(r.octant);
  j["intensity_scale"] = r.intensity_scale;
}

Json emotion_summary(const EmotionResult &r) {
  return Json{{"sign", to_string(r.sign)},
              {"degree", r.degree},
              {"egc", r.egc()},
              {"types", r.emotions}};
}

void to_json(Json &j, const ScoredCandidate &c) {
  j = Json{{"word", c.word}, {"g1", c.g1}, {"g2", c.g2}, {"egc", c.egc}, {"score", c.score}};
  if (c.poi_ref) j["poi_id"] = *c.poi_ref;
}

void to_json(Json &j, const RecommendationList &l) {
  j = Json{{"intent", to_string(l.intent)},
           {"query_word", l.query_word},
           {"query_score", l.query_score},
           {"recommendations", l.items},
           {"keyword_mode", l.keyword_mode},
           {"new_taboo", l.new_taboo}};
  if (!l.reason.empty()) j["reason"] = l.reason;
  if (l.frame) j["frame"] = *l.frame;
  if (l.emotion) j["emotion"] = *l.emotion;
}

void to_json(Json &j, const Poi &p) {
  j = Json{{"poi_id", p.poi_id},
           {"name", p.name_lexeme},
           {"category", to_string(p.category)},
           {"lat", p.location.lat},
           {"lon", p.location.lon},
           {"description", p.description}};
}

void to_json(Json &j, const LogisticParams &p) { j = Json{{"a", p.a}, {"b", p.b}}; }

void to_json(Json &j, const ChannelValues &c) {
  j = Json{{"g1", c.g1}, {"g2", c.g2}, {"egc", c.egc}, {"score", recommend_score(c)}};
}

EmotionContext context_from_json(const Json &j, EmotionContext ctx) {
  if (j.is_null()) return ctx;
  if (!j.is_object()) throw InvalidArgument("context must be an object");
  for (const auto &[key, value] : j.items()) {
    if (key == "target") {
      if (value != "self" && value != "other") throw InvalidArgument("target is self or other");
      ctx.target = value == "self" ? Target::Self : Target::Other;
    } else if (key == "other_fv") {
      if (!value.is_number()) throw InvalidArgument("other_fv must be a number");
      ctx.other_fv = value.get<double>();
    } else if (key == "prospective") {
      if (!value.is_boolean()) throw InvalidArgument("prospective must be a boolean");
      ctx.prospective = value.get<bool>();
    } else if (key == "confirmed" || key == "approved") {
      std::optional<bool> flag;
      if (value.is_boolean()) {
        flag = value.get<bool>();
      } else if (!value.is_null()) {
        throw InvalidArgument(key + " must be a boolean or null");
      }
      (key == "confirmed" ? ctx.confirmed : ctx.agent_approved) = flag;
    } else {
      throw InvalidArgument("unknown context field '" + key + "'");
    }
  }
  return ctx;
}

}  // namespace egc
