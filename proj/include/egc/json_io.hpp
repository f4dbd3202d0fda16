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

#ifndef EGC_JSON_IO_HPP_
#define EGC_JSON_IO_HPP_

#include "json.hpp"

#include "egc/caseframe.hpp"
#include "egc/catalog.hpp"
#include "egc/emotion.hpp"
#include "egc/recommender.hpp"
#include "egc/scoring.hpp"

// Objects use nlohmann's default std::map storage, so keys always serialize
// in sorted order and equal values give byte-identical output.
namespace egc {

using Json = nlohmann::json;

void to_json(Json &j, const CaseFrame &frame);
void to_json(Json &j, const EmotionResult &result);
void to_json(Json &j, const ScoredCandidate &candidate);
void to_json(Json &j, const RecommendationList &list);
void to_json(Json &j, const Poi &poi);
void to_json(Json &j, const LogisticParams &params);
void to_json(Json &j, const ChannelValues &channels);

// Short emotion summary: sign, degree, egc, types.
Json emotion_summary(const EmotionResult &result);

// {target, other_fv, prospective, confirmed, approved}, all optional.
// Throws InvalidArgument on wrong types or values.
EmotionContext context_from_json(const Json &j, EmotionContext base = {});

}  // namespace egc

#endif  // EGC_JSON_IO_HPP_
