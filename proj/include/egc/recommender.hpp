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

#ifndef EGC_RECOMMENDER_HPP_
#define EGC_RECOMMENDER_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egc/affect_store.hpp"
#include "egc/caseframe.hpp"
#include "egc/catalog.hpp"
#include "egc/emotion.hpp"
#include "egc/evidence.hpp"
#include "egc/lexicon.hpp"
#include "egc/scoring.hpp"

namespace egc {

// Everything read-only the pipeline needs. The favorite values and taboo
// lists live in an AffectStore because they change at run time.
struct KnowledgeBase {
  Lexicon lexicon;
  EgcConfig egc = EgcConfig::defaults();
  CorpusIndex corpus;
  HitCountProvider hits;
  Catalog catalog;
  ScoringParams params;

  // lexicon.tsv, egc.conf, corpus/, hits.tsv, catalog.tsv, params.tsv
  static KnowledgeBase load(const std::filesystem::path &data_dir);
};

AffectStore::Paths affect_paths(const std::filesystem::path &data_dir);

struct ScoredCandidate {
  std::string word;
  double g1 = 0.0;
  double g2 = 0.0;
  double egc = 0.0;
  double score = 0.0;
  std::optional<std::string> poi_ref;
};

struct RecommendationList {
  Intent intent = Intent::Other;
  std::string query_word;
  double query_score = 0.0;
  std::vector<ScoredCandidate> items;

  std::string reason;          // why the list is empty, when it is
  bool keyword_mode = false;   // no predicate parsed; nouns drove the query
  std::optional<CaseFrame> frame;
  std::optional<EmotionResult> emotion;
  std::vector<std::string> new_taboo;  // lexemes tabooed by this utterance
};

struct RecommendOptions {
  std::size_t place_limit = 10;
  std::size_t food_gift_limit = 5;
  std::size_t place_pool = 50;
  std::size_t top_l = 1;
  // Write displeasure objects to the store's taboo list (they are excluded
  // from this list either way).
  bool record_taboo = true;
  // Defaults to target=other with other_fv = FV of the subject.
  std::optional<EmotionContext> context;
};

// Role a candidate replaces: ObjectTo (falling back to Object) for places,
// Object for foods and gifts.
std::optional<CaseRole> intent_slot(const CaseFrame &frame, Intent intent);

// The frame with the candidate substituted into its intent slot, evaluated
// afresh. Without such a slot the frame is evaluated unchanged.
EmotionResult evaluate_candidate(const CaseFrame &frame, Intent intent,
                                 std::string_view candidate, const FvResolver &fv,
                                 const EmotionContext &context, const EgcConfig &config);

inline double candidate_egc(const CaseFrame &frame, Intent intent, std::string_view candidate,
                            const FvResolver &fv, const EmotionContext &context,
                            const EgcConfig &config) {
  return evaluate_candidate(frame, intent, candidate, fv, context, config).egc();
}

class Recommender {
 public:
  Recommender(std::shared_ptr<const KnowledgeBase> kb, AffectStore &store)
      : kb_(std::move(kb)), store_(store) {}

  RecommendationList recommend(std::string_view utterance, std::string_view user,
                               const RecommendOptions &options = {}) const;

  // g1 and g2 of a word, paired with the given EGC scalar.
  ChannelValues channels(std::string_view word, double egc, std::size_t top_l = 1) const;

  const KnowledgeBase &knowledge() const { return *kb_; }
  AffectStore &store() const { return store_; }

 private:
  RecommendationList keyword_fallback(std::string_view utterance,
                                      const AffectSnapshot &snap, std::string_view user,
                                      const RecommendOptions &options) const;

  std::shared_ptr<const KnowledgeBase> kb_;
  AffectStore &store_;
};

// Violated list invariants (ordering, cutoff, threshold, taboo); empty when
// the list is well formed.
std::vector<std::string> check_invariants(
    const RecommendationList &list, const std::function<bool(std::string_view)> &is_taboo,
    const RecommendOptions &options = {});

}  // namespace egc

#endif  // EGC_RECOMMENDER_HPP_
