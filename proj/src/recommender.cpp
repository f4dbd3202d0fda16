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

#include "egc/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

namespace {

constexpr CaseRole kObjectRoles[] = {
    CaseRole::Object,        CaseRole::ObjectFrom,    CaseRole::ObjectTo,
    CaseRole::ObjectMutual,  CaseRole::ObjectSource,  CaseRole::ObjectContent,
    CaseRole::Instrument,
};

struct Candidate {
  std::string word;
  std::optional<std::string> poi_id;
};

std::vector<Candidate> food_gift_pool(const Catalog &catalog, std::string_view exclude) {
  std::vector<Candidate> out;
  for (const Poi &p : catalog.pois()) {
    if (p.category == Category::Spot || p.name_lexeme == exclude) continue;
    out.push_back({p.name_lexeme, p.poi_id});
  }
  return out;
}

std::vector<Candidate> place_pool(const Catalog &catalog, const Poi *origin, std::size_t k) {
  std::vector<Candidate> out;
  if (origin) {
    for (const Neighbor &n : catalog.nearby(*origin, Category::Spot, k)) {
      out.push_back({n.poi->name_lexeme, n.poi->poi_id});
    }
  } else {
    for (const Poi *p : catalog.of_category(Category::Spot)) {
      out.push_back({p->name_lexeme, p->poi_id});
    }
  }
  return out;
}

void sort_and_cut(RecommendationList &list, std::size_t limit) {
  std::sort(list.items.begin(), list.items.end(),
            [](const ScoredCandidate &a, const ScoredCandidate &b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  if (list.items.size() > limit) list.items.resize(limit);
}

std::size_t limit_for(Intent intent, const RecommendOptions &o) {
  return intent == Intent::Place ? o.place_limit : o.food_gift_limit;
}

FvResolver resolver_for(const AffectSnapshot &snap, std::string user) {
  return [&snap, user = std::move(user)](std::string_view lexeme) {
    return snap.find_fv(lexeme, user);
  };
}

}  // namespace

KnowledgeBase KnowledgeBase::load(const std::filesystem::path &dir) {
  KnowledgeBase kb;
  kb.lexicon = Lexicon::load(dir / "lexicon.tsv");
  kb.egc = EgcConfig::load(dir / "egc.conf");
  kb.corpus = CorpusIndex::build(load_corpus_dir(dir / "corpus"));
  kb.hits = HitCountProvider(HitCountTable::load(dir / "hits.tsv"));
  kb.catalog = Catalog::load(dir / "catalog.tsv");
  kb.params = ScoringParams::load(dir / "params.tsv");
  return kb;
}

AffectStore::Paths affect_paths(const std::filesystem::path &data_dir) {
  return {data_dir / "fv.tsv", data_dir / "taboo.tsv"};
}

std::optional<CaseRole> intent_slot(const CaseFrame &frame, Intent intent) {
  if (intent == Intent::Place) {
    if (frame.slot(CaseRole::ObjectTo)) return CaseRole::ObjectTo;
    if (frame.slot(CaseRole::Object)) return CaseRole::Object;
  } else if (intent == Intent::FoodGift) {
    if (frame.slot(CaseRole::Object)) return CaseRole::Object;
  }
  return std::nullopt;
}

EmotionResult evaluate_candidate(const CaseFrame &frame, Intent intent,
                                 std::string_view candidate, const FvResolver &fv,
                                 const EmotionContext &context, const EgcConfig &config) {
  auto slot = intent_slot(frame, intent);
  if (!slot) return evaluate(frame, fv, context, config);
  CaseFrame substituted = frame;
  substituted.slots[*slot] = normalize_lexeme(candidate);
  return evaluate(substituted, fv, context, config);
}

ChannelValues Recommender::channels(std::string_view word, double egc, std::size_t top_l) const {
  const KnowledgeBase &kb = *kb_;
  ChannelValues c;
  const double max_hits = static_cast<double>(kb.hits.max_count());
  const double hits = static_cast<double>(kb.hits.hit_count(word));
  c.g1 = logistic(max_hits > 0 ? normalize(hits, max_hits) : 0.0, kb.params.g1);
  const double max_tfidf = kb.corpus.max_tfidf();
  const double tfidf =
      kb.corpus.document_count() ? kb.corpus.best_top_l(corpus_terms(word), top_l) : 0.0;
  c.g2 = logistic(max_tfidf > 0 ? normalize(tfidf, max_tfidf) : 0.0, kb.params.g2);
  c.egc = egc;
  return c;
}

RecommendationList Recommender::recommend(std::string_view utterance, std::string_view user_raw,
                                          const RecommendOptions &options) const {
  const KnowledgeBase &kb = *kb_;
  const std::string user = normalize_lexeme(user_raw);
  auto snap = store_.snapshot();

  std::vector<CaseFrame> frames;
  try {
    frames = parse_utterance(utterance, kb.lexicon);
  } catch (const ParseFailure &) {
    return keyword_fallback(utterance, *snap, user, options);
  }

  RecommendationList out;
  const CaseFrame *chosen = &frames.front();
  for (const CaseFrame &f : frames) {
    if (classify_intent(f, kb.lexicon) != Intent::Other) {
      chosen = &f;
      break;
    }
  }
  const CaseFrame &frame = *chosen;
  out.frame = frame;
  out.intent = classify_intent(frame, kb.lexicon);

  FvResolver fv = resolver_for(*snap, user);
  EmotionContext ctx;
  if (options.context) {
    ctx = *options.context;
  } else {
    ctx.target = Target::Other;
    ctx.other_fv = fv(frame.slots.at(CaseRole::Subject)).value_or(0.0);
  }
  out.emotion = evaluate(frame, fv, ctx, kb.egc);
  const double utterance_egc = out.emotion->egc();

  std::set<std::string> taboo;
  for (const auto &[lexeme, ts] : snap->taboo.entries(user)) taboo.insert(lexeme);
  if (out.emotion->sign == Sign::Displeasure) {
    for (CaseRole r : kObjectRoles) {
      const std::string *lexeme = frame.slot(r);
      if (!lexeme || taboo.count(*lexeme)) continue;
      taboo.insert(*lexeme);
      out.new_taboo.push_back(*lexeme);
      if (options.record_taboo && !user.empty()) store_.record_taboo(user, *lexeme);
    }
  }

  if (out.intent == Intent::Other) {
    out.reason = "no recommendation intent";
    return out;
  }

  auto slot = intent_slot(frame, out.intent);
  if (slot) out.query_word = frame.slots.at(*slot);

  std::vector<Candidate> pool;
  if (out.intent == Intent::Place) {
    const Poi *origin = nullptr;
    if (!out.query_word.empty()) {
      origin = kb.catalog.find(out.query_word);
      if (!origin) {
        out.reason = "unknown place";
        return out;
      }
    }
    pool = place_pool(kb.catalog, origin, options.place_pool);
  } else {
    pool = food_gift_pool(kb.catalog, out.query_word);
  }

  out.query_score = out.query_word.empty()
                        ? std::abs(utterance_egc)
                        : recommend_score(channels(out.query_word, utterance_egc, options.top_l));

  for (const Candidate &cand : pool) {
    if (taboo.count(cand.word)) continue;
    EmotionResult r = evaluate_candidate(frame, out.intent, cand.word, fv, ctx, kb.egc);
    if (r.sign == Sign::Displeasure) continue;
    ChannelValues c = channels(cand.word, r.egc(), options.top_l);
    const double score = recommend_score(c);
    if (score < out.query_score) continue;
    out.items.push_back({cand.word, c.g1, c.g2, c.egc, score, cand.poi_id});
  }
  sort_and_cut(out, limit_for(out.intent, options));
  if (out.items.empty()) out.reason = "no candidate reaches the query score";
  return out;
}

RecommendationList Recommender::keyword_fallback(std::string_view utterance,
                                                 const AffectSnapshot &snap,
                                                 std::string_view user,
                                                 const RecommendOptions &options) const {
  const KnowledgeBase &kb = *kb_;
  RecommendationList out;
  out.keyword_mode = true;
  for (const std::string &token : tokenize(utterance, kb.lexicon)) {
    auto cls = kb.lexicon.noun_class(token);
    if (!cls || *cls == SemanticClass::Other) continue;
    out.intent = *cls == SemanticClass::Place ? Intent::Place : Intent::FoodGift;
    out.query_word = token;
    break;
  }
  if (out.intent == Intent::Other) {
    out.reason = "no recommendation intent";
    return out;
  }

  std::vector<Candidate> pool;
  if (out.intent == Intent::Place) {
    const Poi *origin = kb.catalog.find(out.query_word);
    if (!origin) {
      out.reason = "unknown place";
      return out;
    }
    pool = place_pool(kb.catalog, origin, options.place_pool);
  } else {
    pool = food_gift_pool(kb.catalog, out.query_word);
  }

  out.query_score = recommend_score(channels(out.query_word, 0.0, options.top_l));
  for (const Candidate &cand : pool) {
    if (snap.is_taboo(user, cand.word)) continue;
    ChannelValues c = channels(cand.word, 0.0, options.top_l);
    const double score = recommend_score(c);
    if (score < out.query_score) continue;
    out.items.push_back({cand.word, c.g1, c.g2, c.egc, score, cand.poi_id});
  }
  sort_and_cut(out, limit_for(out.intent, options));
  if (out.items.empty()) out.reason = "no candidate reaches the query score";
  return out;
}

std::vector<std::string> check_invariants(const RecommendationList &list,
                                          const std::function<bool(std::string_view)> &is_taboo,
                                          const RecommendOptions &options) {
  std::vector<std::string> bad;
  const std::size_t limit = list.intent == Intent::Place      ? options.place_limit
                            : list.intent == Intent::FoodGift ? options.food_gift_limit
                                                              : 0;
  if (list.items.size() > limit) bad.push_back("list longer than its cutoff");
  for (std::size_t i = 0; i < list.items.size(); ++i) {
    const ScoredCandidate &c = list.items[i];
    if (c.score < list.query_score) bad.push_back(c.word + " scores below the query");
    if (is_taboo && is_taboo(c.word)) bad.push_back(c.word + " is taboo");
    const double expect = recommend_score(ChannelValues{c.g1, c.g2, c.egc});
    if (std::abs(expect - c.score) > 1e-12) bad.push_back(c.word + " score mismatch");
    if (!(c.g1 > 0 && c.g1 < 1 && c.g2 > 0 && c.g2 < 1)) {
      bad.push_back(c.word + " channel outside (0,1)");
    }
    if (i > 0) {
      const ScoredCandidate &p = list.items[i - 1];
      if (p.score < c.score || (p.score == c.score && !(p.word < c.word))) {
        bad.push_back("order broken at " + c.word);
      }
    }
  }
  return bad;
}

}  // namespace egc
