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

#ifndef EGC_LEXICON_HPP_
#define EGC_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "egc/caseframe.hpp"

namespace egc {

enum class SemanticClass { Place, Food, Gift, Other };

std::string_view to_string(SemanticClass cls);
std::optional<SemanticClass> parse_semantic_class(std::string_view text);

// A verb or adjective lemma with the case-frame templates it accepts, tried
// in file order by the parser.
struct PredicateEntry {
  std::string lemma;
  std::vector<EventType> templates;
  Intent intent = Intent::Other;
  bool adjective = false;
};

// A match of a (possibly multi-token) lexicon surface in a token stream.
template <typename T>
struct SurfaceMatch {
  std::size_t length = 0;
  const T *value = nullptr;
  explicit operator bool() const { return value != nullptr; }
};

// Verb/adjective templates, inflected forms, mood and role markers, function
// words and a noun gazetteer. Immutable once loaded; share by const reference.
//
// File grammar (tab separated, '#' comments):
//   VERB   lemma  event_type  intent      ADJ  lemma  event_type  intent
//   FORM   surface  lemma                 NOUN lexeme  place|food|gift|other
//   MARK   surface  Role[,Role...]        MODAL surface  future|desire
//   COPULA word   DET word   PRON word   CONJ word
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path &path);
  static Lexicon parse(std::istream &in, const std::string &source = "<lexicon>");

  void add_predicate(std::string_view lemma, EventType type, Intent intent, bool adjective);
  void add_form(std::string_view surface, std::string_view lemma);
  void add_noun(std::string_view lexeme, SemanticClass cls);
  void add_marker(std::string_view surface, std::vector<CaseRole> roles);
  void add_modal(std::string_view surface, Mood mood);
  void add_copula(std::string_view word);
  void add_determiner(std::string_view word);
  void add_pronoun(std::string_view word);
  void add_conjunction(std::string_view word);

  // Throws ConfigError if a lemma carries two intents, an attribute template
  // is attached to a verb (or vice versa), or a FORM points to no lemma.
  void validate() const;

  // Longest surface match starting at tokens[pos].
  SurfaceMatch<PredicateEntry> match_predicate(const std::vector<std::string> &tokens,
                                               std::size_t pos) const;
  SurfaceMatch<std::vector<CaseRole>> match_marker(const std::vector<std::string> &tokens,
                                                   std::size_t pos) const;
  SurfaceMatch<Mood> match_modal(const std::vector<std::string> &tokens, std::size_t pos) const;
  // Longest gazetteer noun starting at words[pos]; length 0 if none.
  std::size_t match_noun(const std::vector<std::string> &words, std::size_t pos) const;

  const PredicateEntry *predicate(std::string_view lemma) const;
  std::optional<SemanticClass> noun_class(std::string_view lexeme) const;
  bool is_copula(std::string_view word) const { return copulas_.count(std::string(word)) > 0; }
  bool is_determiner(std::string_view word) const {
    return determiners_.count(std::string(word)) > 0;
  }
  bool is_pronoun(std::string_view word) const { return pronouns_.count(std::string(word)) > 0; }
  bool is_conjunction(std::string_view word) const {
    return conjunctions_.count(std::string(word)) > 0;
  }

  // Lemmas classified to the given intent (both verbs and adjectives).
  std::vector<std::string> intent_lemmas(Intent intent) const;
  Intent intent_of(std::string_view lemma) const;

  const std::map<std::string, SemanticClass> &nouns() const { return nouns_; }

 private:
  template <typename T>
  static SurfaceMatch<T> longest(const std::map<std::string, T> &table, std::size_t max_len,
                                 const std::vector<std::string> &tokens, std::size_t pos);

  std::map<std::string, PredicateEntry> predicates_;
  std::map<std::string, std::string> forms_;  // surface -> lemma
  std::map<std::string, SemanticClass> nouns_;
  std::map<std::string, std::vector<CaseRole>> markers_;
  std::map<std::string, Mood> modals_;
  std::set<std::string> copulas_, determiners_, pronouns_, conjunctions_;
  std::size_t max_surface_ = 1, max_noun_ = 1, max_marker_ = 1, max_modal_ = 1;
};

}  // namespace egc

#endif  // EGC_LEXICON_HPP_
