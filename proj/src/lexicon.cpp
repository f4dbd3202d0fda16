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

#include "egc/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

namespace {

std::size_t token_count(const std::string &surface) {
  return static_cast<std::size_t>(std::count(surface.begin(), surface.end(), ' ')) + 1;
}

// Surfaces are stored in tokenized form so "I'd like to" and "d like to" agree.
std::string surface_key(std::string_view surface) { return join(split_words(surface), " "); }

}  // namespace

std::string_view to_string(SemanticClass cls) {
  switch (cls) {
    case SemanticClass::Place: return "place";
    case SemanticClass::Food: return "food";
    case SemanticClass::Gift: return "gift";
    case SemanticClass::Other: return "other";
  }
  return "other";
}

std::optional<SemanticClass> parse_semantic_class(std::string_view text) {
  if (text == "place") return SemanticClass::Place;
  if (text == "food") return SemanticClass::Food;
  if (text == "gift") return SemanticClass::Gift;
  if (text == "other") return SemanticClass::Other;
  return std::nullopt;
}

Lexicon Lexicon::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), 0, "cannot open lexicon");
  return parse(in, path.string());
}

Lexicon Lexicon::parse(std::istream &in, const std::string &source) {
  Lexicon lex;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    const std::string &kind = f[0];
    auto need = [&](std::size_t n) {
      if (f.size() != n) {
        throw LoadError(source, row,
                        kind + " record needs " + std::to_string(n - 1) + " fields");
      }
      for (std::size_t i = 1; i < n; ++i) {
        if (f[i].empty()) throw LoadError(source, row, "empty field");
      }
    };
    if (kind == "VERB" || kind == "ADJ") {
      need(4);
      auto type = parse_event_type(f[2]);
      if (!type) throw LoadError(source, row, "unknown event type '" + f[2] + "'");
      auto intent = parse_intent(f[3]);
      if (!intent) throw LoadError(source, row, "unknown intent class '" + f[3] + "'");
      try {
        lex.add_predicate(f[1], *type, *intent, kind == "ADJ");
      } catch (const ConfigError &e) {
        throw LoadError(source, row, e.what());
      }
    } else if (kind == "FORM") {
      need(3);
      lex.add_form(f[1], f[2]);
    } else if (kind == "NOUN") {
      need(3);
      auto cls = parse_semantic_class(f[2]);
      if (!cls) throw LoadError(source, row, "unknown semantic class '" + f[2] + "'");
      lex.add_noun(f[1], *cls);
    } else if (kind == "MARK") {
      need(3);
      std::vector<CaseRole> roles;
      std::stringstream ss(f[2]);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto role = parse_case_role(item);
        if (!role) throw LoadError(source, row, "unknown case role '" + item + "'");
        roles.push_back(*role);
      }
      lex.add_marker(f[1], std::move(roles));
    } else if (kind == "MODAL") {
      need(3);
      auto mood = parse_mood(f[2]);
      if (!mood || *mood == Mood::Indicative) {
        throw LoadError(source, row, "modal mood must be future or desire");
      }
      lex.add_modal(f[1], *mood);
    } else if (kind == "COPULA") {
      need(2);
      lex.add_copula(f[1]);
    } else if (kind == "DET") {
      need(2);
      lex.add_determiner(f[1]);
    } else if (kind == "PRON") {
      need(2);
      lex.add_pronoun(f[1]);
    } else if (kind == "CONJ") {
      need(2);
      lex.add_conjunction(f[1]);
    } else {
      throw LoadError(source, row, "unknown record type '" + kind + "'");
    }
  }
  try {
    lex.validate();
  } catch (const ConfigError &e) {
    throw LoadError(source, row, e.what());
  }
  return lex;
}

void Lexicon::add_predicate(std::string_view lemma, EventType type, Intent intent,
                            bool adjective) {
  if (is_attribute_type(type) != adjective) {
    throw ConfigError("'" + std::string(lemma) + "': " + std::string(to_string(type)) +
                      (adjective ? " is not an attribute template" : " needs an ADJ record"));
  }
  std::string key = surface_key(lemma);
  auto [it, inserted] = predicates_.try_emplace(key);
  PredicateEntry &entry = it->second;
  if (inserted) {
    entry.lemma = key;
    entry.intent = intent;
    entry.adjective = adjective;
  } else if (entry.intent != intent) {
    throw ConfigError("'" + key + "' listed under two intents");
  } else if (entry.adjective != adjective) {
    throw ConfigError("'" + key + "' is both VERB and ADJ");
  }
  if (std::find(entry.templates.begin(), entry.templates.end(), type) == entry.templates.end()) {
    entry.templates.push_back(type);
  }
  max_surface_ = std::max(max_surface_, token_count(key));
}

void Lexicon::add_form(std::string_view surface, std::string_view lemma) {
  std::string key = surface_key(surface);
  forms_[key] = surface_key(lemma);
  max_surface_ = std::max(max_surface_, token_count(key));
}

void Lexicon::add_noun(std::string_view lexeme, SemanticClass cls) {
  std::string key = surface_key(lexeme);
  nouns_[key] = cls;
  max_noun_ = std::max(max_noun_, token_count(key));
}

void Lexicon::add_marker(std::string_view surface, std::vector<CaseRole> roles) {
  std::string key = surface_key(surface);
  markers_[key] = std::move(roles);
  max_marker_ = std::max(max_marker_, token_count(key));
}

void Lexicon::add_modal(std::string_view surface, Mood mood) {
  std::string key = surface_key(surface);
  modals_[key] = mood;
  max_modal_ = std::max(max_modal_, token_count(key));
}

void Lexicon::add_copula(std::string_view word) { copulas_.insert(normalize_lexeme(word)); }
void Lexicon::add_determiner(std::string_view word) { determiners_.insert(normalize_lexeme(word)); }
void Lexicon::add_pronoun(std::string_view word) { pronouns_.insert(normalize_lexeme(word)); }
void Lexicon::add_conjunction(std::string_view word) {
  conjunctions_.insert(normalize_lexeme(word));
}

void Lexicon::validate() const {
  for (const auto &[surface, lemma] : forms_) {
    if (!predicates_.count(lemma)) {
      throw ConfigError("form '" + surface + "' points to unknown lemma '" + lemma + "'");
    }
  }
  for (const auto &[lemma, entry] : predicates_) {
    if (entry.templates.empty()) throw ConfigError("'" + lemma + "' has no template");
    for (EventType t : entry.templates) {
      if (is_attribute_type(t) != entry.adjective) {
        throw ConfigError("'" + lemma + "' mixes verb and attribute templates");
      }
    }
  }
  for (const auto &[surface, roles] : markers_) {
    if (roles.empty()) throw ConfigError("marker '" + surface + "' has no role");
    for (CaseRole r : roles) {
      if (r == CaseRole::Subject || r == CaseRole::Predicate || r == CaseRole::Complement) {
        throw ConfigError("marker '" + surface + "' may only introduce object roles");
      }
    }
  }
}

template <typename T>
SurfaceMatch<T> Lexicon::longest(const std::map<std::string, T> &table, std::size_t max_len,
                                 const std::vector<std::string> &tokens, std::size_t pos) {
  for (std::size_t len = std::min(max_len, tokens.size() - pos); len >= 1; --len) {
    auto it = table.find(join(tokens, " ", pos, pos + len));
    if (it != table.end()) return {len, &it->second};
  }
  return {};
}

SurfaceMatch<PredicateEntry> Lexicon::match_predicate(const std::vector<std::string> &tokens,
                                                      std::size_t pos) const {
  if (pos >= tokens.size()) return {};
  for (std::size_t len = std::min(max_surface_, tokens.size() - pos); len >= 1; --len) {
    std::string key = join(tokens, " ", pos, pos + len);
    if (auto it = predicates_.find(key); it != predicates_.end()) return {len, &it->second};
    if (auto f = forms_.find(key); f != forms_.end()) {
      return {len, &predicates_.at(f->second)};
    }
  }
  return {};
}

SurfaceMatch<std::vector<CaseRole>> Lexicon::match_marker(const std::vector<std::string> &tokens,
                                                          std::size_t pos) const {
  if (pos >= tokens.size()) return {};
  return longest(markers_, max_marker_, tokens, pos);
}

SurfaceMatch<Mood> Lexicon::match_modal(const std::vector<std::string> &tokens,
                                        std::size_t pos) const {
  if (pos >= tokens.size()) return {};
  return longest(modals_, max_modal_, tokens, pos);
}

std::size_t Lexicon::match_noun(const std::vector<std::string> &words, std::size_t pos) const {
  if (pos >= words.size()) return 0;
  return longest(nouns_, max_noun_, words, pos).length;
}

const PredicateEntry *Lexicon::predicate(std::string_view lemma) const {
  auto it = predicates_.find(std::string(lemma));
  return it == predicates_.end() ? nullptr : &it->second;
}

std::optional<SemanticClass> Lexicon::noun_class(std::string_view lexeme) const {
  auto it = nouns_.find(std::string(lexeme));
  if (it == nouns_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Lexicon::intent_lemmas(Intent intent) const {
  std::vector<std::string> out;
  for (const auto &[lemma, entry] : predicates_) {
    if (entry.intent == intent) out.push_back(lemma);
  }
  return out;
}

Intent Lexicon::intent_of(std::string_view lemma) const {
  const PredicateEntry *entry = predicate(lemma);
  return entry ? entry->intent : Intent::Other;
}

}  // namespace egc
