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

#include "egc/caseframe.hpp"

#include <algorithm>
#include <utility>

#include "egc/error.hpp"
#include "egc/lexicon.hpp"
#include "egc/text.hpp"

namespace egc {

namespace {

using R = CaseRole;

struct EventTypeInfo {
  EventType type;
  std::string_view name;
  std::vector<CaseRole> roles;
  bool attribute;
};

const std::vector<EventTypeInfo> &event_table() {
  static const std::vector<EventTypeInfo> table = {
      {EventType::V_S, "V(S)", {R::Subject, R::Predicate}, false},
      {EventType::A_S_C, "A(S,C)", {R::Subject, R::Predicate, R::Complement}, true},
      {EventType::A_S_OF_C, "A(S,OF,C)",
       {R::Subject, R::ObjectFrom, R::Predicate, R::Complement}, true},
      {EventType::A_S_OT_C, "A(S,OT,C)",
       {R::Subject, R::ObjectTo, R::Predicate, R::Complement}, true},
      {EventType::A_S_OM_C, "A(S,OM,C)",
       {R::Subject, R::ObjectMutual, R::Predicate, R::Complement}, true},
      {EventType::A_S_OS_C, "A(S,OS,C)",
       {R::Subject, R::ObjectSource, R::Predicate, R::Complement}, true},
      {EventType::V_S_OF, "V(S,OF)", {R::Subject, R::ObjectFrom, R::Predicate}, false},
      {EventType::V_S_OT, "V(S,OT)", {R::Subject, R::ObjectTo, R::Predicate}, false},
      {EventType::V_S_OM, "V(S,OM)", {R::Subject, R::ObjectMutual, R::Predicate}, false},
      {EventType::V_S_OS, "V(S,OS)", {R::Subject, R::ObjectSource, R::Predicate}, false},
      {EventType::V_S_O, "V(S,O)", {R::Subject, R::Object, R::Predicate}, false},
      {EventType::V_S_O_OF, "V(S,O,OF)",
       {R::Subject, R::Object, R::ObjectFrom, R::Predicate}, false},
      {EventType::V_S_O_OT, "V(S,O,OT)",
       {R::Subject, R::Object, R::ObjectTo, R::Predicate}, false},
      {EventType::V_S_O_OM, "V(S,O,OM)",
       {R::Subject, R::Object, R::ObjectMutual, R::Predicate}, false},
      {EventType::V_S_O_I, "V(S,O,I)",
       {R::Subject, R::Object, R::Instrument, R::Predicate}, false},
      {EventType::V_S_O_OC, "V(S,O,OC)",
       {R::Subject, R::Object, R::ObjectContent, R::Predicate}, false},
      {EventType::A_S_O_C, "A(S,O,C)",
       {R::Subject, R::Object, R::Predicate, R::Complement}, true},
  };
  return table;
}

const EventTypeInfo &info(EventType type) {
  return event_table()[static_cast<std::size_t>(type)];
}

constexpr std::pair<CaseRole, std::string_view> kRoleNames[] = {
    {R::Subject, "Subject"},           {R::Object, "Object"},
    {R::ObjectFrom, "ObjectFrom"},     {R::ObjectTo, "ObjectTo"},
    {R::ObjectMutual, "ObjectMutual"}, {R::ObjectSource, "ObjectSource"},
    {R::ObjectContent, "ObjectContent"}, {R::Instrument, "Instrument"},
    {R::Predicate, "Predicate"},       {R::Complement, "Complement"},
};

// Roles an unmarked noun phrase may take, in preference order.
constexpr CaseRole kBareOrder[] = {R::Object,       R::ObjectTo,      R::ObjectFrom,
                                   R::ObjectMutual, R::ObjectSource, R::ObjectContent,
                                   R::Instrument};

struct Argument {
  const std::vector<CaseRole> *marker = nullptr;
  std::string lexeme;
};

struct Placement {
  std::map<CaseRole, std::string> slots;
  std::size_t placed = 0;
  bool complete = false;
};

bool needs(EventType type, CaseRole role) {
  const auto &roles = info(type).roles;
  return std::find(roles.begin(), roles.end(), role) != roles.end();
}

Placement place(EventType type, const std::vector<Argument> &args) {
  Placement p;
  auto open = [&](CaseRole r) { return needs(type, r) && !p.slots.count(r); };
  for (const Argument &arg : args) {
    std::optional<CaseRole> chosen;
    if (arg.marker) {
      for (CaseRole r : *arg.marker) {
        if (open(r)) {
          chosen = r;
          break;
        }
      }
    } else {
      for (CaseRole r : kBareOrder) {
        if (open(r)) {
          chosen = r;
          break;
        }
      }
    }
    if (chosen) {
      p.slots[*chosen] = arg.lexeme;
      ++p.placed;
    }
  }
  p.complete = true;
  for (CaseRole r : info(type).roles) {
    if (r == R::Subject || r == R::Predicate || r == R::Complement) continue;
    if (!p.slots.count(r)) p.complete = false;
  }
  return p;
}

class ClauseParser {
 public:
  ClauseParser(const Lexicon &lex, std::string_view raw) : lex_(lex), raw_(raw) {}

  void parse(const std::vector<std::string> &tokens, std::vector<CaseFrame> &out) const {
    std::size_t pred_pos = tokens.size();
    std::size_t subject_end = 0;
    Mood mood = Mood::Indicative;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (auto modal = lex_.match_modal(tokens, i)) {
        std::size_t j = i + modal.length;
        while (j < tokens.size() && lex_.is_determiner(tokens[j])) ++j;
        if (lex_.match_predicate(tokens, j)) {
          mood = *modal.value;
          subject_end = i;
          pred_pos = j;
          break;
        }
      }
      if (lex_.match_predicate(tokens, i)) {
        subject_end = i;
        pred_pos = i;
        break;
      }
    }
    if (pred_pos == tokens.size()) return;

    auto pred = lex_.match_predicate(tokens, pred_pos);
    const PredicateEntry &entry = *pred.value;

    std::vector<Argument> args;
    const std::vector<CaseRole> *pending = nullptr;
    std::size_t k = pred_pos + pred.length;
    std::size_t rest = tokens.size();
    while (k < tokens.size()) {
      if (auto marker = lex_.match_marker(tokens, k)) {
        std::size_t after = k + marker.length;
        auto next = lex_.match_predicate(tokens, after);
        if (next && !next.value->adjective) {
          // "to see ...": an infinitive starts the next clause.
          rest = after;
          break;
        }
        pending = marker.value;
        k = after;
        continue;
      }
      if (skippable(tokens[k])) {
        ++k;
        continue;
      }
      if (auto next = lex_.match_predicate(tokens, k)) {
        if (!next.value->adjective) {
          rest = k;
          break;
        }
        k += next.length;  // adjectives inside noun phrases modify, they do not predicate
        continue;
      }
      std::vector<std::string> phrase;
      while (k < tokens.size() && !lex_.match_marker(tokens, k) && !skippable(tokens[k]) &&
             !lex_.match_predicate(tokens, k)) {
        phrase.push_back(tokens[k]);
        ++k;
      }
      args.push_back({pending, join(phrase, " ")});
      pending = nullptr;
    }

    std::optional<std::pair<EventType, Placement>> best;
    for (EventType t : entry.templates) {
      Placement p = place(t, args);
      if (!p.complete) continue;
      if (!best || p.placed > best->second.placed) best.emplace(t, std::move(p));
    }
    if (best) {
      CaseFrame frame;
      frame.event_type = best->first;
      frame.slots = std::move(best->second.slots);
      frame.slots[R::Subject] = subject(tokens, subject_end);
      frame.slots[R::Predicate] = entry.lemma;
      if (needs(best->first, R::Complement)) frame.slots[R::Complement] = entry.lemma;
      frame.raw_text = std::string(raw_);
      frame.mood = mood;
      out.push_back(std::move(frame));
    }

    if (rest < tokens.size()) {
      parse(std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(rest),
                                     tokens.end()),
            out);
    }
  }

 private:
  bool skippable(const std::string &token) const {
    return lex_.is_determiner(token) || lex_.is_copula(token) || lex_.is_pronoun(token);
  }

  std::string subject(const std::vector<std::string> &tokens, std::size_t end) const {
    std::vector<std::string> phrase;
    for (std::size_t i = 0; i < end; ++i) {
      const std::string &t = tokens[i];
      if (lex_.is_pronoun(t)) return std::string(kSpeaker);
      if (lex_.is_determiner(t) || lex_.is_copula(t) || lex_.match_marker(tokens, i)) {
        if (!phrase.empty() && !lex_.is_determiner(t)) break;
        continue;
      }
      phrase.push_back(t);
    }
    return phrase.empty() ? std::string(kSpeaker) : join(phrase, " ");
  }

  const Lexicon &lex_;
  std::string_view raw_;
};

}  // namespace

std::string_view to_string(CaseRole role) {
  for (const auto &[r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "?";
}

std::string_view to_string(EventType type) { return info(type).name; }

std::string_view to_string(Mood mood) {
  switch (mood) {
    case Mood::Indicative: return "indicative";
    case Mood::Future: return "future";
    case Mood::Desire: return "desire";
  }
  return "indicative";
}

std::string_view to_string(Intent intent) {
  switch (intent) {
    case Intent::Place: return "Place";
    case Intent::FoodGift: return "FoodGift";
    case Intent::Other: return "Other";
  }
  return "Other";
}

std::optional<CaseRole> parse_case_role(std::string_view text) {
  for (const auto &[r, name] : kRoleNames) {
    if (name == text) return r;
  }
  return std::nullopt;
}

std::optional<EventType> parse_event_type(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact.push_back(c);
  }
  for (const auto &e : event_table()) {
    if (e.name == compact) return e.type;
  }
  return std::nullopt;
}

std::optional<Mood> parse_mood(std::string_view text) {
  if (text == "indicative") return Mood::Indicative;
  if (text == "future") return Mood::Future;
  if (text == "desire") return Mood::Desire;
  return std::nullopt;
}

std::optional<Intent> parse_intent(std::string_view text) {
  if (text == "Place") return Intent::Place;
  if (text == "FoodGift") return Intent::FoodGift;
  if (text == "Other") return Intent::Other;
  return std::nullopt;
}

std::span<const CaseRole> required_roles(EventType type) { return info(type).roles; }

bool is_attribute_type(EventType type) { return info(type).attribute; }

bool CaseFrame::valid() const {
  const auto &roles = required_roles(event_type);
  if (slots.size() != roles.size()) return false;
  for (CaseRole r : roles) {
    auto it = slots.find(r);
    if (it == slots.end() || it->second.empty()) return false;
    if (normalize_lexeme(it->second) != it->second) return false;
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view text) { return split_words(text); }

std::vector<std::string> tokenize(std::string_view text, const Lexicon &lexicon) {
  std::vector<std::string> words = split_words(text);
  std::vector<std::string> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size();) {
    std::size_t len = lexicon.match_noun(words, i);
    if (len > 1) {
      out.push_back(join(words, " ", i, i + len));
      i += len;
    } else {
      out.push_back(words[i]);
      ++i;
    }
  }
  return out;
}

std::vector<CaseFrame> parse_utterance(std::string_view text, const Lexicon &lexicon) {
  std::vector<std::string> tokens = tokenize(text, lexicon);
  std::vector<CaseFrame> frames;
  ClauseParser parser(lexicon, text);
  std::vector<std::string> clause;
  for (std::size_t i = 0; i <= tokens.size(); ++i) {
    if (i == tokens.size() || lexicon.is_conjunction(tokens[i])) {
      if (!clause.empty()) parser.parse(clause, frames);
      clause.clear();
    } else {
      clause.push_back(tokens[i]);
    }
  }
  if (frames.empty()) {
    throw ParseFailure("no predicate matched in \"" + std::string(text) + "\"");
  }
  return frames;
}

Intent classify_intent(const CaseFrame &frame, const Lexicon &lexicon) {
  const std::string *lemma = frame.slot(CaseRole::Predicate);
  return lemma ? lexicon.intent_of(*lemma) : Intent::Other;
}

}  // namespace egc
