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

#ifndef EGC_CASEFRAME_HPP_
#define EGC_CASEFRAME_HPP_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace egc {

class Lexicon;

// Deep cases of a predicate-centred case frame.
enum class CaseRole {
  Subject,
  Object,
  ObjectFrom,
  ObjectTo,
  ObjectMutual,
  ObjectSource,
  ObjectContent,
  Instrument,
  Predicate,
  Complement,
};

// Argument patterns of verbs (V) and attributes/adjectives (A). Each one fixes
// the set of roles its frames carry and which favorite values feed each axis.
enum class EventType {
  V_S,
  A_S_C,
  A_S_OF_C,
  A_S_OT_C,
  A_S_OM_C,
  A_S_OS_C,
  V_S_OF,
  V_S_OT,
  V_S_OM,
  V_S_OS,
  V_S_O,
  V_S_O_OF,
  V_S_O_OT,
  V_S_O_OM,
  V_S_O_I,
  V_S_O_OC,
  A_S_O_C,
};

inline constexpr std::array<EventType, 17> kAllEventTypes = {
    EventType::V_S,      EventType::A_S_C,    EventType::A_S_OF_C, EventType::A_S_OT_C,
    EventType::A_S_OM_C, EventType::A_S_OS_C, EventType::V_S_OF,   EventType::V_S_OT,
    EventType::V_S_OM,   EventType::V_S_OS,   EventType::V_S_O,    EventType::V_S_O_OF,
    EventType::V_S_O_OT, EventType::V_S_O_OM, EventType::V_S_O_I,  EventType::V_S_O_OC,
    EventType::A_S_O_C,
};

// Grammatical mood marked by a modal before the predicate ("would like to").
enum class Mood { Indicative, Future, Desire };

enum class Intent { Place, FoodGift, Other };

std::string_view to_string(CaseRole role);
std::string_view to_string(EventType type);  // "V(S,OT)" notation
std::string_view to_string(Mood mood);
std::string_view to_string(Intent intent);
std::optional<CaseRole> parse_case_role(std::string_view text);
std::optional<EventType> parse_event_type(std::string_view text);
std::optional<Mood> parse_mood(std::string_view text);
std::optional<Intent> parse_intent(std::string_view text);

// Roles mandated by an event type, in CaseRole order.
std::span<const CaseRole> required_roles(EventType type);
bool is_attribute_type(EventType type);

// Reserved lexeme for the first-person speaker and for an elided subject.
inline constexpr std::string_view kSpeaker = "speaker";

struct CaseFrame {
  EventType event_type = EventType::V_S;
  std::map<CaseRole, std::string> slots;
  std::string raw_text;
  Mood mood = Mood::Indicative;

  const std::string *slot(CaseRole role) const {
    auto it = slots.find(role);
    return it == slots.end() ? nullptr : &it->second;
  }
  const std::string &predicate() const { return slots.at(CaseRole::Predicate); }

  // slots.keys == required_roles(event_type), all lexemes non-empty lowercase.
  bool valid() const;

  friend bool operator==(const CaseFrame &, const CaseFrame &) = default;
};

// Lowercase word tokens with gazetteer nouns merged (longest match first).
std::vector<std::string> tokenize(std::string_view text, const Lexicon &lexicon);
// Same without merging.
std::vector<std::string> tokenize(std::string_view text);

// One frame per matched predicate, clause by clause. Throws ParseFailure when
// no predicate can be matched.
std::vector<CaseFrame> parse_utterance(std::string_view text, const Lexicon &lexicon);

Intent classify_intent(const CaseFrame &frame, const Lexicon &lexicon);

}  // namespace egc

#endif  // EGC_CASEFRAME_HPP_
