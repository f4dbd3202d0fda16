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

#include "egc/emotion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

namespace {

constexpr std::string_view kDefaultConfig = R"(
BETA 0.5
SCALE 1.0
ZERO_SIGN +
EVENT V(S) AXES f_S | beta | f_P
EVENT A(S,C) AXES f_S | beta | f_P
EVENT A(S,OF,C) AXES f_S | beta | f_P
EVENT A(S,OT,C) AXES f_S | beta | f_P
EVENT A(S,OM,C) AXES f_S | beta | f_P
EVENT A(S,OS,C) AXES f_S | beta | f_P
EVENT V(S,OF) AXES f_S | f_OT - f_OF | f_P
EVENT V(S,OT) AXES f_S | f_OT - f_OF | f_P
EVENT V(S,OM) AXES f_S | f_OM | f_P
EVENT V(S,OS) AXES f_S - f_OS | beta | f_P
EVENT V(S,O) AXES f_S | f_O | f_P
EVENT V(S,O,OF) AXES f_O | -f_OF | f_P
EVENT V(S,O,OT) AXES f_O | f_OT | f_P
EVENT V(S,O,OM) AXES f_O | f_OM | f_P
EVENT V(S,O,I) AXES f_O | abs(f_I) | f_P
EVENT V(S,O,OC) AXES f_O | beta | f_OC
EVENT A(S,O,C) AXES f_O | beta | f_P
RULE joy WHEN pleasure
RULE distress WHEN displeasure
RULE happy-for WHEN pleasure AND other_fv>0
RULE resentment WHEN pleasure AND other_fv<0
RULE sorry-for WHEN displeasure AND other_fv>0
RULE gloating WHEN displeasure AND other_fv<0
RULE hope WHEN pleasure AND prospective
RULE fear WHEN displeasure AND prospective
RULE satisfaction WHEN pleasure AND confirmed=true
RULE disappointment WHEN pleasure AND confirmed=false
RULE fears-confirmed WHEN displeasure AND confirmed=true
RULE relief WHEN displeasure AND confirmed=false
RULE pride WHEN approved=true AND target=self
RULE admiration WHEN approved=true AND target=other
RULE shame WHEN approved=false AND target=self
RULE disliking WHEN approved=false AND target=other
RULE gratitude WHEN joy AND admiration
RULE anger WHEN distress AND disliking
RULE gratification WHEN joy AND pride
RULE remorse WHEN distress AND shame
)";

constexpr std::pair<CaseRole, std::string_view> kSymbols[] = {
    {CaseRole::Subject, "f_S"},       {CaseRole::Object, "f_O"},
    {CaseRole::ObjectFrom, "f_OF"},   {CaseRole::ObjectTo, "f_OT"},
    {CaseRole::ObjectMutual, "f_OM"}, {CaseRole::ObjectSource, "f_OS"},
    {CaseRole::ObjectContent, "f_OC"}, {CaseRole::Instrument, "f_I"},
    {CaseRole::Predicate, "f_P"},     {CaseRole::Complement, "f_C"},
};

std::vector<std::string> words_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

AxisFormula parse_axis(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw ConfigError("empty axis");
  AxisFormula terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    AxisTerm term;
    if (s[pos] == '+' || s[pos] == '-') {
      term.coeff = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!terms.empty()) {
      throw ConfigError("missing operator in axis '" + std::string(text) + "'");
    }
    std::string_view rest = std::string_view(s).substr(pos);
    std::size_t len = 0;
    if (rest.substr(0, 4) == "beta") {
      term.beta = true;
      len = 4;
    } else {
      bool absolute = rest.substr(0, 4) == "abs(";
      std::size_t start = absolute ? 4 : 0;
      std::size_t end = start;
      while (end < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[end])) ||
                                   rest[end] == '_')) {
        ++end;
      }
      auto role = parse_symbol(rest.substr(start, end - start));
      if (!role) {
        throw ConfigError("unknown symbol in axis '" + std::string(text) + "'");
      }
      if (absolute) {
        if (end >= rest.size() || rest[end] != ')') throw ConfigError("unclosed abs(");
        ++end;
      }
      term.role = *role;
      term.absolute = absolute;
      len = end;
    }
    terms.push_back(term);
    pos += len;
  }
  return terms;
}

Condition parse_condition(const std::string &text, const std::set<std::string> &known) {
  Condition c;
  using K = Condition::Kind;
  if (text == "pleasure") {
    c.kind = K::Pleasure;
  } else if (text == "displeasure") {
    c.kind = K::Displeasure;
  } else if (text == "prospective") {
    c.kind = K::Prospective;
  } else if (text == "target=self" || text == "target=other") {
    c.kind = K::Target;
    c.target = text == "target=self" ? Target::Self : Target::Other;
  } else if (text.rfind("confirmed=", 0) == 0 || text.rfind("approved=", 0) == 0) {
    c.kind = text[0] == 'c' ? K::Confirmed : K::Approved;
    std::string value = text.substr(text.find('=') + 1);
    if (value != "true" && value != "false") throw ConfigError("bad flag '" + text + "'");
    c.flag = value == "true";
  } else if (text.rfind("other_fv", 0) == 0) {
    c.kind = K::OtherFv;
    std::string_view rest = std::string_view(text).substr(8);
    using O = Condition::Op;
    static constexpr std::pair<std::string_view, O> kOps[] = {
        {">=", O::Ge}, {"<=", O::Le}, {"!=", O::Ne}, {">", O::Gt}, {"<", O::Lt}, {"=", O::Eq}};
    bool matched = false;
    for (const auto &[sym, op] : kOps) {
      if (rest.substr(0, sym.size()) == sym) {
        c.op = op;
        if (!parse_double(rest.substr(sym.size()), c.threshold)) {
          throw ConfigError("bad threshold in '" + text + "'");
        }
        matched = true;
        break;
      }
    }
    if (!matched) throw ConfigError("bad comparison '" + text + "'");
  } else if (known.count(text)) {
    c.kind = K::Label;
    c.label = text;
  } else {
    throw ConfigError("unknown condition '" + text + "'");
  }
  return c;
}

bool holds(const Condition &c, Sign sign, const EmotionContext &ctx,
           const std::set<std::string> &fired) {
  using K = Condition::Kind;
  using O = Condition::Op;
  switch (c.kind) {
    case K::Pleasure: return sign == Sign::Pleasure;
    case K::Displeasure: return sign == Sign::Displeasure;
    case K::Target: return ctx.target == c.target;
    case K::Prospective: return ctx.prospective;
    case K::Confirmed: return ctx.confirmed && *ctx.confirmed == c.flag;
    case K::Approved: return ctx.agent_approved && *ctx.agent_approved == c.flag;
    case K::Label: return fired.count(c.label) > 0;
    case K::OtherFv:
      switch (c.op) {
        case O::Gt: return ctx.other_fv > c.threshold;
        case O::Lt: return ctx.other_fv < c.threshold;
        case O::Ge: return ctx.other_fv >= c.threshold;
        case O::Le: return ctx.other_fv <= c.threshold;
        case O::Ne: return ctx.other_fv != c.threshold;
        case O::Eq: return ctx.other_fv == c.threshold;
      }
  }
  return false;
}

std::string_view mood_suffix(Mood m) { return to_string(m); }

}  // namespace

std::string_view to_string(Octant o) {
  static constexpr std::string_view kNames[] = {"I", "II", "III", "IV", "V",
                                                "VI", "VII", "VIII", "on-axis"};
  return kNames[static_cast<std::size_t>(o)];
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Pleasure: return "pleasure";
    case Sign::Displeasure: return "displeasure";
    case Sign::None: return "none";
  }
  return "none";
}

std::string_view symbol_name(CaseRole role) {
  for (const auto &[r, name] : kSymbols) {
    if (r == role) return name;
  }
  return "?";
}

std::optional<CaseRole> parse_symbol(std::string_view symbol) {
  for (const auto &[r, name] : kSymbols) {
    if (name == symbol) return r;
  }
  return std::nullopt;
}

bool is_emotion_name(std::string_view name) {
  return std::find(kEmotionNames.begin(), kEmotionNames.end(), name) != kEmotionNames.end();
}

const EgcConfig &EgcConfig::defaults() {
  static const EgcConfig config = [] {
    std::istringstream in{std::string(kDefaultConfig)};
    return parse(in, "<builtin>");
  }();
  return config;
}

EgcConfig EgcConfig::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), 0, "cannot open emotion config");
  return parse(in, path.string());
}

EgcConfig EgcConfig::parse(std::istream &in, const std::string &source) {
  EgcConfig cfg;
  std::set<std::string> known;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto w = words_of(line);
    try {
      if (w[0] == "BETA" || w[0] == "SCALE") {
        double v = 0;
        if (w.size() != 2 || !parse_double(w[1], v)) throw ConfigError("expected one number");
        if (w[0] == "BETA") {
          cfg.beta = v;
        } else {
          if (v <= 0) throw ConfigError("SCALE must be positive");
          cfg.intensity_scale = v;
        }
      } else if (w[0] == "ZERO_SIGN") {
        if (w.size() != 2 || (w[1] != "+" && w[1] != "-")) throw ConfigError("expected + or -");
        cfg.zero_sign = w[1] == "+" ? ZeroSign::Plus : ZeroSign::Minus;
      } else if (w[0] == "EVENT") {
        if (w.size() < 4 || w[2] != "AXES") throw ConfigError("expected EVENT <type> AXES ...");
        auto type = parse_event_type(w[1]);
        if (!type) throw ConfigError("unknown event type '" + w[1] + "'");
        std::string body = line.substr(line.find("AXES") + 4);
        std::vector<std::string> parts;
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, '|')) parts.push_back(part);
        if (parts.size() != 3) throw ConfigError("expected three axes");
        std::array<AxisFormula, 3> axes;
        for (std::size_t i = 0; i < 3; ++i) axes[i] = parse_axis(parts[i]);
        if (!cfg.axes.emplace(*type, std::move(axes)).second) {
          throw ConfigError("duplicate EVENT " + w[1]);
        }
      } else if (w[0] == "RULE") {
        if (w.size() < 4 || w[2] != "WHEN") throw ConfigError("expected RULE <name> WHEN ...");
        if (!is_emotion_name(w[1])) throw ConfigError("'" + w[1] + "' is not an emotion type");
        EmotionRule rule{w[1], {}};
        for (std::size_t i = 3; i < w.size(); ++i) {
          if ((i - 3) % 2 == 1) {
            if (w[i] != "AND") throw ConfigError("expected AND");
            continue;
          }
          rule.conditions.push_back(parse_condition(w[i], known));
        }
        if (rule.conditions.empty() || (w.size() - 3) % 2 == 0) {
          throw ConfigError("dangling AND");
        }
        known.insert(rule.name);
        cfg.rules.push_back(std::move(rule));
      } else {
        throw ConfigError("unknown directive '" + w[0] + "'");
      }
    } catch (const ConfigError &e) {
      throw LoadError(source, row, e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const ConfigError &e) {
    throw LoadError(source, row, e.what());
  }
  return cfg;
}

void EgcConfig::validate() const {
  for (EventType t : kAllEventTypes) {
    if (!axes.count(t)) {
      throw ConfigError("no axis mapping for " + std::string(to_string(t)));
    }
  }
  std::set<std::string> seen;
  for (const EmotionRule &r : rules) {
    if (!is_emotion_name(r.name)) throw ConfigError("'" + r.name + "' is not an emotion type");
    for (const Condition &c : r.conditions) {
      if (c.kind == Condition::Kind::Label && !seen.count(c.label)) {
        throw ConfigError("rule '" + r.name + "' depends on later label '" + c.label + "'");
      }
    }
    seen.insert(r.name);
  }
}

double resolve_role_fv(const CaseFrame &frame, CaseRole role, const FvResolver &fv) {
  const std::string *lexeme = frame.slot(role);
  if (!lexeme) return 0.0;
  if (role == CaseRole::Subject && frame.mood != Mood::Indicative) {
    std::string qualified = *lexeme + "@" + std::string(mood_suffix(frame.mood));
    if (auto v = fv(qualified)) return *v;
  }
  return fv(*lexeme).value_or(0.0);
}

EmotionVector map_axes(const CaseFrame &frame, const FvResolver &fv, const EgcConfig &config) {
  auto row = config.axes.find(frame.event_type);
  if (row == config.axes.end()) {
    throw ConfigError("no axis mapping for " + std::string(to_string(frame.event_type)));
  }
  EmotionVector v;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const AxisFormula &formula = row->second[axis];
    double sum = 0.0;
    for (const AxisTerm &term : formula) {
      double value;
      if (term.beta) {
        value = config.beta;
        v.provenance[axis].push_back("beta");
      } else if (frame.slot(term.role)) {
        value = resolve_role_fv(frame, term.role, fv);
        if (term.absolute) value = std::abs(value);
        v.provenance[axis].emplace_back(symbol_name(term.role));
      } else if (formula.size() == 1) {
        value = config.beta;
        v.provenance[axis].push_back("beta");
      } else {
        continue;
      }
      sum += term.coeff * value;
    }
    v.f(static_cast<Eigen::Index>(axis)) = sum;
  }
  return v;
}

std::vector<std::string> elicit_emotions(Sign sign, const EmotionContext &context,
                                         const EgcConfig &config) {
  std::vector<std::string> out;
  if (sign == Sign::None) return out;
  std::set<std::string> fired;
  for (const EmotionRule &rule : config.rules) {
    if (fired.count(rule.name)) continue;
    bool all = std::all_of(rule.conditions.begin(), rule.conditions.end(),
                           [&](const Condition &c) { return holds(c, sign, context, fired); });
    if (all) {
      fired.insert(rule.name);
      out.push_back(rule.name);
    }
  }
  return out;
}

EmotionResult evaluate(const CaseFrame &frame, const FvResolver &fv,
                       const EmotionContext &context, const EgcConfig &config) {
  EmotionResult r;
  r.vector = map_axes(frame, fv, config);
  std::tie(r.octant, r.sign) = judge_octant(r.vector.f, config.zero_sign);
  r.degree = degree(r.vector.f);
  r.emotions = elicit_emotions(r.sign, context, config);
  r.intensity_scale = config.intensity_scale;
  return r;
}

}  // namespace egc
