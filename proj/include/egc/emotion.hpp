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

#ifndef EGC_EMOTION_HPP_
#define EGC_EMOTION_HPP_

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egc/caseframe.hpp"

namespace egc {

enum class Octant { I, II, III, IV, V, VI, VII, VIII, OnAxis };
enum class Sign { Pleasure, Displeasure, None };
enum class ZeroSign { Plus, Minus };

std::string_view to_string(Octant o);
std::string_view to_string(Sign s);

// Pleasure/displeasure of each octant, indexed by Octant::I..VIII.
inline constexpr std::array<Sign, 8> kOctantSign = {
    Sign::Pleasure,    Sign::Displeasure, Sign::Pleasure,    Sign::Displeasure,
    Sign::Displeasure, Sign::Pleasure,    Sign::Displeasure, Sign::Pleasure,
};

inline int sign_value(Sign s) { return s == Sign::Pleasure ? 1 : s == Sign::Displeasure ? -1 : 0; }

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

// Octant of a 3-axis emotion vector. Zero components take the zero_sign
// policy; only the origin is on-axis and arouses nothing.
template <typename Derived>
std::pair<Octant, Sign> judge_octant(const Eigen::MatrixBase<Derived> &v,
                                     ZeroSign zero_sign = ZeroSign::Plus) {
  using Scalar = typename Derived::Scalar;
  static_assert(Derived::SizeAtCompileTime == 3, "emotion vectors have three axes");
  if ((v.array() == Scalar(0)).all()) return {Octant::OnAxis, Sign::None};
  auto positive = [&](Eigen::Index i) {
    return v(i) > Scalar(0) || (v(i) == Scalar(0) && zero_sign == ZeroSign::Plus);
  };
  const bool p1 = positive(0), p2 = positive(1), p3 = positive(2);
  // Upper half-space (f3 > 0) walks I..IV counter-clockwise, lower V..VIII.
  int quadrant = p1 && p2 ? 0 : !p1 && p2 ? 1 : !p1 && !p2 ? 2 : 3;
  auto o = static_cast<Octant>(quadrant + (p3 ? 0 : 4));
  return {o, kOctantSign[static_cast<std::size_t>(o)]};
}

// ||v|| / sqrt(3): 1 for the unit-magnitude diagonal, 0 only at the origin.
template <typename Derived>
typename Derived::Scalar degree(const Eigen::MatrixBase<Derived> &v) {
  using std::sqrt;
  using Scalar = typename Derived::Scalar;
  return v.norm() / sqrt(Scalar(3));
}

struct EmotionVector {
  Vector3<double> f = Vector3<double>::Zero();
  // Symbols that composed each axis, e.g. {"f_OT", "f_OF"} or {"beta"}.
  std::array<std::vector<std::string>, 3> provenance;
};

// One summand of an axis formula: +/- f_X, abs(f_X), or the dummy beta.
struct AxisTerm {
  bool beta = false;
  CaseRole role = CaseRole::Subject;
  double coeff = 1.0;
  bool absolute = false;

  friend bool operator==(const AxisTerm &, const AxisTerm &) = default;
};

using AxisFormula = std::vector<AxisTerm>;

std::string_view symbol_name(CaseRole role);  // "f_OT"
std::optional<CaseRole> parse_symbol(std::string_view symbol);

enum class Target { Self, Other };

struct EmotionContext {
  Target target = Target::Other;
  double other_fv = 0.0;
  bool prospective = false;
  std::optional<bool> confirmed;
  std::optional<bool> agent_approved;
};

struct Condition {
  enum class Kind { Pleasure, Displeasure, Target, OtherFv, Prospective, Confirmed, Approved, Label };
  enum class Op { Gt, Lt, Ge, Le, Ne, Eq };

  Kind kind = Kind::Pleasure;
  Target target = Target::Other;
  Op op = Op::Gt;
  double threshold = 0.0;
  bool flag = true;
  std::string label;
};

struct EmotionRule {
  std::string name;
  std::vector<Condition> conditions;  // conjunction
};

// The twenty emotion types in six groups.
inline constexpr std::array<std::string_view, 20> kEmotionNames = {
    "joy",          "distress",     "happy-for", "gloating",        "resentment",
    "sorry-for",    "hope",         "fear",      "satisfaction",    "relief",
    "fears-confirmed", "disappointment", "pride", "admiration",     "shame",
    "disliking",    "gratitude",    "anger",     "gratification",   "remorse",
};

bool is_emotion_name(std::string_view name);

// Axis table plus rule table. Text grammar:
//   BETA <real>    SCALE <real>    ZERO_SIGN +|-
//   EVENT <type> AXES <axis> | <axis> | <axis>
//   RULE <emotion> WHEN <cond> [AND <cond>]...
// An axis is a sum of f_X, -f_X, abs(f_X) terms or the word beta.
struct EgcConfig {
  double beta = 0.5;
  double intensity_scale = 1.0;
  ZeroSign zero_sign = ZeroSign::Plus;
  std::map<EventType, std::array<AxisFormula, 3>> axes;
  std::vector<EmotionRule> rules;

  static const EgcConfig &defaults();
  static EgcConfig load(const std::filesystem::path &path);
  static EgcConfig parse(std::istream &in, const std::string &source = "<egc.conf>");

  // Throws ConfigError unless every event type has a row and every rule
  // names one of the twenty emotions, referring only to earlier labels.
  void validate() const;
};

// Favorite value of a lexeme, nullopt when the store has none.
using FvResolver = std::function<std::optional<double>(std::string_view lexeme)>;

// Resolves the FV feeding a role. Subjects of non-indicative frames are
// looked up as "<lexeme>@<mood>" first. Unknown lexemes resolve to 0.
double resolve_role_fv(const CaseFrame &frame, CaseRole role, const FvResolver &fv);

// A missing single-symbol axis takes beta; within a sum, missing operands add 0.
EmotionVector map_axes(const CaseFrame &frame, const FvResolver &fv, const EgcConfig &config);

std::vector<std::string> elicit_emotions(Sign sign, const EmotionContext &context,
                                         const EgcConfig &config);

struct EmotionResult {
  EmotionVector vector;
  Octant octant = Octant::OnAxis;
  Sign sign = Sign::None;
  double degree = 0.0;
  std::vector<std::string> emotions;
  double intensity_scale = 1.0;

  // Signed scalar handed to scoring.
  double egc() const { return sign_value(sign) * degree * intensity_scale; }
};

EmotionResult evaluate(const CaseFrame &frame, const FvResolver &fv,
                       const EmotionContext &context, const EgcConfig &config);

}  // namespace egc

#endif  // EGC_EMOTION_HPP_
