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

#ifndef EGC_SCORING_HPP_
#define EGC_SCORING_HPP_

#include <Eigen/Core>
#include <cmath>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>

namespace egc {

// 1 / (1 + exp(a + b x)); increasing in x when b < 0.
struct LogisticParams {
  double a = 0.0;
  double b = -1.0;

  friend bool operator==(const LogisticParams &, const LogisticParams &) = default;
};

inline constexpr LogisticParams kHitCountParams{9.374561, -14.8033};
inline constexpr LogisticParams kTfidfParams{9.5457524, -27.19415};

// Clamped into the open interval so the channel never reads exactly 0 or 1.
template <typename Scalar>
Scalar logistic(Scalar x, Scalar a, Scalar b) {
  using std::exp;
  const Scalar y = Scalar(1) / (Scalar(1) + exp(a + b * x));
  const Scalar lo = std::numeric_limits<Scalar>::min();
  const Scalar hi = Scalar(1) - std::numeric_limits<Scalar>::epsilon();
  return y < lo ? lo : y > hi ? hi : y;
}

inline double logistic(double x, const LogisticParams &p) { return logistic(x, p.a, p.b); }

// min(value / max_value, 1). Throws NormalizationError if max_value <= 0 or
// value < 0.
double normalize(double value, double max_value);

struct ChannelValues {
  double g1 = 0.0;
  double g2 = 0.0;
  double egc = 0.0;

  Eigen::Vector3d vector() const { return {g1, g2, egc}; }
};

// Euclidean length of the channel vector.
template <typename Derived>
typename Derived::Scalar recommend_score(const Eigen::MatrixBase<Derived> &channels) {
  static_assert(Derived::SizeAtCompileTime == 3, "three channels");
  return channels.norm();
}

inline double recommend_score(const ChannelValues &c) { return recommend_score(c.vector()); }

struct LogisticFit {
  LogisticParams params;
  double sse = 0.0;
  int iterations = 0;
};

// Least-squares fit of the logistic to the empirical CDF of the samples
// (plotting positions (i - 0.5) / n over the sorted samples). Damped
// Gauss-Newton from (a, b) = (5, -10); stops once an accepted step gains
// less than 1e-12 in SSE or after 10000 iterations. Samples are used as
// given, not rescaled. Throws FitError for fewer than 10 samples, constant
// or non-finite samples, or a non-increasing fit.
LogisticFit fit_logistic_cdf_detailed(std::span<const double> samples);

inline LogisticParams fit_logistic_cdf(std::span<const double> samples) {
  return fit_logistic_cdf_detailed(samples).params;
}

// channel<TAB>a<TAB>b for channels g1 and g2. Missing channels keep defaults.
struct ScoringParams {
  LogisticParams g1 = kHitCountParams;
  LogisticParams g2 = kTfidfParams;

  static ScoringParams load(const std::filesystem::path &path);
  static ScoringParams parse(std::istream &in, const std::string &source = "<params>");
};

}  // namespace egc

#endif  // EGC_SCORING_HPP_
