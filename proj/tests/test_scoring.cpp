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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "egc/error.hpp"
#include "egc/scoring.hpp"
#include "reference_tables.hpp"

namespace {

// Quantiles of the logistic CDF at the Hazen plotting positions.
std::vector<double> logistic_quantiles(double a, double b, int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    const double p = (i + 0.5) / n;
    xs.push_back((std::log(1.0 / p - 1.0) - a) / b);
  }
  return xs;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("logistic endpoints with the shipped constants") {
  CHECK(std::abs(egc::logistic(0.0, egc::kHitCountParams) - 8.485e-5) < 1e-7);
  const double m1 = egc::kHitCountParams.a / -egc::kHitCountParams.b;
  const double m2 = egc::kTfidfParams.a / -egc::kTfidfParams.b;
  CHECK(std::abs(egc::logistic(m1, egc::kHitCountParams) - 0.5) < 1e-12);
  CHECK(std::abs(egc::logistic(m2, egc::kTfidfParams) - 0.5) < 1e-12);
  // Six-decimal abscissae; the first is one unit high in its last digit.
  CHECK(std::abs(m1 - 0.633276) <= 1e-6);
  CHECK(std::abs(m2 - 0.351022) <= 1e-6);
  CHECK(std::abs(egc::logistic(0.633276, egc::kHitCountParams) - 0.5) > 1e-9);
}

TEST_CASE("logistic stays inside (0,1) and increases") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> x(-100.0, 100.0);
  for (const auto &p : {egc::kHitCountParams, egc::kTfidfParams, egc::LogisticParams{0.0, -1.0}}) {
    for (int i = 0; i < 2000; ++i) {
      double u = x(rng), v = x(rng);
      if (u > v) std::swap(u, v);
      const double fu = egc::logistic(u, p), fv = egc::logistic(v, p);
      CHECK(fu > 0.0);
      CHECK(fu < 1.0);
      CHECK(fv < 1.0);
      CHECK(fu <= fv);
    }
    CHECK(egc::logistic(1e6, p) < 1.0);
    CHECK(egc::logistic(-1e6, p) > 0.0);
    CHECK(egc::logistic(0.2, p) < egc::logistic(0.3, p));
  }
}

TEST_CASE("normalize") {
  CHECK(egc::normalize(50, 100) == 0.5);
  CHECK(egc::normalize(100, 100) == 1.0);
  CHECK(egc::normalize(0, 100) == 0.0);
  CHECK(egc::normalize(150, 100) == 1.0);
  CHECK_THROWS_AS(egc::normalize(1, 0), egc::NormalizationError);
  CHECK_THROWS_AS(egc::normalize(1, -3), egc::NormalizationError);
  CHECK_THROWS_AS(egc::normalize(-1, 3), egc::NormalizationError);
}

TEST_CASE("combined score of reference rows") {
  for (const auto &row : egc_test::kSpotTable) {
    CHECK(std::abs(egc::recommend_score(egc::ChannelValues{row.g1, row.g2, row.egc}) - row.rec) <
          1e-3);
  }
  for (std::size_t i = 1; i < egc_test::kFoodTable.size(); ++i) {
    const auto &row = egc_test::kFoodTable[i];
    CHECK(std::abs(egc::recommend_score(egc::ChannelValues{row.g1, row.g2, row.egc}) - row.rec) <
          1e-3);
  }
  CHECK(egc::recommend_score(egc::ChannelValues{0, 0, 0}) == 0.0);
}

TEST_CASE("score properties") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0), signed_unit(-2.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    egc::ChannelValues c{unit(rng), unit(rng), signed_unit(rng)};
    const double s = egc::recommend_score(c);
    CHECK(s == egc::recommend_score(egc::ChannelValues{c.g1, c.g2, -c.egc}));
    const double m = std::max({std::abs(c.g1), std::abs(c.g2), std::abs(c.egc)});
    CHECK(s >= m);
    CHECK(s <= std::sqrt(3.0) * m + 1e-15);
    egc::ChannelValues bigger = c;
    bigger.g1 += unit(rng);
    CHECK(egc::recommend_score(bigger) >= s);
    bigger = c;
    bigger.egc += std::copysign(unit(rng), c.egc);
    CHECK(egc::recommend_score(bigger) >= s);
  }
  CHECK(egc::recommend_score(Eigen::Vector3f(3.f, 4.f, 0.f)) == doctest::Approx(5.0));
}

TEST_CASE("fit recovers generating parameters") {
  auto xs = logistic_quantiles(9.0, -15.0, 200);
  auto fit = egc::fit_logistic_cdf_detailed(xs);
  CHECK(rel(fit.params.a, 9.0) < 1e-3);
  CHECK(rel(fit.params.b, -15.0) < 1e-3);
  CHECK(fit.sse < 1e-12);
  CHECK(fit.iterations > 0);
  // Input order does not matter.
  std::vector<double> shuffled = xs;
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937(1));
  auto again = egc::fit_logistic_cdf(shuffled);
  CHECK(again == fit.params);
}

TEST_CASE("halving the inputs doubles the fitted slope") {
  auto xs = logistic_quantiles(9.0, -15.0, 200);
  const auto base = egc::fit_logistic_cdf(xs);
  for (double &x : xs) x /= 2.0;
  const auto half = egc::fit_logistic_cdf(xs);
  CHECK(rel(std::abs(half.b), 2.0 * std::abs(base.b)) < 1e-3);
  CHECK(rel(half.a, base.a) < 1e-3);
}

TEST_CASE("fit recovers the shipped channel curves") {
  for (const auto &p : {egc::kHitCountParams, egc::kTfidfParams}) {
    auto fit = egc::fit_logistic_cdf(logistic_quantiles(p.a, p.b, 300));
    CHECK(rel(fit.a, p.a) < 1e-3);
    CHECK(rel(fit.b, p.b) < 1e-3);
  }
}

TEST_CASE("degenerate samples are rejected") {
  CHECK_THROWS_AS(egc::fit_logistic_cdf(std::vector<double>(50, 0.3)), egc::FitError);
  CHECK_THROWS_AS(egc::fit_logistic_cdf(std::vector<double>{0.1, 0.2, 0.3}), egc::FitError);
  std::vector<double> with_nan = logistic_quantiles(9, -15, 20);
  with_nan[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(egc::fit_logistic_cdf(with_nan), egc::FitError);
  std::vector<double> fine = logistic_quantiles(9, -15, 20);
  CHECK_NOTHROW(egc::fit_logistic_cdf(fine));
}

TEST_CASE("parameter files") {
  auto shipped = egc::ScoringParams::load(EGC_SOURCE_DATA_DIR "/params.tsv");
  CHECK(shipped.g1 == egc::kHitCountParams);
  CHECK(shipped.g2 == egc::kTfidfParams);
  CHECK(shipped.g1.a == 9.374561);
  CHECK(shipped.g1.b == -14.8033);
  CHECK(shipped.g2.a == 9.5457524);
  CHECK(shipped.g2.b == -27.19415);
  auto rejects = [](const std::string &text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(egc::ScoringParams::parse(in), egc::LoadError);
  };
  rejects("g1\t1\t0\n");
  rejects("g1\t1\t2\n");
  rejects("g3\t1\t-2\n");
  rejects("g1\t1\n");
  std::istringstream partial("g2\t1\t-2\n");
  auto p = egc::ScoringParams::parse(partial);
  CHECK(p.g1 == egc::kHitCountParams);
  CHECK(p.g2 == egc::LogisticParams{1, -2});
}
