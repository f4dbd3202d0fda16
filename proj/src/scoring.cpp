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

#include "egc/scoring.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <fstream>
#include <vector>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

double normalize(double value, double max_value) {
  if (!(max_value > 0.0)) throw NormalizationError("normalizer must be positive");
  if (value < 0.0) throw NormalizationError("cannot normalize a negative value");
  return std::min(value / max_value, 1.0);
}

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kMinGain = 1e-12;

// Unclamped logistic: the fit needs exact residuals and derivatives.
Eigen::ArrayXd model(const Eigen::ArrayXd &x, const Eigen::Vector2d &theta) {
  return 1.0 / (1.0 + (theta(0) + theta(1) * x).exp());
}

double sse(const Eigen::ArrayXd &x, const Eigen::ArrayXd &y, const Eigen::Vector2d &theta) {
  return (model(x, theta) - y).square().sum();
}

}  // namespace

LogisticFit fit_logistic_cdf_detailed(std::span<const double> samples) {
  const auto n = static_cast<Eigen::Index>(samples.size());
  if (n < 10) throw FitError("need at least 10 samples, got " + std::to_string(n));
  std::vector<double> sorted(samples.begin(), samples.end());
  for (double s : sorted) {
    if (!std::isfinite(s)) throw FitError("non-finite sample");
  }
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back()) throw FitError("all samples are equal");

  Eigen::ArrayXd x = Eigen::Map<const Eigen::ArrayXd>(sorted.data(), n);
  Eigen::ArrayXd y = (Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1)) + 0.5) /
                     static_cast<double>(n);

  Eigen::Vector2d theta(5.0, -10.0);
  double err = sse(x, y, theta);
  double lambda = 1e-3;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    Eigen::ArrayXd f = model(x, theta);
    Eigen::ArrayXd r = f - y;
    Eigen::ArrayXd d = -f * (1.0 - f);  // df/dz
    Eigen::Matrix<double, Eigen::Dynamic, 2> J(n, 2);
    J.col(0) = d.matrix();
    J.col(1) = (d * x).matrix();
    const Eigen::Matrix2d JtJ = J.transpose() * J;
    const Eigen::Vector2d g = J.transpose() * r.matrix();

    bool accepted = false;
    double gain = 0.0;
    while (lambda < 1e16) {
      Eigen::Matrix2d A = JtJ;
      A.diagonal() += lambda * JtJ.diagonal().cwiseMax(1e-12);
      const Eigen::Vector2d step = A.ldlt().solve(-g);
      const Eigen::Vector2d trial = theta + step;
      const double trial_err = sse(x, y, trial);
      if (std::isfinite(trial_err) && trial_err < err) {
        gain = err - trial_err;
        theta = trial;
        err = trial_err;
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted || gain < kMinGain) {
      ++it;
      break;
    }
  }
  if (!(theta(1) < 0.0)) throw FitError("fitted slope is not negative");
  return {{theta(0), theta(1)}, err, it};
}

ScoringParams ScoringParams::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), 0, "cannot open parameters file");
  return parse(in, path.string());
}

ScoringParams ScoringParams::parse(std::istream &in, const std::string &source) {
  ScoringParams p;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    if (f.size() != 3) throw LoadError(source, row, "expected channel, a, b");
    LogisticParams lp;
    if (!parse_double(f[1], lp.a) || !parse_double(f[2], lp.b)) {
      throw LoadError(source, row, "bad number");
    }
    if (!(lp.b < 0.0)) throw LoadError(source, row, "slope b must be negative");
    if (f[0] == "g1") {
      p.g1 = lp;
    } else if (f[0] == "g2") {
      p.g2 = lp;
    } else {
      throw LoadError(source, row, "unknown channel '" + f[0] + "'");
    }
  }
  return p;
}

}  // namespace egc
