// Copyright 2026 The jsynth Authors
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

#include "jsynth/kronecker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jsynth/numerics.hpp"

namespace jsynth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

// Accumulator drift between re-anchors stays below kAnchorInterval * ulp,
// well under the 1e-9 guard band used when confirming candidates.
constexpr std::int64_t kAnchorInterval = 4096;
constexpr double kGuard = 1e-9;

double folded_angle_dist(double a, double b) {
  // both in [0, 2pi)
  double d = std::fabs(a - b);
  if (d > kPi) d = kTwoPi - d;
  return d;
}

}  // namespace

double circle_dist(double a, double b) {
  return 2.0 * std::fabs(std::sin((a - b) / 2.0));
}

std::pair<double, double> default_constants() {
  return {std::sqrt(2.0), std::sqrt(3.0)};
}

KroneckerResult find_power(const KroneckerQuery& q) {
  const std::size_t n = q.alphas.size();
  if (n == 0) throw std::invalid_argument("find_power: empty alphas");
  if (q.targets.size() != n) {
    throw std::invalid_argument("find_power: alphas/targets length mismatch");
  }
  if (!(q.epsilon > 0)) throw std::invalid_argument("find_power: epsilon <= 0");
  if (q.m_max < 1) throw std::invalid_argument("find_power: m_max < 1");

  auto errors_at = [&](std::int64_t m) {
    std::vector<double> errs(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double a = detail::reduce_mod_two_pi(q.alphas[j], m);
      const double x = detail::reduce_mod_two_pi(q.targets[j], 1);
      errs[j] = 2.0 * std::sin(folded_angle_dist(a, x) / 2.0);
    }
    return errs;
  };

  // Any two points on the circle are within chord distance 2.
  if (q.epsilon > 2.0) {
    return {1, errors_at(1), false};
  }

  const double angle_tol = 2.0 * std::asin(q.epsilon / 2.0);

  std::vector<double> step(n), target(n), acc(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    step[j] = detail::reduce_mod_two_pi(q.alphas[j], 1);
    target[j] = detail::reduce_mod_two_pi(q.targets[j], 1);
  }

  std::int64_t best_m = 1;
  double best_maxd = 1e300;

  for (std::int64_t m = 1; m <= q.m_max; ++m) {
    double maxd = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double a = acc[j] + step[j];
      if (a >= kTwoPi) a -= kTwoPi;
      acc[j] = a;
      const double d = folded_angle_dist(a, target[j]);
      if (d > maxd) maxd = d;
    }
    if (maxd < best_maxd) {
      best_maxd = maxd;
      best_m = m;
    }
    if (maxd < angle_tol + kGuard) {
      // Confirm with drift-free reduction before accepting.
      double exact_maxd = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double a = detail::reduce_mod_two_pi(q.alphas[j], m);
        const double d = folded_angle_dist(a, target[j]);
        if (d > exact_maxd) exact_maxd = d;
      }
      if (exact_maxd < angle_tol) {
        return {m, errors_at(m), false};
      }
    }
    if (m % kAnchorInterval == 0) {
      for (std::size_t j = 0; j < n; ++j) {
        acc[j] = detail::reduce_mod_two_pi(q.alphas[j], m);
      }
    }
  }

  return {best_m, errors_at(best_m), true};
}

}  // namespace jsynth
