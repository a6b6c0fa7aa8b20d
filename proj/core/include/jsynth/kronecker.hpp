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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Simultaneous phase approximation: given constants alpha_1..alpha_n that are
// rationally independent together with pi, find an integer m making every
// e^{i m alpha_j} epsilon-close to a requested e^{i x_j}. Density on the
// n-torus guarantees such m exists; the search is an incremental scan with
// drift-corrected phase accumulators.

namespace jsynth {

struct KroneckerQuery {
  std::vector<double> alphas;
  std::vector<double> targets;
  double epsilon = 1e-2;              // chord metric |e^{i m a} - e^{i x}|
  std::int64_t m_max = 100'000'000;   // search cap
};

struct KroneckerResult {
  std::int64_t m = 0;
  std::vector<double> achieved_errors;  // per-coordinate chord distances
  bool exhausted = false;               // cap hit; m is the best-effort argmin
};

// Smallest m in [1, m_max] with every coordinate error < epsilon. If no such
// m exists below the cap, returns the argmin of the max error with
// exhausted = true. Deterministic. Throws std::invalid_argument on empty or
// mismatched inputs, epsilon <= 0, or m_max < 1.
KroneckerResult find_power(const KroneckerQuery& q);

// (sqrt 2, sqrt 3): rationally independent together with pi.
std::pair<double, double> default_constants();

// |e^{ia} - e^{ib}| = 2 |sin((a - b)/2)|.
double circle_dist(double a, double b);

}  // namespace jsynth
