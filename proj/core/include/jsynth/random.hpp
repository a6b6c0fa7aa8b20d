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
#include <random>

#include "jsynth/numerics.hpp"

// Deterministic sampling used by the bench command and the test suites.
// Box-Muller is hand-rolled on top of mt19937_64 so a fixed seed produces the
// same stream on every standard library.

namespace jsynth {

using Rng = std::mt19937_64;

double uniform01(Rng& rng);  // in (0, 1]
double gaussian(Rng& rng);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
// diagonal phases absorbed.
Mat haar_unitary(int dim, Rng& rng);

Vec random_unit_vector(int dim, Rng& rng);

}  // namespace jsynth
