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

#include "jsynth/random.hpp"

#include <cmath>
#include <numbers>

namespace jsynth {

double uniform01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

double gaussian(Rng& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Mat haar_unitary(int dim, Rng& rng) {
  Mat z(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      z.at(i, j) = cplx(gaussian(rng), gaussian(rng));

  // Modified Gram-Schmidt; R's diagonal phases absorbed into the columns.
  Mat q(dim);
  for (int j = 0; j < dim; ++j) {
    Vec col(dim);
    for (int i = 0; i < dim; ++i) col[i] = z.at(i, j);
    for (int k = 0; k < j; ++k) {
      Vec qk(dim);
      for (int i = 0; i < dim; ++i) qk[i] = q.at(i, k);
      const cplx proj = inner(qk, col);
      for (int i = 0; i < dim; ++i) col[i] -= proj * qk[i];
    }
    // Gram-Schmidt's real-positive R diagonal is exactly the convention that
    // makes Q Haar-distributed.
    const double nrm = col.norm();
    for (int i = 0; i < dim; ++i) q.at(i, j) = col[i] / nrm;
  }
  return q;
}

Vec random_unit_vector(int dim, Rng& rng) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = cplx(gaussian(rng), gaussian(rng));
  const double n = v.norm();
  for (int i = 0; i < dim; ++i) v[i] /= n;
  return v;
}

}  // namespace jsynth
