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

#include "jsynth/hypersphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jsynth {

namespace {

double positive_arg(cplx z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

Mat rot_plane(int i, int j, double a) {
  Mat m = Mat::identity(4);
  const double c = std::cos(a), s = std::sin(a);
  m.at(i - 1, i - 1) = c;
  m.at(i - 1, j - 1) = -s;
  m.at(j - 1, i - 1) = s;
  m.at(j - 1, j - 1) = c;
  return m;
}

Mat phase_diag(int i, int j, double x) {
  // diag with e^{-ix} at slot i and e^{ix} at slot j
  Mat m = Mat::identity(4);
  m.at(i - 1, i - 1) = std::polar(1.0, -x);
  m.at(j - 1, j - 1) = std::polar(1.0, x);
  return m;
}

}  // namespace

Vec from_coords(const HypersphericalCoords& c) {
  Vec v(4);
  const double cp = std::cos(c.psi), sp = std::sin(c.psi);
  const double ct = std::cos(c.theta), st = std::sin(c.theta);
  const double cf = std::cos(c.phi), sf = std::sin(c.phi);
  v[0] = sp * std::polar(1.0, c.phi1);
  v[1] = cp * st * std::polar(1.0, c.phi2);
  v[2] = cp * ct * sf;
  v[3] = cp * ct * cf * std::polar(1.0, c.phi3);
  return v;
}

CoordsResult to_coords(const Vec& v_in) {
  if (v_in.dim() != 4) {
    throw std::invalid_argument("to_coords: expected a 4-vector");
  }
  const double nrm = v_in.norm();
  if (std::fabs(nrm - 1.0) > 1e-9) {
    throw std::invalid_argument("to_coords: vector not unit");
  }
  Vec v(4);
  for (int i = 0; i < 4; ++i) v[i] = v_in[i] / nrm;

  double gauge = 0.0;
  if (std::abs(v[2]) > 0) {
    gauge = std::arg(v[2]);
  } else if (std::abs(v[3]) > 0) {
    gauge = std::arg(v[3]);
  } else if (std::abs(v[1]) > 0) {
    gauge = std::arg(v[1]);
  } else {
    gauge = std::arg(v[0]);
  }
  const cplx ph = std::polar(1.0, -gauge);
  for (int i = 0; i < 4; ++i) v[i] *= ph;

  const double aw = std::abs(v[0]);
  const double ax = std::abs(v[1]);
  const double az = std::abs(v[3]);
  // The third component is real >= 0 in this gauge (up to rounding).
  const double y = v[2].real();
  const double rho_yz = std::hypot(y, az);
  const double rho_xyz = std::hypot(ax, rho_yz);

  HypersphericalCoords c;
  c.psi = std::atan2(aw, rho_xyz);
  c.theta = std::atan2(ax, rho_yz);
  c.phi = std::atan2(y, az);
  c.phi1 = aw > 0 ? positive_arg(v[0]) : 0.0;
  c.phi2 = ax > 0 ? positive_arg(v[1]) : 0.0;
  c.phi3 = az > 0 ? positive_arg(v[3]) : 0.0;
  return {c, gauge};
}

Mat build_r1(const HypersphericalCoords& c) {
  // The phase diagonal carries e^{+i phi3/2} on slot 3, e^{-i phi3/2} on 4.
  return rot_plane(3, 4, c.phi) * phase_diag(4, 3, c.phi3 / 2.0);
}

Mat build_r2(const HypersphericalCoords& c) {
  const double x = (c.phi2 - c.phi3 / 2.0) / 2.0;
  return rot_plane(2, 4, c.theta) * phase_diag(2, 4, x);
}

Mat build_r3(const HypersphericalCoords& c) {
  const double x = (c.phi1 - (c.phi2 + c.phi3 / 2.0) / 2.0) / 2.0;
  return rot_plane(1, 4, c.psi) * phase_diag(1, 4, x);
}

PoleMap build_pole_map(const Vec& v) {
  const CoordsResult cr = to_coords(v);
  PoleMap pm;
  pm.r1 = build_r1(cr.c);
  pm.r2 = build_r2(cr.c);
  pm.r3 = build_r3(cr.c);
  pm.r = pm.r3 * (pm.r2 * pm.r1);
  const Vec img = pm.r * v;
  pm.residual_phase = std::arg(img[3]);
  return pm;
}

}  // namespace jsynth
