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

#include "jsynth/gates.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "jsynth/kronecker.hpp"

namespace jsynth {

namespace {

Mat block_diag(const Mat& u, const Mat& v) {
  Mat m(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = u.at(i, j);
      m.at(i + 2, j + 2) = v.at(i, j);
    }
  }
  return m;
}

void require_unitary2(const Mat& u, const char* where) {
  if (u.dim() != 2) {
    throw std::invalid_argument(std::string(where) + ": expected a 2x2 matrix");
  }
  if (!is_unitary(u, 1e-10)) {
    throw std::invalid_argument(std::string(where) + ": matrix not unitary");
  }
}

}  // namespace

Mat rz(double phi) {
  Mat m(2);
  m.at(0, 0) = std::polar(1.0, -phi);
  m.at(1, 1) = std::polar(1.0, phi);
  return m;
}

Mat ry(double theta) {
  Mat m(2);
  const double c = std::cos(theta), s = std::sin(theta);
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

BlochAxisAngle axis_angle_of(const Mat& u) {
  require_unitary2(u, "axis_angle_of");
  double g = std::arg(det(u)) / 2.0;
  const cplx ph = std::polar(1.0, -g);
  const cplx s00 = ph * u.at(0, 0);
  const cplx s01 = ph * u.at(0, 1);
  const double c = s00.real();
  // s = cos(psi/2) I - i sin(psi/2) n.sigma; read the axis components off the
  // first row. Adding 0.0 normalizes negative zeros so that the azimuth of an
  // axis-aligned rotation comes out 0 rather than pi.
  const double wz = -s00.imag() + 0.0;
  const double wx = -s01.imag() + 0.0;
  const double wy = -s01.real() + 0.0;
  const double w = std::sqrt(wx * wx + wy * wy + wz * wz);
  double psi = 2.0 * std::atan2(w, c);
  if (psi > std::numbers::pi) {
    psi -= 2.0 * std::numbers::pi;
    g += std::numbers::pi;
  }
  double theta = 0.0, phi = 0.0;
  if (w > 1e-15) {
    theta = std::acos(std::clamp(wz / w, -1.0, 1.0));
    phi = std::atan2(wy, wx);
    if (phi < 0) phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  }
  return {theta, phi, psi, detail::principal_angle(g)};
}

Mat bloch_rotation(const BlochAxisAngle& a) {
  const double nx = std::sin(a.theta) * std::cos(a.phi);
  const double ny = std::sin(a.theta) * std::sin(a.phi);
  const double nz = std::cos(a.theta);
  const double c = std::cos(a.psi / 2), s = std::sin(a.psi / 2);
  const cplx ph = std::polar(1.0, a.global_phase);
  Mat m(2);
  m.at(0, 0) = ph * cplx(c, -s * nz);
  m.at(0, 1) = ph * cplx(-s * ny, -s * nx);
  m.at(1, 0) = ph * cplx(s * ny, -s * nx);
  m.at(1, 1) = ph * cplx(c, s * nz);
  return m;
}

std::array<Mat, 5> ZyDecomposition::factors() const {
  return {rz(phi), ry(theta), rz(core), ry(-theta), rz(-phi)};
}

Mat ZyDecomposition::reconstruct() const {
  Mat m = Mat::identity(2);
  for (const Mat& f : factors()) m = m * f;
  return std::polar(1.0, global_phase) * m;
}

ZyDecomposition decompose_zy(const Mat& u) {
  const BlochAxisAngle a = axis_angle_of(u);
  // rz/ry carry twice their parameter as a Bloch rotation, hence the halves.
  return {a.phi / 2.0, a.theta / 2.0, a.psi / 2.0, a.global_phase};
}

JGate default_j() {
  const auto [a, b] = default_constants();
  return {a, b};
}

Mat make_j(const JGate& g) {
  return block_diag(ry(g.alpha), rz(g.beta));
}

Mat j_power(const JGate& g, std::int64_t m) {
  if (m == 0) return Mat::identity(4);
  const double a = detail::reduce_mod_two_pi(g.alpha, m);
  const double b = detail::reduce_mod_two_pi(g.beta, m);
  return block_diag(ry(a), rz(b));
}

namespace {

ApproxPower approx_block(const JGate& g, double rot_target, double phase_target,
                         const Mat& ideal, double eps, std::int64_t m_max) {
  KroneckerQuery q;
  q.alphas = {g.alpha, g.beta};
  q.targets = {rot_target, phase_target};
  q.epsilon = eps;
  q.m_max = m_max;
  const KroneckerResult r = find_power(q);
  ApproxPower out;
  out.m = r.m;
  out.exhausted = r.exhausted;
  out.ideal = ideal;
  out.achieved = op_norm_dist(j_power(g, r.m), ideal);
  return out;
}

}  // namespace

ApproxPower approx_phase_gate(const JGate& g, double phi, double eps,
                              std::int64_t m_max) {
  return approx_block(g, 0.0, phi, block_diag(Mat::identity(2), rz(phi)), eps,
                      m_max);
}

ApproxPower approx_rotation_gate(const JGate& g, double theta, double eps,
                                 std::int64_t m_max) {
  return approx_block(g, theta, 0.0, block_diag(ry(theta), Mat::identity(2)),
                      eps, m_max);
}

ApproxPower approx_block_sigma(const JGate& g, double eps, std::int64_t m_max) {
  using Key = std::tuple<double, double, double, std::int64_t>;
  static std::map<Key, ApproxPower> cache;
  static std::mutex mu;
  const Key key{g.alpha, g.beta, eps, m_max};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ApproxPower r = approx_rotation_gate(g, std::numbers::pi / 2, eps, m_max);
  std::lock_guard lock(mu);
  return cache.emplace(key, r).first->second;
}

std::pair<Mat, Mat> as_controlled_pair(const JGate& g) {
  return {ry(g.alpha), rz(g.beta)};
}

Mat exchange_conjugate(const Mat& d) {
  if (d.dim() != 2) {
    throw std::invalid_argument("exchange_conjugate: expected a 2x2 matrix");
  }
  if (std::abs(d.at(0, 1)) > 1e-12 || std::abs(d.at(1, 0)) > 1e-12) {
    throw std::invalid_argument("exchange_conjugate: matrix not diagonal");
  }
  Mat m(2);
  m.at(0, 0) = d.at(1, 1);
  m.at(1, 1) = d.at(0, 0);
  return m;
}

PermGate PermGate::plane_mover(int i, int j) {
  PermGate p;
  int rest[2], k = 0;
  for (int c = 1; c <= 4; ++c) {
    if (c != i && c != j) rest[k++] = c;
  }
  p.perm = {rest[0], rest[1], i, j};
  return p;
}

PermGate PermGate::inverse() const {
  PermGate r;
  for (int i = 0; i < 4; ++i) {
    r.perm[perm[i] - 1] = i + 1;
    r.signs[perm[i] - 1] = signs[i];
  }
  return r;
}

PermGate PermGate::compose(const PermGate& then) const {
  // matrix(result) = matrix(*this) * matrix(then)
  PermGate r;
  for (int i = 0; i < 4; ++i) {
    r.perm[i] = perm[then.perm[i] - 1];
    r.signs[i] = then.signs[i] * signs[then.perm[i] - 1];
  }
  return r;
}

bool PermGate::is_identity() const {
  for (int i = 0; i < 4; ++i) {
    if (perm[i] != i + 1 || signs[i] != 1) return false;
  }
  return true;
}

Mat perm_matrix(const PermGate& p) {
  bool seen[4] = {false, false, false, false};
  for (int i = 0; i < 4; ++i) {
    if (p.perm[i] < 1 || p.perm[i] > 4 || seen[p.perm[i] - 1]) {
      throw std::invalid_argument("perm_matrix: not a permutation of 1..4");
    }
    seen[p.perm[i] - 1] = true;
    if (p.signs[i] != 1 && p.signs[i] != -1) {
      throw std::invalid_argument("perm_matrix: signs must be +/-1");
    }
  }
  Mat m(4);
  for (int i = 0; i < 4; ++i) {
    m.at(p.perm[i] - 1, i) = static_cast<double>(p.signs[i]);
  }
  return m;
}

}  // namespace jsynth
