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

#include <array>
#include <cstdint>
#include <utility>

#include "jsynth/numerics.hpp"

// Concrete gates: single-qubit rotations, the universal two-qubit gate
// J(alpha, beta) and its integer powers in closed form, the three canonical
// approximation targets reachable by single J powers, and signed permutation
// (classical reversible) gates.

namespace jsynth {

// diag(e^{-i phi}, e^{i phi})
Mat rz(double phi);
// [[cos t, -sin t], [sin t, cos t]]
Mat ry(double theta);

struct BlochAxisAngle {
  double theta;         // polar angle of the rotation axis, [0, pi]
  double phi;           // azimuth of the axis, [0, 2pi)
  double psi;           // rotation angle, (-pi, pi]
  double global_phase;  // residual scalar phase
};

// u = e^{i global_phase} (cos(psi/2) I - i sin(psi/2) n.sigma) with
// n = (sin theta cos phi, sin theta sin phi, cos theta). Throws on
// non-unitary input.
BlochAxisAngle axis_angle_of(const Mat& u);
Mat bloch_rotation(const BlochAxisAngle& a);

struct ZyDecomposition {
  // u = e^{i global_phase} rz(phi) ry(theta) rz(core) ry(-theta) rz(-phi):
  // an axis-aligning conjugation around a z-rotation core.
  double phi;
  double theta;
  double core;
  double global_phase;

  // The five factors in product order.
  std::array<Mat, 5> factors() const;
  Mat reconstruct() const;
};

ZyDecomposition decompose_zy(const Mat& u);

struct JGate {
  double alpha;
  double beta;
};

// J with the default (sqrt 2, sqrt 3) phase constants.
JGate default_j();

// blockdiag(ry(alpha), rz(beta)).
Mat make_j(const JGate& g);

// blockdiag(ry(m alpha), rz(m beta)) in closed form; m may be negative
// (adjoint powers).
Mat j_power(const JGate& g, std::int64_t m);

struct ApproxPower {
  std::int64_t m = 0;
  double achieved = 0;  // measured op_norm_dist(j_power(m), ideal)
  bool exhausted = false;
  Mat ideal;  // the continuous gate this power approximates
};

// J^m ~ blockdiag(I, rz(phi)); Kronecker targets (0, phi).
ApproxPower approx_phase_gate(const JGate& g, double phi, double eps,
                              std::int64_t m_max = 100'000'000);
// J^m ~ blockdiag(ry(theta), I); Kronecker targets (theta, 0).
ApproxPower approx_rotation_gate(const JGate& g, double theta, double eps,
                                 std::int64_t m_max = 100'000'000);
// J^m ~ blockdiag(sigma, I) with sigma = ry(pi/2); cached per
// (alpha, beta, eps, m_max) since it is reused throughout synthesis.
ApproxPower approx_block_sigma(const JGate& g, double eps,
                               std::int64_t m_max = 100'000'000);

// The two controlled factors whose product is exactly J:
// (|0><0| x u0 + |1><1| x I) (|0><0| x I + |1><1| x u1).
std::pair<Mat, Mat> as_controlled_pair(const JGate& g);

// sigma diag(a, b) sigma^-1 = diag(b, a); exact entry swap. Throws if the
// input is not diagonal.
Mat exchange_conjugate(const Mat& d);

struct PermGate {
  // Basis vector e_i maps to signs[i] * e_{perm[i]} (1-based entries).
  std::array<int, 4> perm{1, 2, 3, 4};
  std::array<int, 4> signs{1, 1, 1, 1};

  static PermGate identity() { return {}; }
  // sigma (x) I: swaps the two blocks under conjugation.
  static PermGate block_swap() { return {{3, 4, 1, 2}, {1, 1, -1, -1}}; }
  // Unsigned permutation conjugating a two-level gate on the canonical
  // (3,4) plane to the (i,j) plane.
  static PermGate plane_mover(int i, int j);

  PermGate inverse() const;
  PermGate compose(const PermGate& then) const;  // matrix(*this) * matrix(then)
  bool is_identity() const;
  bool operator==(const PermGate&) const = default;
};

// Throws std::invalid_argument if perm is not a permutation or signs are not
// all +/-1.
Mat perm_matrix(const PermGate& p);

}  // namespace jsynth
