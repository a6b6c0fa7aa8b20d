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

#include "jsynth/synthesis.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jsynth/hypersphere.hpp"
#include "jsynth/kronecker.hpp"

namespace jsynth {

namespace {

constexpr double kPi = std::numbers::pi;
// Angles this close to a multiple of 2pi materialize as the identity; the
// corresponding factors are not emitted.
constexpr double kAngleZero = 1e-14;

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

Mat upper_block(const Mat& m) {
  Mat u(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) u.at(i, j) = m.at(i, j);
  return u;
}

Mat lower_block(const Mat& m) {
  Mat v(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v.at(i, j) = m.at(i + 2, j + 2);
  return v;
}

enum class TwoLevelKind { Rz, Rot };

struct Emitter {
  GateSequence& seq;
  const SynthOptions& opts;
  int* exhausted;

  void count_exhausted(bool flag) {
    if (flag && exhausted != nullptr) ++*exhausted;
  }

  void push_power(const ApproxPower& p) {
    count_exhausted(p.exhausted);
    seq.push(JPowStep{p.m, p.ideal, p.achieved});
  }

  // Canonical gates act on the lower (3,4) plane; the upper (1,2) plane is
  // reached by block-swap conjugation, every other plane by an unsigned
  // permutation of the canonical one.
  void two_level(int i, int j, TwoLevelKind kind, double angle) {
    if (circle_dist(angle, 0.0) < kAngleZero) return;
    if (i == 3 && j == 4) {
      if (kind == TwoLevelKind::Rz) {
        push_power(approx_phase_gate(opts.j, angle, opts.eps_step, opts.m_max));
      } else {
        seq.push(PermStep{PermGate::block_swap()});
        push_power(approx_rotation_gate(opts.j, angle, opts.eps_step, opts.m_max));
        seq.push(PermStep{PermGate::block_swap().inverse()});
      }
      return;
    }
    if (i == 1 && j == 2) {
      if (kind == TwoLevelKind::Rot) {
        push_power(approx_rotation_gate(opts.j, angle, opts.eps_step, opts.m_max));
      } else {
        seq.push(PermStep{PermGate::block_swap()});
        push_power(approx_phase_gate(opts.j, angle, opts.eps_step, opts.m_max));
        seq.push(PermStep{PermGate::block_swap().inverse()});
      }
      return;
    }
    const PermGate p = PermGate::plane_mover(i, j);
    seq.push(PermStep{p});
    two_level(3, 4, kind, angle);
    seq.push(PermStep{p.inverse()});
  }
};

void require_unitary(const Mat& m, int dim, const char* where) {
  if (m.dim() != dim) {
    throw std::invalid_argument(std::string(where) + ": wrong dimension");
  }
  if (!is_unitary(m, 1e-8)) {
    throw std::invalid_argument(std::string(where) + ": matrix not unitary");
  }
}

// Factor angles of the pole-aligning rotations for one eigenvector: plane,
// rotation angle, z-phase angle, such that R_i = rot(a) rz(x) on that plane.
struct TwoLevelSpec {
  int i, j;
  double rot;
  double rz;
};

std::array<TwoLevelSpec, 3> pole_specs(const HypersphericalCoords& c) {
  const double x2 = (c.phi2 - c.phi3 / 2.0) / 2.0;
  const double x3 = (c.phi1 - (c.phi2 + c.phi3 / 2.0) / 2.0) / 2.0;
  return {TwoLevelSpec{3, 4, c.phi, -c.phi3 / 2.0},
          TwoLevelSpec{2, 4, c.theta, x2},
          TwoLevelSpec{1, 4, c.psi, x3}};
}

}  // namespace

void GateSequence::push(JPowStep s) {
  total_budget += s.step_error;
  gates.push_back(std::move(s));
}

void GateSequence::push(PermStep s) { gates.push_back(std::move(s)); }

void append_two_level_phase(GateSequence& seq, int i, int j, double angle,
                            const SynthOptions& opts, int* exhausted_steps) {
  Emitter em{seq, opts, exhausted_steps};
  em.two_level(i, j, TwoLevelKind::Rz, angle);
}

void append_two_level_rotation(GateSequence& seq, int i, int j, double angle,
                               const SynthOptions& opts, int* exhausted_steps) {
  Emitter em{seq, opts, exhausted_steps};
  em.two_level(i, j, TwoLevelKind::Rot, angle);
}

Mat evaluate(const GateSequence& seq) {
  Mat m = Mat::identity(4);
  for (const Gate& g : seq.gates) {
    if (const auto* jp = std::get_if<JPowStep>(&g)) {
      m = m * j_power(seq.j, jp->m);
    } else {
      m = m * perm_matrix(std::get<PermStep>(g).perm);
    }
  }
  return m;
}

GateSequence peephole(const GateSequence& seq) {
  GateSequence out;
  out.j = seq.j;
  std::vector<Gate> cur = seq.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Gate> next;
    for (const Gate& g : cur) {
      if (const auto* jp = std::get_if<JPowStep>(&g)) {
        if (jp->m == 0 && jp->step_error <= 1e-12 &&
            op_norm_dist(jp->ideal, Mat::identity(4)) <= 1e-12) {
          changed = true;
          continue;
        }
        if (!next.empty()) {
          if (auto* prev = std::get_if<JPowStep>(&next.back())) {
            const std::int64_t m = prev->m + jp->m;
            const Mat ideal = prev->ideal * jp->ideal;
            const double err = op_norm_dist(j_power(seq.j, m), ideal);
            next.back() = JPowStep{m, ideal, err};
            changed = true;
            continue;
          }
        }
        next.push_back(g);
        continue;
      }
      const PermGate& p = std::get<PermStep>(g).perm;
      if (p.is_identity()) {
        changed = true;
        continue;
      }
      if (!next.empty()) {
        if (auto* prev = std::get_if<PermStep>(&next.back())) {
          const PermGate merged = prev->perm.compose(p);
          if (merged.is_identity()) {
            next.pop_back();
          } else {
            next.back() = PermStep{merged};
          }
          changed = true;
          continue;
        }
      }
      next.push_back(g);
    }
    cur = std::move(next);
  }
  for (Gate& g : cur) {
    if (auto* jp = std::get_if<JPowStep>(&g)) {
      out.push(std::move(*jp));
    } else {
      out.push(std::get<PermStep>(g));
    }
  }
  return out;
}

GateSequence synth_blockdiag(const Mat& u, const Mat& v, const SynthOptions& opts,
                             int* exhausted_steps) {
  require_unitary(u, 2, "synth_blockdiag(u)");
  require_unitary(v, 2, "synth_blockdiag(v)");

  GateSequence seq;
  seq.j = opts.j;
  Emitter em{seq, opts, exhausted_steps};

  const ZyDecomposition zu = decompose_zy(u);
  const ZyDecomposition zv = decompose_zy(v);

  const std::array<std::pair<TwoLevelKind, double>, 5> factors_u{
      std::pair{TwoLevelKind::Rz, zu.phi}, {TwoLevelKind::Rot, zu.theta},
      {TwoLevelKind::Rz, zu.core},         {TwoLevelKind::Rot, -zu.theta},
      {TwoLevelKind::Rz, -zu.phi}};
  const std::array<std::pair<TwoLevelKind, double>, 5> factors_v{
      std::pair{TwoLevelKind::Rz, zv.phi}, {TwoLevelKind::Rot, zv.theta},
      {TwoLevelKind::Rz, zv.core},         {TwoLevelKind::Rot, -zv.theta},
      {TwoLevelKind::Rz, -zv.phi}};

  for (const auto& [kind, angle] : factors_u) em.two_level(1, 2, kind, angle);
  for (const auto& [kind, angle] : factors_v) em.two_level(3, 4, kind, angle);

  // Residual scalar phase between the blocks. blockdiag(I, e^{i d} I) equals
  // e^{i d/2} times two crossing-plane z-phase gates; the crossing planes are
  // what makes a relative scalar phase reachable at all, a same-block phase
  // gate can only produce det-1 phases.
  const double delta =
      detail::principal_angle(zv.global_phase - zu.global_phase);
  if (circle_dist(delta, 0.0) >= kAngleZero) {
    em.two_level(1, 3, TwoLevelKind::Rz, delta / 2.0);
    em.two_level(2, 4, TwoLevelKind::Rz, delta / 2.0);
  }
  return peephole(seq);
}

std::vector<EigenFactor> factor_eigen(const Mat& g) {
  const std::vector<EigenPair> pairs = eig_unitary(g);
  std::vector<EigenFactor> out;
  out.reserve(pairs.size());
  for (const EigenPair& p : pairs) out.push_back({p.vector, p.angle});
  return out;
}

GateSequence synth_from_eigenfactors(const std::vector<EigenFactor>& factors,
                                     const SynthOptions& opts,
                                     int* exhausted_steps) {
  GateSequence seq;
  seq.j = opts.j;
  Emitter em{seq, opts, exhausted_steps};

  for (const EigenFactor& f : factors) {
    if (circle_dist(f.eta, 0.0) < 1e-13) continue;
    const CoordsResult cr = to_coords(f.vector);
    const auto specs = pole_specs(cr.c);
    // R^dag: adjoint factors in reverse composite order, kernel rz then rot.
    for (const TwoLevelSpec& s : specs) {
      em.two_level(s.i, s.j, TwoLevelKind::Rz, -s.rz);
      em.two_level(s.i, s.j, TwoLevelKind::Rot, -s.rot);
    }
    // diag(1,1,1,e^{i eta}) up to the scalar e^{i eta/4}: a ladder of
    // two-level z-phases.
    em.two_level(1, 2, TwoLevelKind::Rz, f.eta / 4.0);
    em.two_level(2, 3, TwoLevelKind::Rz, f.eta / 2.0);
    em.two_level(3, 4, TwoLevelKind::Rz, 3.0 * f.eta / 4.0);
    // R = R3 R2 R1.
    for (auto it = specs.rbegin(); it != specs.rend(); ++it) {
      em.two_level(it->i, it->j, TwoLevelKind::Rot, it->rot);
      em.two_level(it->i, it->j, TwoLevelKind::Rz, it->rz);
    }
  }
  return peephole(seq);
}

SynthesisReport synth_unitary(const Mat& g, const SynthOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  require_unitary(g, 4, "synth_unitary");

  // Targets from text files can carry up to ~1e-8 unitarity wobble; polish
  // with a couple of Newton-Schulz polar steps so the eigensolver sees a
  // clean unitary. Round-trip-exact inputs skip this.
  Mat work = g;
  for (int iter = 0; iter < 4 && unitarity_residual(work) > 1e-12; ++iter) {
    const Mat gram = adjoint(work) * work;
    work = work * (cplx(1.5, 0.0) * Mat::identity(4) - cplx(0.5, 0.0) * gram);
  }

  SynthesisReport rep;
  rep.target = g;
  for (const EigenPair& p : eig_unitary(work)) {
    rep.eigen_angles.push_back(p.angle);
  }

  double cross = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 2; j < 4; ++j) {
      cross = std::max(cross, std::abs(work.at(i, j)));
      cross = std::max(cross, std::abs(work.at(j, i)));
    }
  }
  int exhausted = 0;
  if (cross <= 1e-12) {
    rep.sequence =
        synth_blockdiag(upper_block(work), lower_block(work), opts, &exhausted);
  } else {
    rep.sequence =
        synth_from_eigenfactors(factor_eigen(work), opts, &exhausted);
  }
  rep.exhausted_steps = exhausted;

  const PhaseAlignment pa = phase_align(evaluate(rep.sequence), g);
  rep.measured_error = pa.dist;
  rep.global_phase = pa.delta;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

ExpandResult expand_perms(const GateSequence& seq, const SynthOptions& opts) {
  ExpandResult out;
  out.seq.j = seq.j;
  Emitter em{out.seq, opts, &out.exhausted_steps};

  for (const Gate& g : seq.gates) {
    if (const auto* jp = std::get_if<JPowStep>(&g)) {
      out.seq.push(*jp);
      continue;
    }
    const PermGate& p = std::get<PermStep>(g).perm;
    if (p.is_identity()) continue;

    // J-power realizable permutations are exactly the block-diagonal ones
    // whose upper block is a quarter-turn power of sigma and whose lower
    // block is +/-I.
    const bool block_structured = (p.perm[0] == 1 || p.perm[0] == 2) &&
                                  (p.perm[1] == 1 || p.perm[1] == 2) &&
                                  (p.perm[2] == 3 || p.perm[2] == 4) &&
                                  (p.perm[3] == 3 || p.perm[3] == 4);
    int sigma_k = -1;
    bool lower_minus = false;
    if (block_structured) {
      if (p.perm[0] == 1) {
        if (p.signs[0] == 1 && p.signs[1] == 1) sigma_k = 0;
        if (p.signs[0] == -1 && p.signs[1] == -1) sigma_k = 2;
      } else {
        if (p.signs[0] == 1 && p.signs[1] == -1) sigma_k = 1;
        if (p.signs[0] == -1 && p.signs[1] == 1) sigma_k = 3;
      }
      if (!(p.perm[2] == 3 && p.perm[3] == 4 && p.signs[2] == p.signs[3])) {
        sigma_k = -1;
      } else {
        lower_minus = p.signs[2] == -1;
      }
    }
    if (sigma_k < 0) {
      out.seq.push(PermStep{p});
      ++out.unexpanded;
      continue;
    }
    if (sigma_k > 0) {
      const ApproxPower s3 =
          approx_block_sigma(opts.j, opts.eps_step, opts.m_max);
      if (s3.exhausted) ++out.exhausted_steps;
      const std::int64_t m = sigma_k * s3.m;
      const Mat ideal = block_diag(ry(sigma_k * kPi / 2.0), Mat::identity(2));
      out.seq.push(
          JPowStep{m, ideal, op_norm_dist(j_power(seq.j, m), ideal)});
    }
    if (lower_minus) {
      em.push_power(approx_phase_gate(opts.j, kPi, opts.eps_step, opts.m_max));
    }
  }
  out.seq = peephole(out.seq);
  return out;
}

std::int64_t scan_cost(const GateSequence& seq, int exhausted_steps,
                       std::int64_t m_max) {
  std::int64_t cost = 0;
  for (const Gate& g : seq.gates) {
    if (const auto* jp = std::get_if<JPowStep>(&g)) cost += std::abs(jp->m);
  }
  return cost + static_cast<std::int64_t>(exhausted_steps) * m_max;
}

}  // namespace jsynth
