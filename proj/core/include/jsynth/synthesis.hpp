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
#include <variant>
#include <vector>

#include "jsynth/gates.hpp"
#include "jsynth/numerics.hpp"

// The compiler proper. Output IR is a flat list of primitive gates: integer
// powers of the session's J gate (each carrying the continuous gate it stands
// in for plus its measured deviation) and exact signed permutations. The sum
// of step deviations is an upper bound on the phase-aligned operator-norm
// error of the whole sequence, by unitary invariance and subadditivity.

namespace jsynth {

struct SynthOptions {
  JGate j = default_j();
  double eps_step = 5e-3;            // per-primitive Kronecker tolerance
  std::int64_t m_max = 100'000'000;  // search cap per primitive
};

struct JPowStep {
  std::int64_t m = 0;
  Mat ideal;                // continuous gate this power approximates
  double step_error = 0.0;  // op_norm_dist(J^m, ideal), measured
};

struct PermStep {
  PermGate perm;
};

using Gate = std::variant<JPowStep, PermStep>;

struct GateSequence {
  JGate j = default_j();  // the ambient session constants
  std::vector<Gate> gates;
  double total_budget = 0.0;  // sum of step errors

  void push(JPowStep s);
  void push(PermStep s);
  std::size_t size() const { return gates.size(); }
};

// Product of the materialized gates in list order.
Mat evaluate(const GateSequence& seq);

// Append the J-power realization of a two-level gate on the (i, j) plane:
// either the z-phase pair diag(e^{-i angle}, e^{i angle}) or the planar
// rotation by angle. Canonical gates live on the lower (3,4) plane; other
// planes are reached by exact permutation conjugation. No-op when the angle
// is a multiple of 2pi.
void append_two_level_phase(GateSequence& seq, int i, int j, double angle,
                            const SynthOptions& opts,
                            int* exhausted_steps = nullptr);
void append_two_level_rotation(GateSequence& seq, int i, int j, double angle,
                               const SynthOptions& opts,
                               int* exhausted_steps = nullptr);

// Merges adjacent J powers (re-measuring against the merged ideal), merges
// adjacent permutations, drops exact identities. Evaluation is unchanged.
GateSequence peephole(const GateSequence& seq);

// Sequence approximating blockdiag(u, v) up to global phase. u, v in U(2).
// Kronecker exhaustion never aborts: affected steps keep their measured
// (larger) errors and are counted in *exhausted_steps when provided.
GateSequence synth_blockdiag(const Mat& u, const Mat& v, const SynthOptions& opts,
                             int* exhausted_steps = nullptr);

struct EigenFactor {
  Vec vector;
  double eta;
};

// Orthonormal eigenfactors of a unitary g: the commuting rank-1 factors
// I + (e^{i eta_k} - 1) v_k v_k^dag whose product is exactly g, ordered by
// ascending eta.
std::vector<EigenFactor> factor_eigen(const Mat& g);

// Sequence for a given eigenfactor list (exposed so callers can check that
// different eigenbasis choices for degenerate spectra synthesize equally).
GateSequence synth_from_eigenfactors(const std::vector<EigenFactor>& factors,
                                     const SynthOptions& opts,
                                     int* exhausted_steps = nullptr);

struct SynthesisReport {
  Mat target;
  GateSequence sequence;
  double measured_error = 0.0;  // phase-aligned op-norm distance
  double global_phase = 0.0;    // aligning phase applied to the evaluation
  std::vector<double> eigen_angles;
  double wall_time_ms = 0.0;
  int exhausted_steps = 0;
};

// Full pipeline: block-diagonal targets go through synth_blockdiag; general
// targets through the eigenfactor construction (pole-map conjugation per
// factor plus two-level phase gates).
SynthesisReport synth_unitary(const Mat& g, const SynthOptions& opts);

struct ExpandResult {
  GateSequence seq;
  int unexpanded = 0;       // permutations with no J-power realization
  int exhausted_steps = 0;  // replacement searches that hit the cap
};

// Optional pass replacing permutation gates by J-power words where one
// exists (block-diagonal rotation-type upper block, +/-I lower block, via
// powers of the block-sigma gate and a phase gate). Permutations that mix
// the two blocks have no J-power approximant -- products of J powers stay
// block-diagonal -- and are kept, counted in `unexpanded`.
ExpandResult expand_perms(const GateSequence& seq, const SynthOptions& opts);

// Exact sum of all Kronecker scan steps behind a sequence's J powers: the
// deterministic cost metric used by the bench CSV.
std::int64_t scan_cost(const GateSequence& seq, int exhausted_steps,
                       std::int64_t m_max);

}  // namespace jsynth
