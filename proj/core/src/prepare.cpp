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

#include <array>
#include <cmath>

#include "jsynth/hypersphere.hpp"

// Pure-state preparation: the pole map R sends the target state to
// (0,0,0, e^{i rho}); its adjoint therefore sends the classical state to the
// target up to a global phase. Each R_i factor is one two-level z-phase and
// one two-level rotation, the same primitives the synthesis pipeline emits.

namespace jsynth {

PrepareResult prepare_state(const Vec& v, const SynthOptions& opts) {
  const CoordsResult cr = to_coords(v);

  GateSequence seq;
  seq.j = opts.j;
  int exhausted = 0;

  struct Spec {
    int i, j;
    double rot, rz;
  };
  const double x2 = (cr.c.phi2 - cr.c.phi3 / 2.0) / 2.0;
  const double x3 = (cr.c.phi1 - (cr.c.phi2 + cr.c.phi3 / 2.0) / 2.0) / 2.0;
  const std::array<Spec, 3> specs{Spec{3, 4, cr.c.phi, -cr.c.phi3 / 2.0},
                                  Spec{2, 4, cr.c.theta, x2},
                                  Spec{1, 4, cr.c.psi, x3}};

  // R^dag = R1^dag R2^dag R3^dag with kernels rz(-x) rot(-a).
  for (const Spec& s : specs) {
    append_two_level_phase(seq, s.i, s.j, -s.rz, opts, &exhausted);
    append_two_level_rotation(seq, s.i, s.j, -s.rot, opts, &exhausted);
  }
  seq = peephole(seq);

  PrepareResult out;
  out.sequence = seq;
  out.exhausted_steps = exhausted;
  Vec pole(4);
  pole[3] = 1.0;
  out.achieved = evaluate(seq) * pole;
  out.fidelity = std::abs(inner(v, out.achieved)) / v.norm();
  return out;
}

}  // namespace jsynth
