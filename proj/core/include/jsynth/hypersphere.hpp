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

#include "jsynth/numerics.hpp"
#include "jsynth/synthesis.hpp"

// The telescopic parameterization of unit vectors in C^4 -- a Bloch sphere
// whose "axis" coordinates open onto further spheres -- its gauge-fixed
// inverse, and the three two-level rotations R1, R2, R3 whose composite sends
// any unit vector to the last basis vector (up to phase).

namespace jsynth {

struct HypersphericalCoords {
  double psi = 0;    // [0, pi/2] as produced by to_coords
  double theta = 0;  // [0, pi/2]
  double phi = 0;    // [0, pi/2]
  double phi1 = 0;   // [0, 2pi)
  double phi2 = 0;   // [0, 2pi)
  double phi3 = 0;   // [0, 2pi)
};

// (sin psi e^{i phi1},
//  cos psi sin theta e^{i phi2},
//  cos psi cos theta sin phi,
//  cos psi cos theta cos phi e^{i phi3})
Vec from_coords(const HypersphericalCoords& c);

struct CoordsResult {
  HypersphericalCoords c;
  double gauge_phase;  // global phase removed to make the third entry real >= 0
};

// Inverse of from_coords: from_coords(r.c) == e^{-i r.gauge_phase} v.
// When the third component vanishes the gauge falls back to the fourth, then
// second, then first component; angles left undetermined by the vector are 0.
// Throws std::invalid_argument on non-unit input.
CoordsResult to_coords(const Vec& v);

// R1: rotation by phi in the (3,4) plane after diag(1,1,e^{i phi3/2},e^{-i phi3/2}).
Mat build_r1(const HypersphericalCoords& c);
// R2: rotation by theta in the (2,4) plane after its phase diagonal.
Mat build_r2(const HypersphericalCoords& c);
// R3: rotation by psi in the (1,4) plane after its phase diagonal.
Mat build_r3(const HypersphericalCoords& c);

struct PoleMap {
  Mat r;   // R3 R2 R1
  Mat r1;
  Mat r2;
  Mat r3;
  double residual_phase;  // phase of the fourth component of R v
};

// R v = (0, 0, 0, e^{i residual_phase}).
PoleMap build_pole_map(const Vec& v);

struct PrepareResult {
  GateSequence sequence;   // approximates R^dag; applied to (0,0,0,1)
  Vec achieved;            // evaluate(sequence) * e4
  double fidelity;         // |<target, achieved>|
  int exhausted_steps = 0;
};

// Pure-state preparation from the classical state (0,0,0,1).
PrepareResult prepare_state(const Vec& v, const SynthOptions& opts);

}  // namespace jsynth
