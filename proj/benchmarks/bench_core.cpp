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

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "jsynth/hypersphere.hpp"
#include "jsynth/kronecker.hpp"
#include "jsynth/random.hpp"
#include "jsynth/synthesis.hpp"

namespace {

using namespace jsynth;

void BM_op_norm_dist(benchmark::State& state) {
  Rng rng(1);
  const Mat a = haar_unitary(4, rng);
  const Mat b = haar_unitary(4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op_norm_dist(a, b));
  }
}
BENCHMARK(BM_op_norm_dist);

void BM_phase_aligned_dist(benchmark::State& state) {
  Rng rng(2);
  const Mat a = haar_unitary(4, rng);
  const Mat b = haar_unitary(4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_aligned_dist(a, b));
  }
}
BENCHMARK(BM_phase_aligned_dist);

void BM_eig_unitary(benchmark::State& state) {
  Rng rng(3);
  const Mat g = haar_unitary(4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_unitary(g));
  }
}
BENCHMARK(BM_eig_unitary);

void BM_find_power(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  KroneckerQuery q;
  q.alphas = {std::sqrt(2.0), std::sqrt(3.0)};
  q.targets = {2.0, 4.0};
  q.epsilon = eps;
  q.m_max = 100'000'000;
  std::int64_t m = 0;
  for (auto _ : state) {
    const KroneckerResult r = find_power(q);
    m = r.m;
    benchmark::DoNotOptimize(r);
  }
  state.counters["m"] = static_cast<double>(m);
}
BENCHMARK(BM_find_power)->Arg(10)->Arg(100)->Arg(1000);

void BM_synth_blockdiag(benchmark::State& state) {
  Rng rng(4);
  const Mat u = haar_unitary(2, rng);
  const Mat v = haar_unitary(2, rng);
  const SynthOptions opts{default_j(), 1e-2, 100'000'000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth_blockdiag(u, v, opts));
  }
}
BENCHMARK(BM_synth_blockdiag);

void BM_synth_unitary(benchmark::State& state) {
  Rng rng(5);
  const Mat g = haar_unitary(4, rng);
  const SynthOptions opts{default_j(), 1e-2, 100'000'000};
  std::size_t gates = 0;
  for (auto _ : state) {
    const SynthesisReport rep = synth_unitary(g, opts);
    gates = rep.sequence.size();
    benchmark::DoNotOptimize(rep);
  }
  state.counters["gates"] = static_cast<double>(gates);
}
BENCHMARK(BM_synth_unitary);

void BM_prepare_state(benchmark::State& state) {
  Rng rng(6);
  const Vec v = random_unit_vector(4, rng);
  const SynthOptions opts{default_j(), 5e-3, 100'000'000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(prepare_state(v, opts));
  }
}
BENCHMARK(BM_prepare_state);

}  // namespace

BENCHMARK_MAIN();
