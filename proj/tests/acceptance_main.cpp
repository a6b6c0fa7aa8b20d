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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Criteria that specify
// command-line behavior spawn the installed binary; the rest use the library
// directly.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "jsynth/hypersphere.hpp"
#include "jsynth/io.hpp"
#include "jsynth/kronecker.hpp"
#include "jsynth/random.hpp"
#include "jsynth/synthesis.hpp"

using namespace jsynth;
namespace fs = std::filesystem;

#ifndef JSYNTH_TOOL_PATH
#define JSYNTH_TOOL_PATH "jsynth"
#endif

namespace {

struct Failure {
  std::string detail;
};

std::vector<std::string> g_notes;

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

fs::path work_dir() {
  static const fs::path d = [] {
    const fs::path p = fs::temp_directory_path() /
                       ("jsynth_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

int run_tool(const std::string& args) {
  const std::string cmd =
      std::string(JSYNTH_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Gauge-degenerate samples (third component exactly zero) are interleaved so
// at least 50 of the first 1000 draws hit every degeneracy branch.
Vec acceptance_vector(Rng& rng, int k) {
  Vec v = random_unit_vector(4, rng);
  if (k % 10 == 0) v[2] = 0.0;
  if (k % 40 == 0) v[3] = 0.0;
  if (k % 160 == 0) v[1] = 0.0;
  const double n = v.norm();
  for (int i = 0; i < 4; ++i) v[i] /= n;
  return v;
}

// 1. Universality: 20 Haar targets through the command line at eps 5e-3,
//    each within 60 s, budget-sound reports.
void criterion_1() {
  Rng rng(0xC0FFEE01);
  double worst_slack = 1e300, worst_ms = 0;
  for (int k = 0; k < 20; ++k) {
    const Mat g = haar_unitary(4, rng);
    const fs::path t = work_dir() / ("c1_target_" + std::to_string(k) + ".txt");
    const fs::path out = work_dir() / ("c1_rep_" + std::to_string(k) + ".json");
    io::write_matrix_file(t, g);
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = run_tool("synth --target " + t.string() +
                            " --eps-step 5e-3 --out " + out.string());
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    require(rc == 0, "synth exit code " + std::to_string(rc));
    require(ms <= 60000.0, "synthesis took " + std::to_string(ms) + " ms");
    const io::ParsedReport rep = io::parse_report_file(out);
    require(rep.measured_error <= rep.total_budget + 1e-9,
            "budget violated: measured " + std::to_string(rep.measured_error) +
                " > budget " + std::to_string(rep.total_budget));
    // independent re-evaluation of the emitted sequence
    const double re = phase_aligned_dist(evaluate(rep.sequence), g);
    require(re <= rep.total_budget + 1e-9, "re-evaluation violates budget");
    worst_slack = std::min(worst_slack, rep.total_budget - rep.measured_error);
    worst_ms = std::max(worst_ms, ms);
  }
  std::ostringstream ss;
  ss << "20/20 targets, max wall " << worst_ms / 1000.0 << " s, min slack "
     << worst_slack;
  g_notes.push_back(ss.str());
}

// 2. Kronecker suite: 100 random 2-coordinate targets at eps 1e-2 all land
//    below the cap; median query time <= 1 s.
void criterion_2() {
  Rng rng(0xC0FFEE02);
  std::vector<double> times;
  std::int64_t max_m = 0;
  for (int k = 0; k < 100; ++k) {
    KroneckerQuery q;
    q.alphas = {std::sqrt(2.0), std::sqrt(3.0)};
    q.targets = {uniform01(rng) * 2 * std::numbers::pi,
                 uniform01(rng) * 2 * std::numbers::pi};
    q.epsilon = 1e-2;
    q.m_max = 100'000'000;
    const auto t0 = std::chrono::steady_clock::now();
    const KroneckerResult r = find_power(q);
    times.push_back(std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count());
    require(!r.exhausted, "query " + std::to_string(k) + " exhausted");
    require(r.m <= 100'000'000, "m above cap");
    require(std::max(r.achieved_errors[0], r.achieved_errors[1]) < 1e-2,
            "achieved error above eps");
    max_m = std::max(max_m, r.m);
  }
  std::nth_element(times.begin(), times.begin() + 50, times.end());
  require(times[50] <= 1.0,
          "median time " + std::to_string(times[50]) + " s");
  std::ostringstream ss;
  ss << "100/100 hits, median " << times[50] * 1e3 << " ms, max m " << max_m;
  g_notes.push_back(ss.str());
}

// 3. The quarter-turn block power at eps 1e-2.
void criterion_3() {
  const JGate j = default_j();
  const ApproxPower s3 = approx_block_sigma(j, 1e-2);
  require(!s3.exhausted, "sigma search exhausted");
  Mat sigma_blk(4);
  const Mat s = ry(std::numbers::pi / 2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) sigma_blk.at(i, k) = s.at(i, k);
  sigma_blk.at(2, 2) = sigma_blk.at(3, 3) = 1.0;
  const double err = op_norm_dist(j_power(j, s3.m), sigma_blk);
  require(err <= 2e-2, "sigma error " + std::to_string(err));
  const double quad = op_norm_dist(j_power(j, 4 * s3.m), Mat::identity(4));
  require(quad <= 8e-2, "fourth power error " + std::to_string(quad));
  std::ostringstream ss;
  ss << "m3 = " << s3.m << ", error " << err << ", J^{4 m3} vs I " << quad;
  g_notes.push_back(ss.str());
}

// 4. Hypersphere round trip on 1000 vectors incl. >= 50 gauge-degenerate.
void criterion_4() {
  Rng rng(0xC0FFEE04);
  int degenerate = 0;
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const Vec v = acceptance_vector(rng, k);
    if (v[2] == cplx{}) ++degenerate;
    const CoordsResult cr = to_coords(v);
    const Vec back = from_coords(cr.c);
    double d = 0;
    for (int i = 0; i < 4; ++i) {
      d = std::max(d,
                   std::abs(back[i] - std::polar(1.0, -cr.gauge_phase) * v[i]));
    }
    worst = std::max(worst, d);
    require(d <= 1e-12, "round trip error " + std::to_string(d));
  }
  require(degenerate >= 50, "only " + std::to_string(degenerate) +
                                " gauge-degenerate samples");
  std::ostringstream ss;
  ss << "1000 vectors (" << degenerate << " degenerate), worst " << worst;
  g_notes.push_back(ss.str());
}

// 5. Pole mapping zeroes the first three components.
void criterion_5() {
  Rng rng(0xC0FFEE04);  // the same 1000 vectors as criterion 4
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const Vec v = acceptance_vector(rng, k);
    const PoleMap pm = build_pole_map(v);
    const Vec img = pm.r * v;
    const double z =
        std::max({std::abs(img[0]), std::abs(img[1]), std::abs(img[2])});
    const double u = std::fabs(std::abs(img[3]) - 1.0);
    require(z <= 1e-10, "pole residual " + std::to_string(z));
    require(u <= 1e-10, "fourth component modulus off by " + std::to_string(u));
    worst = std::max({worst, z, u});
  }
  g_notes.push_back("1000 vectors, worst residual " + std::to_string(worst));
}

// 6. Block-diagonal closure at eps 5e-3; identity pair collapses to nothing.
void criterion_6() {
  const SynthOptions opts;
  Rng rng(0xC0FFEE06);
  double worst_slack = 1e300;
  for (int k = 0; k < 50; ++k) {
    const Mat u = haar_unitary(2, rng);
    const Mat v = haar_unitary(2, rng);
    int exhausted = 0;
    const GateSequence seq = synth_blockdiag(u, v, opts, &exhausted);
    require(exhausted == 0, "exhausted step");
    Mat target(4);
    for (int i = 0; i < 2; ++i)
      for (int jj = 0; jj < 2; ++jj) {
        target.at(i, jj) = u.at(i, jj);
        target.at(i + 2, jj + 2) = v.at(i, jj);
      }
    const double d = phase_aligned_dist(evaluate(seq), target);
    require(d <= seq.total_budget + 1e-9, "budget violated");
    worst_slack = std::min(worst_slack, seq.total_budget - d);
  }
  const GateSequence empty =
      synth_blockdiag(Mat::identity(2), Mat::identity(2), opts);
  require(empty.size() == 0, "identity pair not empty");
  g_notes.push_back("50/50 pairs sound, min slack " +
                    std::to_string(worst_slack) + ", identity empty");
}

// 7. Exchange identity to machine precision.
void criterion_7() {
  Rng rng(0xC0FFEE07);
  Mat sigma(2);
  sigma.at(0, 1) = -1.0;
  sigma.at(1, 0) = 1.0;
  for (int k = 0; k < 100; ++k) {
    Mat d(2);
    d.at(0, 0) = std::polar(1.0, uniform01(rng) * 2 * std::numbers::pi);
    d.at(1, 1) = std::polar(1.0, uniform01(rng) * 2 * std::numbers::pi);
    Mat swapped(2);
    swapped.at(0, 0) = d.at(1, 1);
    swapped.at(1, 1) = d.at(0, 0);
    require(op_norm_dist(sigma * d * adjoint(sigma), swapped) <= 1e-15,
            "exchange identity failed");
    require(op_norm_dist(exchange_conjugate(d), swapped) <= 1e-15,
            "exchange_conjugate mismatch");
  }
  g_notes.push_back("100/100 diagonal pairs at 1e-15");
}

// 8. Rank-1 commuting eigenfactors rebuild the target in any order.
void criterion_8() {
  Rng rng(0xC0FFEE08);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const Mat g = haar_unitary(4, rng);
    const auto factors = factor_eigen(g);
    for (const bool reversed : {false, true}) {
      Mat prod = Mat::identity(4);
      for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        const auto& f = factors[reversed ? factors.size() - 1 - idx : idx];
        Mat fac = Mat::identity(4);
        for (int i = 0; i < 4; ++i)
          for (int jj = 0; jj < 4; ++jj)
            fac.at(i, jj) += (std::polar(1.0, f.eta) - 1.0) * f.vector[i] *
                             std::conj(f.vector[jj]);
        prod = prod * fac;
      }
      const double d = op_norm_dist(prod, g);
      require(d <= 1e-9, "reconstruction error " + std::to_string(d));
      worst = std::max(worst, d);
    }
  }
  g_notes.push_back("100 targets x 2 orders, worst " + std::to_string(worst));
}

// 9. State preparation through the command line: fidelity >= 1 - budget and
//    budget <= 0.2 at eps 5e-3.
void criterion_9() {
  Rng rng(0xC0FFEE09);
  double worst_budget = 0;
  for (int k = 0; k < 100; ++k) {
    const Vec v = acceptance_vector(rng, k);
    const fs::path st = work_dir() / ("c9_state_" + std::to_string(k) + ".txt");
    const fs::path out = work_dir() / ("c9_prep_" + std::to_string(k) + ".json");
    io::write_state_file(st, v);
    const int rc = run_tool("prepare --state " + st.string() +
                            " --eps-step 5e-3 --out " + out.string());
    require(rc == 0, "prepare exit code " + std::to_string(rc));
    // minimal JSON field extraction
    const std::string j = slurp(out);
    auto field = [&](const std::string& key) {
      const auto pos = j.find("\"" + key + "\":");
      require(pos != std::string::npos, "missing key " + key);
      return std::stod(j.substr(pos + key.size() + 3));
    };
    const double fidelity = field("fidelity");
    const double budget = field("total_budget");
    require(fidelity >= 1.0 - budget - 1e-9,
            "fidelity " + std::to_string(fidelity) + " below 1 - budget");
    require(budget <= 0.2, "budget " + std::to_string(budget));
    worst_budget = std::max(worst_budget, budget);
  }
  g_notes.push_back("100/100 states, max budget " +
                    std::to_string(worst_budget));
}

// 10. Bench determinism: identical flags and seed give byte-identical CSV.
void criterion_10() {
  const fs::path a = work_dir() / "bench_a.csv";
  const fs::path b = work_dir() / "bench_b.csv";
  const std::string flags = "bench --trials 2 --eps-step 5e-3,1e-2 --seed 7 ";
  require(run_tool(flags + "--out " + a.string()) == 0, "bench run 1 failed");
  require(run_tool(flags + "--out " + b.string()) == 0, "bench run 2 failed");
  const std::string ca = slurp(a), cb = slurp(b);
  require(!ca.empty(), "empty CSV");
  require(ca == cb, "CSV files differ between runs");
  g_notes.push_back("byte-identical CSV, " +
                    std::to_string(std::count(ca.begin(), ca.end(), '\n') - 1) +
                    " rows");
}

// 11. Monotone refinement: eps 1e-3 never measures worse than eps 1e-2.
void criterion_11() {
  Rng rng(0xC0FFEE11);
  std::ostringstream ss;
  for (int k = 0; k < 5; ++k) {
    const Mat g = haar_unitary(4, rng);
    SynthOptions coarse;
    coarse.eps_step = 1e-2;
    SynthOptions fine;
    fine.eps_step = 1e-3;
    const SynthesisReport rc = synth_unitary(g, coarse);
    const SynthesisReport rf = synth_unitary(g, fine);
    require(rc.exhausted_steps == 0 && rf.exhausted_steps == 0, "exhausted");
    require(rf.measured_error <= rc.measured_error,
            "target " + std::to_string(k) + ": fine " +
                std::to_string(rf.measured_error) + " > coarse " +
                std::to_string(rc.measured_error));
    ss << (k ? ", " : "") << rc.measured_error << "->" << rf.measured_error;
  }
  g_notes.push_back(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc >= 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);

  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"universality suite (20 Haar targets via cmd_synth)", criterion_1},
      {"kronecker suite (100 two-coordinate queries)", criterion_2},
      {"quarter-turn block power", criterion_3},
      {"hypersphere round trip", criterion_4},
      {"pole mapping", criterion_5},
      {"block-diagonal closure", criterion_6},
      {"exchange identity", criterion_7},
      {"eigenfactor reconstruction", criterion_8},
      {"state preparation via cmd_prepare", criterion_9},
      {"bench determinism", criterion_10},
      {"monotone refinement", criterion_11},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    g_notes.clear();
    try {
      criteria[i].second();
      std::cout << "[PASS] criterion " << (i + 1) << ": " << criteria[i].first;
      if (!g_notes.empty()) std::cout << " (" << g_notes.back() << ")";
      std::cout << "\n";
    } catch (const Failure& f) {
      std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].first
                << " -- " << f.detail << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].first
                << " -- exception: " << e.what() << "\n";
      ++failures;
    }
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
