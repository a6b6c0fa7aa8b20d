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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jsynth/numerics.hpp"
#include "jsynth/synthesis.hpp"

// Text formats. Matrix files: first line the dimension, then dim rows of dim
// complex entries, each written a+bi / a-bi with no interior spaces. Reals
// are printed with 17 significant digits so files round-trip bit-exactly.

namespace jsynth {
namespace io {

std::string format_real(double x);
std::string format_complex(cplx z);
// Accepts a+bi, a-bi, with optional exponents. Throws std::runtime_error
// with a diagnostic on malformed input.
cplx parse_complex(std::string_view s);

Mat read_matrix_file(const std::filesystem::path& p);
void write_matrix_file(const std::filesystem::path& p, const Mat& m);

// State files: 4 whitespace-separated complex amplitudes.
Vec read_state_file(const std::filesystem::path& p);
void write_state_file(const std::filesystem::path& p, const Vec& v);

// Atomic text write (temp file + rename).
void write_text_atomic(const std::filesystem::path& p, const std::string& text);

struct ReportMeta {
  std::string target_path;
  double alpha = 0;
  double beta = 0;
  double eps_step = 0;
};

std::string synthesis_report_json(const SynthesisReport& rep,
                                  const ReportMeta& meta);

struct ParsedReport {
  std::string target_path;
  JGate j;
  double eps_step = 0;
  GateSequence sequence;  // step ideals are not serialized; errors are
  double total_budget = 0;
  double measured_error = 0;
  double global_phase = 0;
  std::vector<double> eigen_angles;
  double wall_time_ms = 0;
  int exhausted_steps = 0;
};

ParsedReport parse_report_file(const std::filesystem::path& p);

}  // namespace io
}  // namespace jsynth
