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

#include "jsynth/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jsynth {
namespace io {

namespace {

using nlohmann::json;

std::string read_all(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

cplx parse_complex(std::string_view s) {
  const std::string str(s);
  const char* c = str.c_str();
  char* end = nullptr;
  const double re = std::strtod(c, &end);
  if (end == c) throw std::runtime_error("bad complex entry '" + str + "'");
  if (*end == '\0') {
    // Bare real is tolerated on input.
    return {re, 0.0};
  }
  if (*end != '+' && *end != '-') {
    throw std::runtime_error("bad complex entry '" + str + "'");
  }
  const char* imag_start = end;
  const double im = std::strtod(imag_start, &end);
  if (end == imag_start || *end != 'i' || *(end + 1) != '\0') {
    throw std::runtime_error("bad complex entry '" + str + "'");
  }
  return {re, im};
}

Mat read_matrix_file(const std::filesystem::path& p) {
  std::istringstream in(read_all(p));
  int dim = 0;
  if (!(in >> dim) || (dim != 2 && dim != 4)) {
    throw std::runtime_error(p.string() + ": first token must be the dimension (2 or 4)");
  }
  Mat m(dim);
  std::string tok;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (!(in >> tok)) {
        throw std::runtime_error(p.string() + ": expected " +
                                 std::to_string(dim * dim) + " entries");
      }
      m.at(i, j) = parse_complex(tok);
    }
  }
  return m;
}

void write_matrix_file(const std::filesystem::path& p, const Mat& m) {
  std::ostringstream out;
  out << m.dim() << "\n";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << format_complex(m.at(i, j));
    }
    out << "\n";
  }
  write_text_atomic(p, out.str());
}

Vec read_state_file(const std::filesystem::path& p) {
  std::istringstream in(read_all(p));
  Vec v(4);
  std::string tok;
  for (int i = 0; i < 4; ++i) {
    if (!(in >> tok)) {
      throw std::runtime_error(p.string() + ": expected 4 amplitudes");
    }
    v[i] = parse_complex(tok);
  }
  return v;
}

void write_state_file(const std::filesystem::path& p, const Vec& v) {
  std::ostringstream out;
  for (int i = 0; i < v.dim(); ++i) {
    if (i) out << ' ';
    out << format_complex(v[i]);
  }
  out << "\n";
  write_text_atomic(p, out.str());
}

void write_text_atomic(const std::filesystem::path& p, const std::string& text) {
  const std::filesystem::path tmp = p.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
  }
  std::filesystem::rename(tmp, p);
}

namespace {

json sequence_json(const GateSequence& seq) {
  json arr = json::array();
  for (const Gate& g : seq.gates) {
    if (const auto* jp = std::get_if<JPowStep>(&g)) {
      arr.push_back({{"type", "jpow"}, {"m", jp->m}, {"step_error", jp->step_error}});
    } else {
      const PermGate& p = std::get<PermStep>(g).perm;
      arr.push_back({{"type", "perm"},
                     {"perm", p.perm},
                     {"signs", p.signs},
                     {"step_error", 0.0}});
    }
  }
  return arr;
}

}  // namespace

std::string synthesis_report_json(const SynthesisReport& rep,
                                  const ReportMeta& meta) {
  json j;
  j["target_path"] = meta.target_path;
  j["alpha"] = meta.alpha;
  j["beta"] = meta.beta;
  j["eps_step"] = meta.eps_step;
  j["sequence"] = sequence_json(rep.sequence);
  j["total_budget"] = rep.sequence.total_budget;
  j["measured_error"] = rep.measured_error;
  j["global_phase"] = rep.global_phase;
  j["eigen_angles"] = rep.eigen_angles;
  j["wall_time_ms"] = rep.wall_time_ms;
  j["exhausted_steps"] = rep.exhausted_steps;
  return j.dump(2) + "\n";
}

ParsedReport parse_report_file(const std::filesystem::path& p) {
  const json j = json::parse(read_all(p));
  ParsedReport out;
  out.target_path = j.at("target_path").get<std::string>();
  out.j = JGate{j.at("alpha").get<double>(), j.at("beta").get<double>()};
  out.eps_step = j.at("eps_step").get<double>();
  out.total_budget = j.at("total_budget").get<double>();
  out.measured_error = j.at("measured_error").get<double>();
  out.global_phase = j.at("global_phase").get<double>();
  out.eigen_angles = j.at("eigen_angles").get<std::vector<double>>();
  out.wall_time_ms = j.at("wall_time_ms").get<double>();
  out.exhausted_steps = j.at("exhausted_steps").get<int>();
  out.sequence.j = out.j;
  for (const json& g : j.at("sequence")) {
    const std::string type = g.at("type").get<std::string>();
    if (type == "jpow") {
      JPowStep s;
      s.m = g.at("m").get<std::int64_t>();
      s.step_error = g.at("step_error").get<double>();
      s.ideal = Mat::identity(4);  // ideals are not serialized
      out.sequence.push(s);
    } else if (type == "perm") {
      PermStep s;
      const auto perm = g.at("perm").get<std::vector<int>>();
      const auto signs = g.at("signs").get<std::vector<int>>();
      if (perm.size() != 4 || signs.size() != 4) {
        throw std::runtime_error(p.string() + ": malformed perm gate");
      }
      for (int i = 0; i < 4; ++i) {
        s.perm.perm[i] = perm[i];
        s.perm.signs[i] = signs[i];
      }
      out.sequence.push(s);
    } else {
      throw std::runtime_error(p.string() + ": unknown gate type " + type);
    }
  }
  return out;
}

}  // namespace io
}  // namespace jsynth
