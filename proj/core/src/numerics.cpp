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

#include "jsynth/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jsynth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dim(int dim, const char* where) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument(std::string(where) + ": dim must be 2 or 4");
  }
}

void check_same_dim(const Mat& a, const Mat& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  }
}

}  // namespace

double Vec::norm() const {
  double s = 0;
  for (int i = 0; i < dim_; ++i) s += std::norm(entries_[i]);
  return std::sqrt(s);
}

Mat Mat::identity(int dim) {
  check_dim(dim, "identity");
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.dim());
  for (int i = 0; i < d.dim(); ++i) m.at(i, i) = d[i];
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "operator*");
  const int n = a.dim();
  Mat c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

Mat operator*(cplx s, const Mat& a) {
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "operator+");
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "operator-");
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.dim() != v.dim()) {
    throw std::invalid_argument("mat*vec: dimension mismatch");
  }
  Vec r(v.dim());
  for (int i = 0; i < a.dim(); ++i) {
    cplx s{};
    for (int j = 0; j < a.dim(); ++j) s += a.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat adjoint(const Mat& a) {
  Mat c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c.at(i, j) = std::conj(a.at(j, i));
  return c;
}

cplx trace(const Mat& a) {
  cplx s{};
  for (int i = 0; i < a.dim(); ++i) s += a.at(i, i);
  return s;
}

cplx det(const Mat& a) {
  if (a.dim() == 2) {
    return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  }
  // Laplace expansion over the first row with 3x3 cofactors.
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return a.at(r0, c0) * (a.at(r1, c1) * a.at(r2, c2) - a.at(r1, c2) * a.at(r2, c1)) -
           a.at(r0, c1) * (a.at(r1, c0) * a.at(r2, c2) - a.at(r1, c2) * a.at(r2, c0)) +
           a.at(r0, c2) * (a.at(r1, c0) * a.at(r2, c1) - a.at(r1, c1) * a.at(r2, c0));
  };
  cplx d{};
  d += a.at(0, 0) * det3(1, 2, 3, 1, 2, 3);
  d -= a.at(0, 1) * det3(1, 2, 3, 0, 2, 3);
  d += a.at(0, 2) * det3(1, 2, 3, 0, 1, 3);
  d -= a.at(0, 3) * det3(1, 2, 3, 0, 1, 2);
  return d;
}

cplx inner(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  cplx s{};
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Mat tensor_id(const Mat& a, Side side) {
  if (a.dim() != 2) {
    throw std::invalid_argument("tensor_id: factor must be 2x2");
  }
  Mat c(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        if (side == Side::Left) {
          c.at(2 * i + k, 2 * j + k) = a.at(i, j);
        } else {
          c.at(2 * k + i, 2 * k + j) = a.at(i, j);
        }
      }
    }
  }
  return c;
}

HermEig herm_eig(const Mat& h_in) {
  const int n = h_in.dim();
  check_dim(n, "herm_eig");
  // Symmetrize to remove rounding asymmetry; the input is Hermitian by
  // contract.
  Mat h = h_in;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx avg = 0.5 * (h_in.at(i, j) + std::conj(h_in.at(j, i)));
      h.at(i, j) = avg;
    }
    h.at(i, i) = cplx(h.at(i, i).real(), 0.0);
  }

  Mat v = Mat::identity(n);
  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;

  auto off_max = [&]() {
    double m = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) m = std::max(m, std::abs(h.at(p, q)));
    return m;
  };

  int sweep = 0;
  while (off_max() > kOffTol) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("herm_eig: no convergence after " +
                               std::to_string(kMaxSweeps) + " sweeps");
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx hpq = h.at(p, q);
        const double b = std::abs(hpq);
        if (b <= kOffTol * 1e-3) continue;
        const double phi = std::arg(hpq);
        const double app = h.at(p, p).real();
        const double aqq = h.at(q, q).real();
        // Phase + real Jacobi rotation zeroing the (p, q) entry.
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx eip = std::polar(1.0, phi / 2);
        const cplx eim = std::conj(eip);
        Mat u = Mat::identity(n);
        u.at(p, p) = c * eip;
        u.at(p, q) = s * eip;
        u.at(q, p) = -s * eim;
        u.at(q, q) = c * eim;
        h = adjoint(u) * h * u;
        v = v * u;
        for (int i = 0; i < n; ++i) h.at(i, i) = cplx(h.at(i, i).real(), 0.0);
      }
    }
  }

  HermEig out;
  out.vectors = Mat(n);
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.begin() + n,
            [&](int x, int y) { return h.at(x, x).real() < h.at(y, y).real(); });
  for (int k = 0; k < n; ++k) {
    out.values[k] = h.at(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
  }
  return out;
}

double op_norm(const Mat& a) {
  // Largest singular value via the eigenvalues of the PSD matrix a^dag a.
  const Mat m = adjoint(a) * a;
  const HermEig e = herm_eig(m);
  const double top = e.values[a.dim() - 1];
  return std::sqrt(std::max(0.0, top));
}

double op_norm_dist(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "op_norm_dist");
  return op_norm(a - b);
}

double unitarity_residual(const Mat& m) {
  return op_norm_dist(m * adjoint(m), Mat::identity(m.dim()));
}

bool is_unitary(const Mat& m, double tol) {
  return unitarity_residual(m) <= tol;
}

PhaseAlignment phase_align(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "phase_align");
  auto f = [&](double delta) {
    return op_norm_dist(std::polar(1.0, delta) * a, b);
  };
  // f is 1-Lipschitz in delta, so a coarse scan brackets the global minimum
  // and local refinement finishes the job. The trace-alignment candidate is
  // the Frobenius-optimal phase and is included in the candidate set.
  double best_d = 0.0, best_f = f(0.0);
  constexpr int kCoarse = 256;
  for (int i = 1; i < kCoarse; ++i) {
    const double d = kTwoPi * i / kCoarse;
    const double fd = f(d);
    if (fd < best_f) {
      best_f = fd;
      best_d = d;
    }
  }
  const cplx tr = trace(adjoint(a) * b);
  if (std::abs(tr) > 1e-300) {
    const double d = std::arg(tr);
    const double fd = f(d);
    if (fd < best_f) {
      best_f = fd;
      best_d = d;
    }
  }
  double h = kTwoPi / kCoarse;
  while (h > 1e-12) {
    constexpr int kFine = 16;
    const double lo = best_d - h;
    const double step = 2.0 * h / (2 * kFine);
    for (int i = 0; i <= 2 * kFine; ++i) {
      const double d = lo + step * i;
      const double fd = f(d);
      if (fd < best_f) {
        best_f = fd;
        best_d = d;
      }
    }
    h = step;
  }
  return {best_f, detail::principal_angle(best_d)};
}

double phase_aligned_dist(const Mat& a, const Mat& b) {
  return phase_align(a, b).dist;
}

std::vector<EigenPair> eig_unitary(const Mat& m) {
  const int n = m.dim();
  check_dim(n, "eig_unitary");
  if (!is_unitary(m, 1e-10)) {
    throw std::invalid_argument("eig_unitary: matrix not unitary within 1e-10");
  }

  const Mat mdag = adjoint(m);
  Mat h1(n), h2(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h1.at(i, j) = 0.5 * (m.at(i, j) + mdag.at(i, j));
      h2.at(i, j) = cplx(0.0, -0.5) * (m.at(i, j) - mdag.at(i, j));
    }
  }

  // H1 and H2 commute and share eigenvectors with m. A single Hermitian
  // combination cos(t) H1 + sin(t) H2 separates every eigenvalue pair unless
  // t is unlucky (eta_i + eta_j = 2t mod 2pi), so a fixed list of well-spread
  // t candidates always contains a good one; the residual check picks it.
  constexpr std::array<double, 6> kAngles{0.0, 0.77, 1.54, 2.31, 3.08, 3.85};
  std::vector<EigenPair> best;
  double best_res = 1e300;
  for (double t : kAngles) {
    Mat comb(n);
    const double ct = std::cos(t), st = std::sin(t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        comb.at(i, j) = ct * h1.at(i, j) + st * h2.at(i, j);
    const HermEig e = herm_eig(comb);
    std::vector<EigenPair> pairs(n);
    double res = 0;
    for (int k = 0; k < n; ++k) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = e.vectors.at(i, k);
      const Vec mv = m * v;
      const double eta = std::arg(inner(v, mv));
      const cplx ev = std::polar(1.0, eta);
      double r = 0;
      for (int i = 0; i < n; ++i) r += std::norm(mv[i] - ev * v[i]);
      res = std::max(res, std::sqrt(r));
      pairs[k] = EigenPair{detail::principal_angle(eta), v};
    }
    if (res < best_res) {
      best_res = res;
      best = std::move(pairs);
    }
    if (best_res <= 1e-12) break;
  }
  if (best_res > 5e-11) {
    throw std::runtime_error("eig_unitary: residual " + std::to_string(best_res) +
                             " after trying all combination angles");
  }

  // Deterministic gauge: rotate each vector so its largest-modulus entry is
  // real non-negative (lowest index on ties).
  for (EigenPair& p : best) {
    int arg_max = 0;
    double mx = -1;
    for (int i = 0; i < n; ++i) {
      const double a = std::abs(p.vector[i]);
      if (a > mx + 1e-15) {
        mx = a;
        arg_max = i;
      }
    }
    const cplx ph = std::polar(1.0, -std::arg(p.vector[arg_max]));
    for (int i = 0; i < n; ++i) p.vector[i] *= ph;
  }
  std::sort(best.begin(), best.end(), [n](const EigenPair& x, const EigenPair& y) {
    if (std::abs(x.angle - y.angle) > 1e-12) return x.angle < y.angle;
    for (int i = 0; i < n; ++i) {
      if (std::abs(x.vector[i].real() - y.vector[i].real()) > 1e-12)
        return x.vector[i].real() < y.vector[i].real();
      if (std::abs(x.vector[i].imag() - y.vector[i].imag()) > 1e-12)
        return x.vector[i].imag() < y.vector[i].imag();
    }
    return false;
  });
  return best;
}

namespace detail {

double principal_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

double reduce_mod_two_pi(double theta, std::int64_t m) {
  // Cody-Waite reduction with 2pi carried to ~150 bits across three doubles.
  constexpr double kP1 = 6.283185307179586;            // double(2pi)
  constexpr double kP2 = 2.4492935982947064e-16;       // 2pi - kP1
  constexpr double kP3 = -5.9895396194366793e-33;      // tail
  const double md = static_cast<double>(m);
  const double hi = md * theta;
  const double lo = std::fma(md, theta, -hi);  // exact residual
  const double k = std::nearbyint(hi / kP1);
  const double t1 = k * kP1;
  const double e1 = std::fma(k, kP1, -t1);  // exact residual
  const double t2 = k * kP2;
  const double e2 = std::fma(k, kP2, -t2);
  double r = (hi - t1);  // exact: hi and t1 agree to within ~2pi
  r -= e1;
  r -= t2;
  r -= e2;
  r -= k * kP3;
  r += lo;
  // One wrap pass; |r| <= ~pi + rounding at this point.
  while (r < 0) r += kTwoPi;
  while (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace detail

}  // namespace jsynth
