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
#include <complex>
#include <cstdint>
#include <vector>

// Dense complex linear algebra specialized to the 2x2 and 4x4 matrices this
// library works with. Everything is a plain value type; all functions are
// pure and safe to call concurrently.

namespace jsynth {

using cplx = std::complex<double>;

class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : dim_(dim) { entries_.fill(cplx{}); }

  int dim() const { return dim_; }
  cplx& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const {
    return entries_[static_cast<std::size_t>(i)];
  }

  double norm() const;

 private:
  int dim_ = 0;
  std::array<cplx, 4> entries_{};
};

class Mat {
 public:
  Mat() = default;
  explicit Mat(int dim) : dim_(dim) { entries_.fill(cplx{}); }

  static Mat identity(int dim);
  static Mat diag(const Vec& d);

  int dim() const { return dim_; }
  cplx& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r * dim_ + c)];
  }
  const cplx& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * dim_ + c)];
  }

 private:
  int dim_ = 0;
  std::array<cplx, 16> entries_{};
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator*(cplx s, const Mat& a);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);

Mat adjoint(const Mat& a);
cplx trace(const Mat& a);
cplx det(const Mat& a);  // dim 2 or 4
cplx inner(const Vec& a, const Vec& b);  // <a, b> = sum conj(a_i) b_i

enum class Side { Left, Right };

// tensor_id(a, Left) = a (x) I, tensor_id(a, Right) = I (x) a, in the basis
// ordering (00, 01, 10, 11).
Mat tensor_id(const Mat& a, Side side);

// Largest singular value.
double op_norm(const Mat& a);
double op_norm_dist(const Mat& a, const Mat& b);

// ||M M^dag - I||_op.
double unitarity_residual(const Mat& m);
bool is_unitary(const Mat& m, double tol = 1e-10);

struct PhaseAlignment {
  double dist;   // min over delta of ||e^{i delta} A - B||_op
  double delta;  // the minimizing phase
};
PhaseAlignment phase_align(const Mat& a, const Mat& b);
double phase_aligned_dist(const Mat& a, const Mat& b);

struct EigenPair {
  double angle;  // eta, eigenvalue e^{i eta}, normalized to (-pi, pi]
  Vec vector;    // unit eigenvector
};

// Eigendecomposition of a unitary (hence normal) matrix. Returns dim
// orthonormal pairs ordered by ascending angle (lexicographic tie-break on
// vector entries). Throws std::invalid_argument if m is not unitary within
// 1e-10 and std::runtime_error if the solver fails to converge.
std::vector<EigenPair> eig_unitary(const Mat& m);

struct HermEig {
  std::array<double, 4> values;  // ascending; first dim entries valid
  Mat vectors;                   // columns are orthonormal eigenvectors
};

// Cyclic Jacobi diagonalization of a Hermitian matrix (dim 2 or 4).
HermEig herm_eig(const Mat& h);

namespace detail {
// m * theta reduced to [0, 2pi), accurate to a few 1e-16 absolute even for
// |m| up to ~2^45 (extended-precision representation of 2pi).
double reduce_mod_two_pi(double theta, std::int64_t m);
// Wrap an angle to (-pi, pi].
double principal_angle(double a);
}  // namespace detail

}  // namespace jsynth
