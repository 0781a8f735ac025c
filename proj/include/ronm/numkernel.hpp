// Copyright 2026 The RoNM Authors
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

// Dense complex linear algebra for small open-system problems: system
// dimension d <= 4, so superoperators and Choi matrices are at most 16x16.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ronm {

using Complex = std::complex<double>;

// Relative hermiticity tolerance, scaled by the largest absolute entry.
inline constexpr double kHermRelTol = 1e-12;
// Absolute tolerance for eigen-reconstruction checks.
inline constexpr double kEigTol = 1e-10;
// Eigenvalues with |lambda| <= kZeroTol are treated as exact zeros when a
// spectrum is split into positive and negative parts.
inline constexpr double kZeroTol = 1e-11;

// Square, row-major, dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1) {}
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  // |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  double max_abs() const;
  // Induced 1-norm (max column sum).
  double norm1() const;
  std::vector<Complex> column(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  // Matrix-vector product.
  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermiticity within `rel_tol` times the largest absolute entry.
bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermRelTol);

// Real part of Tr[a b] computed without forming the product.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, matching eigenvalues
};

// Cyclic Jacobi for complex Hermitian input. Throws kNotHermitian.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Sum of |lambda_i| for Hermitian input. Throws kNotHermitian.
double trace_norm(const ComplexMatrix& m);

// ‖M‖₁ − Tr M = 2 Σ_{λ<0} |λ|, free of the cancellation in Σ|λ| − Tr M.
double trace_norm_excess(const ComplexMatrix& m);

// Largest and smallest eigenvalue of a Hermitian matrix.
double max_eigenvalue(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

// Scaling and squaring around a truncated Taylor series.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

// f applied to the spectrum of a Hermitian matrix.
template <typename F>
ComplexMatrix spectral_apply(const EigenDecomposition& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = f(eig.eigenvalues[k]);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = eig.eigenvectors(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += vi * std::conj(eig.eigenvectors(j, k));
      }
    }
  }
  return out;
}

// Column-stacking vectorization: vec(X)[i + j*d] = X(i, j).
std::vector<Complex> vec(const ComplexMatrix& x);
ComplexMatrix unvec(std::span<const Complex> v);

}  // namespace ronm
