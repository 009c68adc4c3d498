// Copyright 2026 The wnr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WNR_LINALG_HPP
#define WNR_LINALG_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace wnr {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

inline constexpr double kDefaultEigTol = 1e-11;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// 1x1 zero matrix.
  ComplexMatrix() : n_(1), a_(1) {}
  /// n x n zero matrix; n must be positive.
  explicit ComplexMatrix(std::size_t n);
  /// Takes ownership of n*n row-major entries; all must be finite.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);

  std::size_t dim() const noexcept { return n_; }
  std::span<const Complex> entries() const noexcept { return a_; }

  Complex operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) noexcept {
    return a_[i * n_ + j];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
Vector operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);
/// (A + A*) / 2
ComplexMatrix re_part(const ComplexMatrix& a);
/// (A - A*) / (2i)
ComplexMatrix im_part(const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);
double frobenius(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol);

struct HermitianEigen {
  std::vector<double> values;   // ascending
  std::vector<Vector> vectors;  // vectors[k] pairs with values[k]
};

enum class EigMethod {
  Auto,         // Jacobi up to kJacobiMaxDim, tridiagonal QL above
  Jacobi,       // cyclic Jacobi rotations
  Tridiagonal,  // Householder tridiagonalisation + implicit QL
};

/// Spectral decomposition of a Hermitian matrix.
/// Throws NotHermitian / NoConvergence.
HermitianEigen hermitian_eigs(const ComplexMatrix& m, double eig_tol = kDefaultEigTol,
                              EigMethod method = EigMethod::Auto);
/// Same as hermitian_eigs but skips the eigenvector accumulation.
std::vector<double> hermitian_eigvals(const ComplexMatrix& m,
                                      double eig_tol = kDefaultEigTol,
                                      EigMethod method = EigMethod::Auto);

inline constexpr std::size_t kJacobiMaxDim = 4;
inline constexpr int kJacobiMaxSweeps = 64;

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);
/// (A*A)^{1/2}
ComplexMatrix abs_op(const ComplexMatrix& a);
/// f applied to the spectrum of a Hermitian matrix.
ComplexMatrix hermitian_function(const ComplexMatrix& m,
                                 const std::function<double(double)>& f);
/// T^r for positive semidefinite T; negative rounding noise in the spectrum
/// is clamped to zero and 0^0 is taken as 1.
ComplexMatrix psd_power(const ComplexMatrix& t, double r);

/// <x, y> = sum x_i conj(y_i)
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);
/// <Ax, x> for a unit vector x (NotUnitVector otherwise).
Complex rayleigh(const ComplexMatrix& a, std::span<const Complex> x);

}  // namespace wnr

#endif
