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

#include "wnr/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wnr/error.hpp"

namespace wnr {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BadInterval: return "BadInterval";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
  if (a_.size() != n * n)
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(a_.size()));
  if (!std::all_of(a_.begin(), a_.end(), finite))
    throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
  if (n_ == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  if (!std::all_of(a_.begin(), a_.end(), finite))
    throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix re_part(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return r;
}

ComplexMatrix im_part(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  const Complex half_over_i{0.0, -0.5};
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
  return r;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (Complex z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (Complex z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  const std::size_t n = a.dim();
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
  return dev <= tol * std::max(1.0, max_abs(a));
}

namespace {

// Cyclic Jacobi on a Hermitian matrix held row-major in `h`, which is
// destroyed. Each rotation J = [[c, s u], [-s conj(u), c]] with
// u = h_pq / |h_pq| annihilates h_pq; only the upper triangle is maintained.
void jacobi(std::size_t n, std::vector<Complex>& h, std::vector<double>& w,
            std::vector<Complex>* v, double eig_tol) {
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return h[i * n + j]; };
  // upper-triangle accessor returning the logical (i, j) entry
  auto get = [&](std::size_t i, std::size_t j) -> Complex {
    return i <= j ? h[i * n + j] : std::conj(h[j * n + i]);
  };

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale += std::norm(at(i, i).real());
    for (std::size_t j = i + 1; j < n; ++j) scale += 2.0 * std::norm(at(i, j));
  }
  scale = std::sqrt(scale);

  if (v) {
    v->assign(n * n, Complex{});
    for (std::size_t i = 0; i < n; ++i) (*v)[i * n + i] = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) at(i, i) = at(i, i).real();

  const double eps = std::numeric_limits<double>::epsilon();
  const double target = static_cast<double>(n) * eps * scale;
  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    if (std::sqrt(off) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = at(p, q);
        const double r = std::abs(hpq);
        if (r <= 1e-3 * target / static_cast<double>(n)) continue;
        const Complex u = hpq / r;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex su = s * u;
        const Complex sub = s * std::conj(u);
        // columns: col_p' = c col_p - s conj(u) col_q ; col_q' = s u col_p + c col_q
        // rows are the conjugate operation; we update logical entries k != p, q.
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex hkp = get(k, p);
          const Complex hkq = get(k, q);
          const Complex nkp = c * hkp - sub * hkq;
          const Complex nkq = su * hkp + c * hkq;
          if (k < p) at(k, p) = nkp; else at(p, k) = std::conj(nkp);
          if (k < q) at(k, q) = nkq; else at(q, k) = std::conj(nkq);
        }
        at(p, p) = app - t * r;
        at(q, q) = aqq + t * r;
        at(p, q) = 0.0;
        if (v) {
          auto& vm = *v;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = vm[k * n + p];
            const Complex vkq = vm[k * n + q];
            vm[k * n + p] = c * vkp - sub * vkq;
            vm[k * n + q] = su * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    if (std::sqrt(off) > eig_tol * scale)
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
  }
  w.resize(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i, i).real();
}

void check_hermitian(const ComplexMatrix& m, double eig_tol) {
  if (!is_hermitian(m, eig_tol))
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
}

// Hermitian part, so that round-off asymmetry never leaks into the solver.
std::vector<Complex> symmetrised(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> h(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i * n + i] = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h[i * n + j] = z;
      h[j * n + i] = std::conj(z);
    }
  }
  return h;
}

Eigen::MatrixXcd to_eigen(const std::vector<Complex>& h, std::size_t n) {
  Eigen::MatrixXcd e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = h[i * n + j];
  return e;
}

bool use_jacobi(std::size_t n, EigMethod method) {
  return method == EigMethod::Jacobi || (method == EigMethod::Auto && n <= kJacobiMaxDim);
}

}  // namespace

HermitianEigen hermitian_eigs(const ComplexMatrix& m, double eig_tol, EigMethod method) {
  check_hermitian(m, eig_tol);
  const std::size_t n = m.dim();
  auto h = symmetrised(m);
  HermitianEigen out;
  if (!use_jacobi(n, method)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h, n));
    if (solver.info() != Eigen::Success)
      throw Error(ErrorKind::NoConvergence, "tridiagonal QL did not converge");
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    out.vectors.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      out.vectors[k].resize(n);
      for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = solver.eigenvectors()(i, k);
    }
    return out;
  }
  std::vector<double> w;
  std::vector<Complex> v;
  jacobi(n, h, w, &v, eig_tol);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  out.values.resize(n);
  out.vectors.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t col = order[k];
    out.values[k] = w[col];
    out.vectors[k].resize(n);
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i * n + col];
  }
  return out;
}

std::vector<double> hermitian_eigvals(const ComplexMatrix& m, double eig_tol,
                                      EigMethod method) {
  check_hermitian(m, eig_tol);
  const std::size_t n = m.dim();
  auto h = symmetrised(m);
  std::vector<double> w;
  if (!use_jacobi(n, method)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h, n),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw Error(ErrorKind::NoConvergence, "tridiagonal QL did not converge");
    w.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return w;
  }
  jacobi(n, h, w, nullptr, eig_tol);
  std::sort(w.begin(), w.end());
  return w;
}

double operator_norm(const ComplexMatrix& a) {
  const auto w = hermitian_eigvals(adjoint(a) * a);
  return std::sqrt(std::max(0.0, w.back()));
}

ComplexMatrix hermitian_function(const ComplexMatrix& m,
                                 const std::function<double(double)>& f) {
  const auto eig = hermitian_eigs(m);
  const std::size_t n = m.dim();
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    const Vector& x = eig.vectors[k];
    for (std::size_t i = 0; i < n; ++i) {
      const Complex xi = fk * x[i];
      for (std::size_t j = 0; j < n; ++j) r(i, j) += xi * std::conj(x[j]);
    }
  }
  return r;
}

ComplexMatrix abs_op(const ComplexMatrix& a) {
  return hermitian_function(adjoint(a) * a,
                            [](double l) { return std::sqrt(std::max(0.0, l)); });
}

ComplexMatrix psd_power(const ComplexMatrix& t, double r) {
  return hermitian_function(t, [r](double l) {
    if (r == 0.0) return 1.0;
    return std::pow(std::max(0.0, l), r);
  });
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm(std::span<const Complex> x) {
  double s = 0.0;
  for (Complex z : x) s += std::norm(z);
  return std::sqrt(s);
}

Complex rayleigh(const ComplexMatrix& a, std::span<const Complex> x) {
  if (std::abs(norm(x) - 1.0) > 1e-12)
    throw Error(ErrorKind::NotUnitVector, "rayleigh quotient needs a unit vector");
  return inner(a * x, x);
}

}  // namespace wnr
