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


#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wnr/error.hpp"
#include "wnr/linalg.hpp"

using wnr::Complex;
using wnr::ComplexMatrix;
using wnr::EigMethod;

namespace {

double residual(const ComplexMatrix& m, const wnr::HermitianEigen& e) {
  // max_k ||M v_k - lambda_k v_k||
  double worst = 0.0;
  for (std::size_t k = 0; k < e.values.size(); ++k) {
    auto mv = m * std::span<const Complex>(e.vectors[k]);
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] -= e.values[k] * e.vectors[k][i];
    worst = std::max(worst, wnr::norm(mv));
  }
  return worst;
}

double orthogonality(const wnr::HermitianEigen& e) {
  double worst = 0.0;
  for (std::size_t i = 0; i < e.vectors.size(); ++i)
    for (std::size_t j = 0; j < e.vectors.size(); ++j) {
      const double want = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(wnr::inner(e.vectors[i], e.vectors[j]) - want));
    }
  return worst;
}

}  // namespace

TEST_CASE("2x2 eigenvalues match the characteristic polynomial") {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 200; ++k) {
    const double a = nd(gen), d = nd(gen);
    const Complex b(nd(gen), nd(gen));
    const ComplexMatrix m{{a, b}, {std::conj(b), d}};
    const auto [lo, hi] = oracle::hermitian2_eigs(a, b, d);
    for (auto method : {EigMethod::Auto, EigMethod::Jacobi, EigMethod::Tridiagonal}) {
      const auto v = wnr::hermitian_eigvals(m, wnr::kDefaultEigTol, method);
      CHECK(v[0] == doctest::Approx(lo).epsilon(1e-12).scale(1.0));
      CHECK(v[1] == doctest::Approx(hi).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  std::mt19937_64 gen(11);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 15;
    const auto m = oracle::random_hermitian(n, gen);
    const double scale = wnr::frobenius(m);
    for (auto method : {EigMethod::Jacobi, EigMethod::Tridiagonal}) {
      const auto e = wnr::hermitian_eigs(m, wnr::kDefaultEigTol, method);
      REQUIRE(e.values.size() == n);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
      CHECK(residual(m, e) <= 1e-10 * scale);
      CHECK(orthogonality(e) <= 1e-10);
    }
  }
}

TEST_CASE("Jacobi and tridiagonal solvers agree") {
  std::mt19937_64 gen(13);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 12;
    const auto m = oracle::random_hermitian(n, gen);
    const auto a = wnr::hermitian_eigvals(m, wnr::kDefaultEigTol, EigMethod::Jacobi);
    const auto b = wnr::hermitian_eigvals(m, wnr::kDefaultEigTol, EigMethod::Tridiagonal);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-10 * wnr::frobenius(m));
  }
}

TEST_CASE("eigenvalues of a normal matrix built from a known spectrum") {
  std::mt19937_64 gen(17);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 3 + k % 8;
    std::vector<Complex> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(i) - 2.5 + 0.01 * k;
    const auto m = wnr::re_part(oracle::normal_matrix(d, gen));
    const auto v = wnr::hermitian_eigvals(m);
    for (std::size_t i = 0; i < n; ++i) CHECK(v[i] == doctest::Approx(d[i].real()).epsilon(1e-10));
  }
}

TEST_CASE("degenerate and diagonal spectra") {
  const auto id = ComplexMatrix::identity(6);
  for (double v : wnr::hermitian_eigvals(id)) CHECK(v == doctest::Approx(1.0));
  const std::vector<Complex> d{3.0, -1.0, 2.0, 2.0};
  const auto e = wnr::hermitian_eigs(ComplexMatrix::diagonal(d));
  CHECK(e.values == std::vector<double>{-1.0, 2.0, 2.0, 3.0});
  CHECK(orthogonality(e) <= 1e-14);
  const ComplexMatrix one{{Complex(4.0)}};
  CHECK(wnr::hermitian_eigvals(one).at(0) == 4.0);
}

TEST_CASE("non-Hermitian input is rejected") {
  const ComplexMatrix m{{1.0, 2.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(wnr::hermitian_eigs(m), wnr::Error);
  try {
    wnr::hermitian_eigvals(m);
  } catch (const wnr::Error& e) {
    CHECK(e.kind() == wnr::ErrorKind::NotHermitian);
  }
}

TEST_CASE("operator norm against power iteration and closed forms") {
  std::mt19937_64 gen(19);
  for (int k = 0; k < 60; ++k) {
    const auto a = oracle::random_matrix(2 + k % 7, gen);
    CHECK(wnr::operator_norm(a) == doctest::Approx(oracle::power_norm(a)).epsilon(1e-8));
  }
  CHECK(wnr::operator_norm(ComplexMatrix{{0.0, 1.0}, {3.0, 0.0}}) == doctest::Approx(3.0));
  CHECK(wnr::operator_norm(ComplexMatrix(4)) == 0.0);
  const auto u = oracle::random_unitary(5, gen);
  CHECK(wnr::operator_norm(u) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm is adjoint invariant and submultiplicative") {
  std::mt19937_64 gen(23);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 6;
    const auto a = oracle::random_matrix(n, gen);
    const auto b = oracle::random_matrix(n, gen);
    const double na = wnr::operator_norm(a);
    CHECK(wnr::operator_norm(wnr::adjoint(a)) == doctest::Approx(na).epsilon(1e-10));
    CHECK(wnr::operator_norm(a * b) <= na * wnr::operator_norm(b) * (1 + 1e-10));
    CHECK(wnr::operator_norm(a + b) <= na + wnr::operator_norm(b) + 1e-10 * na);
    CHECK(wnr::operator_norm(wnr::adjoint(a) * a) == doctest::Approx(na * na).epsilon(1e-10));
  }
}

TEST_CASE("Cartesian parts and functional calculus") {
  std::mt19937_64 gen(29);
  const auto a = oracle::random_matrix(5, gen);
  const auto re = wnr::re_part(a);
  const auto im = wnr::im_part(a);
  CHECK(wnr::is_hermitian(re, 1e-14));
  CHECK(wnr::is_hermitian(im, 1e-14));
  CHECK(wnr::max_abs(re + Complex(0.0, 1.0) * im - a) <= 1e-14);

  const auto h = oracle::random_hermitian(5, gen);
  const auto sq = wnr::hermitian_function(h, [](double x) { return x * x; });
  CHECK(wnr::max_abs(sq - h * h) <= 1e-10);

  const auto p = wnr::adjoint(a) * a;
  const auto half = wnr::psd_power(p, 0.5);
  CHECK(wnr::max_abs(half * half - p) <= 1e-9 * wnr::frobenius(p));
  CHECK(wnr::max_abs(wnr::abs_op(a) - half) <= 1e-9 * wnr::frobenius(p));
  CHECK(wnr::max_abs(wnr::psd_power(p, 0.0) - ComplexMatrix::identity(5)) <= 1e-12);
}

TEST_CASE("inner product, norm and Rayleigh quotient") {
  const wnr::Vector x{Complex(1.0, 1.0), Complex(0.0, 2.0)};
  const wnr::Vector y{Complex(2.0, 0.0), Complex(1.0, 0.0)};
  CHECK(wnr::inner(x, y) == Complex(2.0, 4.0));
  CHECK(wnr::norm(x) == doctest::Approx(std::sqrt(6.0)));
  const ComplexMatrix a{{0.0, 1.0}, {3.0, 0.0}};
  const wnr::Vector u{Complex(std::sqrt(0.5)), Complex(std::sqrt(0.5))};
  CHECK(std::abs(wnr::rayleigh(a, u) - Complex(2.0)) <= 1e-14);
  CHECK_THROWS_AS(wnr::rayleigh(a, x), wnr::Error);
}

TEST_CASE("matrix construction validates input") {
  CHECK_THROWS_AS(ComplexMatrix(0), wnr::Error);
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), wnr::Error);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), wnr::Error);
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex(std::nan(""), 0.0)}), wnr::Error);
  ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  CHECK_THROWS_AS(a += ComplexMatrix(3), wnr::Error);
}
