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
#include "wnr/gallery.hpp"
#include "wnr/weighted.hpp"

using wnr::Complex;
using wnr::ComplexMatrix;

namespace {

const std::vector<std::string> kFamilies{"classical", "nayak", "convex:0.3", "trig",
                                         "poly:[1,-2]|[1]", "const:0,1"};

double sample_t(const wnr::WeightPair& p, std::mt19937_64& gen) {
  return std::uniform_real_distribution<double>(0.0, p.interval())(gen);
}

}  // namespace

TEST_CASE("weighted operator is phi A + psi A*") {
  std::mt19937_64 gen(201);
  const auto a = oracle::random_matrix(4, gen);
  const auto p = wnr::builtin("nayak");
  const auto b = wnr::weighted_operator(a, p, 0.25);
  CHECK(wnr::max_abs(b - (a + Complex(0.5) * wnr::adjoint(a))) <= 1e-15);
  CHECK_THROWS_AS(wnr::weighted_operator(a, p, 2.0), wnr::Error);
  CHECK(wnr::weighted_norm(a, p, 0.25) == doctest::Approx(wnr::operator_norm(b)));
}

TEST_CASE("classical weights reproduce the unweighted quantities") {
  std::mt19937_64 gen(203);
  const auto p = wnr::builtin("classical");
  for (int k = 0; k < 20; ++k) {
    const auto a = oracle::random_matrix(2 + k % 5, gen);
    const auto q = wnr::weighted_quantities(a, p, 0.5);
    const auto f = wnr::field_of_values(a);
    CHECK(q.radius.value == doctest::Approx(f.radius.value).epsilon(1e-12));
    CHECK(q.crawford.value == doctest::Approx(f.crawford.value).epsilon(1e-12));
    CHECK(q.norm == doctest::Approx(wnr::operator_norm(a)));
  }
}

TEST_CASE("2x2 weighted values against the elliptical range of B_t") {
  std::mt19937_64 gen(207);
  for (int k = 0; k < 120; ++k) {
    const auto p = wnr::parse_weights(kFamilies[k % kFamilies.size()]);
    const double t = sample_t(p, gen);
    auto a = oracle::random_matrix(2, gen);
    if (k % 3 == 0) a += Complex(2.0, 0.5) * ComplexMatrix::identity(2);
    const auto f = p.phi(t), g = p.psi(t);
    ComplexMatrix b(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b(i, j) = f * a(i, j) + g * std::conj(a(j, i));
    const auto ref = oracle::range_2x2(b);
    const auto q = wnr::weighted_quantities(a, p, t);
    const double tol = 1e-8 * std::max(1.0, q.norm);
    CHECK(q.radius.lower <= ref.radius + tol);
    CHECK(ref.radius <= q.radius.upper + tol);
    CHECK(q.crawford.lower <= ref.crawford + tol);
    CHECK(ref.crawford <= q.crawford.upper + tol);
  }
}

TEST_CASE("antidiagonal closed form matches the sweep") {
  std::mt19937_64 gen(211);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 200; ++k) {
    const auto p = wnr::parse_weights(kFamilies[k % kFamilies.size()]);
    const double t = sample_t(p, gen);
    const Complex a(nd(gen), nd(gen)), b(nd(gen), nd(gen));
    const ComplexMatrix m{{0.0, a}, {b, 0.0}};
    const double closed = wnr::antidiagonal_radius_closed_form(a, b, p, t);
    const auto sweep = wnr::weighted_radius(m, p, t);
    CHECK(std::abs(closed - sweep.value) <= 1e-7 * std::max(1.0, closed));
    CHECK(sweep.lower <= closed + 1e-12);
    CHECK(closed <= sweep.upper + 1e-12);
  }
}

TEST_CASE("the 2x2 example has omega 2 and vanishing Crawford number") {
  const auto a = wnr::example_2x2();
  const auto w = wnr::numerical_radius(a);
  CHECK(std::abs(w.value - 2.0) <= 1e-7);
  std::mt19937_64 gen(213);
  for (int k = 0; k < 20; ++k) {
    const auto p = wnr::builtin(wnr::builtin_family_names()[k % 4]);
    const double t = sample_t(p, gen);
    const auto c = wnr::weighted_crawford(a, p, t);
    CHECK(c.value == 0.0);
    CHECK(c.lower == 0.0);
  }
}

TEST_CASE("symmetries of omega_t") {
  std::mt19937_64 gen(217);
  for (int k = 0; k < 40; ++k) {
    const auto p = wnr::parse_weights(kFamilies[k % kFamilies.size()]);
    const double t = sample_t(p, gen);
    const auto a = oracle::random_matrix(2 + k % 5, gen);
    const auto base = wnr::weighted_radius(a, p, t);
    const double tol = 1e-9 * std::max(1.0, base.value);
    auto same = [&](const wnr::CertifiedValue& c) {
      CHECK(c.lower <= base.upper + tol);
      CHECK(base.lower <= c.upper + tol);
    };
    same(wnr::weighted_radius(wnr::adjoint(a), p, t));
    same(wnr::weighted_radius(a, wnr::swapped(p), t));
    same(wnr::weighted_radius(Complex(0.0, 1.0) * a, wnr::negate_psi(p), t));
    // Hermitian A: B_t = (phi + psi) A
    const auto h = wnr::re_part(a);
    const double s = std::abs(p.phi(t) + p.psi(t));
    CHECK(wnr::weighted_radius(h, p, t).value ==
          doctest::Approx(s * wnr::hermitian_radius(h)).epsilon(1e-9).scale(1e-12));
  }
}

TEST_CASE("omega_t, ||A||_t two-sided comparison and triangle inequality") {
  std::mt19937_64 gen(219);
  for (int k = 0; k < 60; ++k) {
    const auto p = wnr::parse_weights(kFamilies[k % kFamilies.size()]);
    const double t = sample_t(p, gen);
    const auto a = oracle::random_matrix(2 + k % 6, gen);
    const auto b = oracle::random_matrix(a.dim(), gen);
    const auto qa = wnr::weighted_quantities(a, p, t);
    const auto qb = wnr::weighted_quantities(b, p, t);
    const double tol = 1e-9 * std::max(1.0, qa.norm + qb.norm);
    CHECK(qa.radius.lower <= qa.norm + tol);
    CHECK(qa.norm <= 2.0 * qa.radius.upper + tol);
    CHECK(wnr::weighted_radius(a + b, p, t).lower <= qa.radius.upper + qb.radius.upper + tol);
    CHECK(wnr::weighted_norm(a + b, p, t) <= qa.norm + qb.norm + tol);
  }
}

TEST_CASE("direct sums are the blockwise maximum") {
  std::mt19937_64 gen(223);
  for (int k = 0; k < 30; ++k) {
    const auto p = wnr::parse_weights(kFamilies[k % kFamilies.size()]);
    const double t = sample_t(p, gen);
    const std::vector<ComplexMatrix> blocks{oracle::random_matrix(2, gen),
                                            oracle::random_matrix(1 + k % 3, gen),
                                            oracle::random_matrix(3, gen)};
    const auto whole = wnr::weighted_radius(wnr::direct_sum(blocks), p, t);
    const double parts = wnr::direct_sum_radius(blocks, p, t);
    CHECK(std::abs(whole.value - parts) <= 1e-9 * std::max(1.0, parts));
  }
  const auto d = wnr::direct_sum(std::vector<ComplexMatrix>{ComplexMatrix::identity(2),
                                                            ComplexMatrix{{Complex(5.0)}}});
  CHECK(d.dim() == 3);
  CHECK(d(2, 2) == Complex(5.0));
  CHECK(d(0, 2) == Complex(0.0));
  CHECK_THROWS_AS(wnr::direct_sum({}), wnr::Error);
}

TEST_CASE("t sweeps cover the interval and bracket each value") {
  std::mt19937_64 gen(227);
  const auto a = oracle::random_matrix(3, gen);
  const auto p = wnr::builtin("trig");
  const auto c = wnr::t_sweep(a, p, wnr::Quantity::Radius, 9);
  REQUIRE(c.ts.size() == 9);
  CHECK(c.ts.front() == 0.0);
  CHECK(c.ts.back() == p.interval());
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(c.lower[i] <= c.values[i]);
    CHECK(c.values[i] <= c.upper[i]);
    CHECK(c.values[i] == doctest::Approx(wnr::weighted_radius(a, p, c.ts[i]).value));
  }
  const auto n = wnr::t_sweep(a, p, wnr::Quantity::Norm, 3);
  CHECK(n.values[1] == doctest::Approx(wnr::weighted_norm(a, p, n.ts[1])));
  CHECK(n.lower == n.upper);
  CHECK_THROWS_AS(wnr::t_sweep(a, p, wnr::Quantity::Crawford, 1), wnr::Error);
}

TEST_CASE("quantity names") {
  for (auto q : {wnr::Quantity::Radius, wnr::Quantity::Crawford, wnr::Quantity::Norm})
    CHECK(wnr::parse_quantity(wnr::to_string(q)) == q);
  CHECK_THROWS_AS(wnr::parse_quantity("spectral"), wnr::Error);
}
