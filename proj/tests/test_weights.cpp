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
#include <numbers>
#include <random>

#include "doctest.h"
#include "wnr/error.hpp"
#include "wnr/weights.hpp"

using wnr::WeightFn;
using wnr::WeightPair;

namespace {

constexpr double kPi = std::numbers::pi;

wnr::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const wnr::Error& e) {
    return e.kind();
  }
  FAIL("expected wnr::Error");
  return wnr::ErrorKind::BadParameter;
}

}  // namespace

TEST_CASE("builtin families evaluate to their defining formulas") {
  const auto classical = wnr::builtin("classical");
  const auto nayak = wnr::builtin("nayak");
  const auto convex = wnr::builtin("convex:0.3");
  const auto trig = wnr::builtin("trig");
  for (int k = 0; k <= 20; ++k) {
    const double t = k / 20.0;
    CHECK(classical.phi(t) == 1.0);
    CHECK(classical.psi(t) == 0.0);
    CHECK(nayak.phi(t) == 1.0);
    CHECK(nayak.psi(t) == doctest::Approx(1.0 - 2.0 * t));
    CHECK(convex.phi(t) == doctest::Approx(0.3));
    CHECK(convex.psi(t) == doctest::Approx(0.7));
    const double tt = kPi * t;
    CHECK(trig.phi(tt) == doctest::Approx(std::sin(tt / 4.0)));
    CHECK(trig.psi(tt) == doctest::Approx(std::cos(tt / 4.0)));
  }
  CHECK(trig.interval() == doctest::Approx(kPi));
  CHECK(nayak.interval() == 1.0);
  CHECK(wnr::builtin_family_names().size() == 4);
}

TEST_CASE("t outside the interval is rejected") {
  const auto nayak = wnr::builtin("nayak");
  CHECK(kind_of([&] { nayak.phi(1.5); }) == wnr::ErrorKind::OutOfInterval);
  CHECK(kind_of([&] { nayak.check_t(-0.1); }) == wnr::ErrorKind::OutOfInterval);
  CHECK_NOTHROW(nayak.phi(1.0 + 1e-14));
  CHECK(kind_of([] { wnr::builtin("nope"); }) == wnr::ErrorKind::UnknownFamily);
  CHECK(kind_of([] { wnr::builtin("convex:1.5"); }) == wnr::ErrorKind::BadParameter);
  CHECK(kind_of([] { WeightFn::constant(1.0, -2.0); }) == wnr::ErrorKind::BadInterval);
  CHECK(kind_of([] { WeightPair(WeightFn::constant(1.0, 1.0), WeightFn::constant(1.0, 2.0)); }) ==
        wnr::ErrorKind::BadInterval);
}

TEST_CASE("derivatives match central differences") {
  const std::vector<WeightFn> fns{
      WeightFn::polynomial({1.0, -2.0, 3.0, 0.5}), WeightFn::affine(2.0, -1.0),
      WeightFn::sin_quarter(kPi, 2.0), WeightFn::cos_quarter(kPi, -1.5),
      WeightFn::polynomial({0.0, 1.0}, kPi) + WeightFn::sin_quarter(kPi)};
  for (const auto& f : fns) {
    const auto d = f.derivative();
    const double T = f.interval();
    for (int k = 1; k < 10; ++k) {
      const double t = T * k / 10.0;
      const double h = 1e-5;
      const double fd = (f(t + h) - f(t - h)) / (2 * h);
      CHECK(d(t) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("Lipschitz constants bound the derivative") {
  const std::vector<WeightFn> fns{WeightFn::affine(1.0, -2.0), WeightFn::sin_quarter(kPi),
                                  WeightFn::polynomial({0.0, 1.0, -1.0}),
                                  WeightFn::cos_quarter(kPi, 3.0)};
  CHECK(fns[0].lipschitz() == 2.0);
  CHECK(fns[1].lipschitz() == 0.25);
  for (const auto& f : fns) {
    const auto d = f.derivative();
    for (int k = 0; k <= 100; ++k)
      CHECK(std::abs(d(f.interval() * k / 100.0)) <= f.lipschitz() + 1e-12);
  }
}

TEST_CASE("arithmetic on weights is pointwise") {
  const auto a = WeightFn::polynomial({1.0, 2.0});
  const auto b = WeightFn::polynomial({0.0, -2.0, 1.0});
  const auto c = a + 3.0 * b;
  for (int k = 0; k <= 10; ++k) {
    const double t = k / 10.0;
    CHECK(c(t) == doctest::Approx(a(t) + 3.0 * b(t)));
    CHECK((-a)(t) == doctest::Approx(-a(t)));
  }
  CHECK((a + (-a)).is_zero());
  CHECK(c.kind() == wnr::WeightKind::Polynomial);
  CHECK(WeightFn::affine(1.0, 0.0).kind() == wnr::WeightKind::Constant);
  CHECK(WeightFn::sin_quarter().kind() == wnr::WeightKind::SinQuarter);
  CHECK((WeightFn::sin_quarter() + WeightFn::constant(1.0)).kind() == wnr::WeightKind::Mixed);
}

TEST_CASE("pair combinators") {
  const auto n = wnr::builtin("nayak");
  const auto c = wnr::builtin("convex:0.3");
  const auto s = wnr::sum(n, c);
  const auto w = wnr::swapped(n);
  const auto m = wnr::negate_psi(n);
  for (int k = 0; k <= 10; ++k) {
    const double t = k / 10.0;
    CHECK(s.phi(t) == doctest::Approx(n.phi(t) + c.phi(t)));
    CHECK(s.psi(t) == doctest::Approx(n.psi(t) + c.psi(t)));
    CHECK(w.phi(t) == n.psi(t));
    CHECK(m.psi(t) == -n.psi(t));
    const auto v = wnr::combo_values(n, t);
    CHECK(v.sum == doctest::Approx(std::abs(2.0 - 2.0 * t)));
    CHECK(v.diff == doctest::Approx(std::abs(2.0 * t)));
    CHECK(v.alpha == std::min(v.sum, v.diff));
    CHECK(v.lambda == std::max(v.sum, v.diff));
  }
}

TEST_CASE("perturbed pairs converge at rate perturbation_size / n") {
  const auto p = wnr::builtin("trig");
  for (double n : {1.0, 3.0, 100.0}) {
    const auto q = wnr::perturbed(p, n);
    for (int k = 0; k <= 8; ++k) {
      const double t = p.interval() * k / 8.0;
      const double dev = std::abs(q.phi(t) - p.phi(t)) + std::abs(q.psi(t) - p.psi(t));
      CHECK(dev == doctest::Approx(wnr::perturbation_size(p, t) / n));
    }
  }
  CHECK(wnr::perturbation_size(p, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("Simpson quadrature") {
  CHECK(wnr::integrate([](double x) { return x * x * x; }, 0.0, 2.0, 3) == doctest::Approx(4.0));
  CHECK(wnr::integrate([](double x) { return std::sin(x); }, 0.0, kPi) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // agrees with a split evaluation
  auto f = [](double x) { return std::exp(-x) * std::cos(3 * x); };
  const double whole = wnr::integrate(f, 0.0, 2.0);
  const double split = wnr::integrate(f, 0.0, 0.7) + wnr::integrate(f, 0.7, 2.0);
  CHECK(whole == doctest::Approx(split).epsilon(1e-12));
  CHECK(kind_of([&] { wnr::integrate(f, 0.0, 1.0, 4); }) == wnr::ErrorKind::BadParameter);
}

TEST_CASE("parse and format round trip") {
  const std::vector<std::string> specs{"classical",  "nayak",       "convex:0.3",
                                       "trig",       "const:0,1",   "poly:[1,-2]|[1]",
                                       "nayak@T=2",  "poly:[0,0.5,0.25]|[-1]@T=3",
                                       "const:2,-1", "convex:1"};
  for (const auto& s : specs) {
    const auto p = wnr::parse_weights(s);
    const auto text = wnr::format_weights(p);
    const auto q = wnr::parse_weights(text);
    CHECK(q.phi == p.phi);
    CHECK(q.psi == p.psi);
    CHECK(wnr::format_weights(q) == text);
  }
  CHECK(wnr::parse_weights("nayak@T=2").interval() == 2.0);
  // an unlabelled polynomial pair still formats to something parseable
  WeightPair anon(WeightFn::affine(1.0, 0.5), WeightFn::constant(2.0));
  const auto back = wnr::parse_weights(wnr::format_weights(anon));
  CHECK(back.phi == anon.phi);
  CHECK(back.psi == anon.psi);
}

TEST_CASE("malformed weight specs") {
  CHECK(kind_of([] { wnr::parse_weights("poly:[1,2]"); }) == wnr::ErrorKind::BadParameter);
  CHECK(kind_of([] { wnr::parse_weights("poly:1,2|[1]"); }) == wnr::ErrorKind::BadParameter);
  CHECK(kind_of([] { wnr::parse_weights("const:1"); }) == wnr::ErrorKind::BadParameter);
  CHECK(kind_of([] { wnr::parse_weights("nayak@X=2"); }) == wnr::ErrorKind::BadInterval);
  CHECK(kind_of([] { wnr::parse_weights("nayak@T=-1"); }) == wnr::ErrorKind::BadInterval);
  CHECK(kind_of([] { wnr::parse_weights("hyperbolic"); }) == wnr::ErrorKind::UnknownFamily);
}
