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

#include "doctest.h"
#include "wnr/error.hpp"
#include "wnr/index.hpp"
#include "wnr/weighted.hpp"

namespace {

wnr::SweepConfig fast_sweep() {
  wnr::SweepConfig cfg;
  cfg.grid_size = 64;
  cfg.max_extra_evals = 16;
  return cfg;
}

}  // namespace

TEST_CASE("index bounds from alpha and lambda") {
  const auto b = wnr::index_bounds(wnr::builtin("classical"), 0.4);
  CHECK(b.lower == 0.5);
  CHECK(b.upper == 0.5);
  const auto n = wnr::index_bounds(wnr::builtin("nayak"), 0.25);
  CHECK(n.lower == doctest::Approx(0.25));
  CHECK(n.upper == doctest::Approx(0.75));
  const auto t = wnr::index_bounds(wnr::builtin("trig"), std::numbers::pi);
  CHECK(t.lower == doctest::Approx(0.0).scale(1.0));
  CHECK(t.upper == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("classical index of 2x2 matrices is one half") {
  const auto e = wnr::estimate_index(2, wnr::builtin("classical"), 0.5, 2000, 10, fast_sweep());
  CHECK(e.value >= 0.49);
  CHECK(e.value <= 0.51);
  CHECK(wnr::operator_norm(e.witness) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.samples == 2000);
  CHECK(e.dim == 2);
}

TEST_CASE("estimates are attained by their witness and stay in the bracket") {
  for (double t : {0.1, 0.5, 0.9}) {
    const auto p = wnr::builtin("nayak");
    const auto e = wnr::estimate_index(3, p, t, 500, 6, fast_sweep());
    const auto again = wnr::weighted_radius(e.witness, p, t, fast_sweep());
    CHECK(again.value == doctest::Approx(e.value).epsilon(1e-9));
    CHECK(e.radius.lower <= e.value);
    CHECK(e.value >= e.lower - wnr::kIndexEstimationTol);
    CHECK(e.value <= e.upper + wnr::kIndexEstimationTol);
  }
}

TEST_CASE("index estimates are deterministic") {
  auto cfg = fast_sweep();
  cfg.rng_seed = 9;
  const auto p = wnr::builtin("convex:0.3");
  const auto a = wnr::estimate_index(2, p, 0.5, 300, 4, cfg);
  const auto b = wnr::estimate_index(2, p, 0.5, 300, 4, cfg);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.seed == 9);
}

TEST_CASE("index estimation validates input") {
  const auto p = wnr::builtin("classical");
  CHECK_THROWS_AS(wnr::estimate_index(1, p, 0.5, 10, 1), wnr::Error);
  CHECK_THROWS_AS(wnr::estimate_index(2, p, 0.5, 0, 1), wnr::Error);
  CHECK_THROWS_AS(wnr::estimate_index(2, p, 0.5, 10, -1), wnr::Error);
  CHECK_THROWS_AS(wnr::estimate_index(2, p, 1.5, 10, 1), wnr::Error);
}

TEST_CASE("index is Lipschitz in the weights") {
  wnr::CheckContext ctx;
  ctx.sweep = fast_sweep();
  const auto p = wnr::builtin("nayak");
  const auto rs = wnr::check_index_lipschitz(p, wnr::perturbed(p, 2.0), 0.3, 2, 200, 4, ctx);
  CHECK(rs.size() >= 2);
  for (const auto& r : rs) CHECK(r.pass);
  CHECK_THROWS_AS(wnr::check_index_lipschitz(p, wnr::builtin("trig"), 0.3, 2, 10, 1, ctx),
                  wnr::Error);
}
