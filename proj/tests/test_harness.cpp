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


#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include "doctest.h"
#include "json.hpp"
#include "wnr/check.hpp"
#include "wnr/error.hpp"
#include "wnr/gallery.hpp"
#include "wnr/harness.hpp"

using wnr::CheckMode;
using wnr::CheckResult;
using wnr::ComplexMatrix;
using wnr::Ensemble;

namespace {

wnr::CheckContext context(wnr::FovCache* cache = nullptr) {
  wnr::CheckContext ctx;
  ctx.sweep.grid_size = 128;
  ctx.digest = "unit";
  ctx.cache = cache;
  return ctx;
}

bool all_asserted_pass(const std::vector<CheckResult>& rs) {
  bool ok = true;
  for (const auto& r : rs)
    if (r.mode != CheckMode::ReportOnly && !r.pass) {
      MESSAGE(r.check_id << " lhs=" << r.lhs << " rhs=" << r.rhs << " tol=" << r.tol);
      ok = false;
    }
  return ok;
}

bool violated(const CheckResult& r, CheckMode as) {
  return as == CheckMode::AssertEq ? std::abs(r.lhs - r.rhs) > r.tol : r.lhs > r.rhs + r.tol;
}

ComplexMatrix draw(Ensemble e, int n, std::uint64_t seed) { return wnr::sample({e, n, seed}); }

const std::vector<std::string> kFamilies{"classical", "nayak", "convex:0.3", "trig",
                                         "poly:[1,-2]|[1]", "const:0,1"};

}  // namespace

TEST_CASE("Est arithmetic propagates widths") {
  const wnr::Est a{2.0, 0.1}, b{-3.0, 0.2};
  CHECK((a + b).v == -1.0);
  CHECK((a + b).w == doctest::Approx(0.3));
  CHECK((a - b).w == doctest::Approx(0.3));
  CHECK((a * b).v == -6.0);
  CHECK((a * b).w == doctest::Approx(2.0 * 0.2 + 3.0 * 0.1 + 0.02));
  CHECK((-2.0 * a).w == doctest::Approx(0.2));
  CHECK(wnr::abs(b).v == 3.0);
  CHECK(wnr::square(a).v == 4.0);
  // every point of the input boxes maps inside the output box
  for (double x : {1.9, 2.0, 2.1})
    for (double y : {-3.2, -3.0, -2.8}) {
      const auto p = a * b;
      CHECK(std::abs(x * y - p.v) <= p.w + 1e-12);
    }
}

TEST_CASE("make_check applies the tolerance rule") {
  wnr::CheckContext ctx;
  ctx.tol_rel = 1e-3;
  ctx.digest = "d";
  ctx.trial = 4;
  auto r = wnr::make_check("weighted.triangle_radius", 0.5, {1.0, 0.0}, {0.9995, 0.0},
                           CheckMode::AssertLe, ctx);
  CHECK(r.pass);
  CHECK(r.tol == doctest::Approx(1e-3));
  CHECK(r.slack == doctest::Approx(-0.0005));
  CHECK(r.trial == 4);
  CHECK(r.input_digest == "d");
  CHECK(r.statement == wnr::statement("weighted.triangle_radius").text);
  r = wnr::make_check("weighted.triangle_radius", 0.5, {1.0, 0.0}, {0.99, 0.0},
                      CheckMode::AssertLe, ctx);
  CHECK_FALSE(r.pass);
  r = wnr::make_check("weighted.triangle_radius", 0.5, {1.0, 0.006}, {0.99, 0.005},
                      CheckMode::AssertLe, ctx);
  CHECK(r.pass);
  r = wnr::make_check("weighted.i_twist", 0.5, {1.0, 0.0}, {1.01, 0.0}, CheckMode::AssertEq, ctx);
  CHECK_FALSE(r.pass);
  r = wnr::make_check("weighted.i_twist", 0.5, {1.0, 0.0}, {1.01, 0.0}, CheckMode::AssertEq, ctx,
                      "", 0.02);
  CHECK(r.pass);
  r = wnr::make_check("weighted.i_twist", 0.5, {1.0, 0.0}, {5.0, 0.0}, CheckMode::ReportOnly, ctx);
  CHECK(r.pass);
  r = wnr::make_check("weighted.i_twist", 0.5, {std::nan(""), 0.0}, {5.0, 0.0},
                      CheckMode::AssertLe, ctx);
  CHECK_FALSE(r.pass);
  CHECK_THROWS_AS(wnr::make_check("no.such.id", std::nullopt, {}, {}, CheckMode::AssertLe, ctx),
                  wnr::Error);
}

TEST_CASE("statement registry") {
  const auto& reg = wnr::statement_registry();
  std::set<std::string_view> ids;
  for (const auto& s : reg) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.text.empty());
    CHECK(wnr::statement(s.id).text == s.text);
  }
  CHECK(reg.size() >= 40);
}

TEST_CASE("result serialisation") {
  wnr::CheckContext ctx;
  ctx.digest = "seed=1, \"x\"";
  std::vector<CheckResult> rs{
      wnr::make_check("weighted.triangle_radius", 0.25, {1.0, 0.0}, {2.0, 0.0},
                      CheckMode::AssertLe, ctx, "note, with comma"),
      wnr::make_check("vector.buzano", std::nullopt, {1.0, 0.0}, {2.0, 0.0},
                      CheckMode::ReportOnly, ctx)};
  const auto doc = nlohmann::json::parse(wnr::results_to_json(rs));
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["check_id"] == "weighted.triangle_radius");
  CHECK(doc[0]["t"] == 0.25);
  CHECK(doc[0]["mode"] == "assert_le");
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["slack"] == 1.0);
  CHECK(doc[0]["input_digest"] == "seed=1, \"x\"");
  CHECK(doc[1]["t"].is_null());
  CHECK(doc[1]["mode"] == "report_only");
  for (const char* k : {"statement", "lhs", "rhs", "tol", "note"}) CHECK(doc[0].contains(k));
  const auto csv = wnr::results_to_csv(rs);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("\"note, with comma\"") != std::string::npos);
  CHECK(csv.find("\"seed=1, \"\"x\"\"\"") != std::string::npos);
}

TEST_CASE("FovCache sweeps each operator once") {
  wnr::FovCache cache;
  const auto a = draw(Ensemble::Ginibre, 4, 1);
  const auto ctx = context(&cache);
  const auto s1 = wnr::summary(a, ctx);
  const auto s2 = wnr::summary(a, ctx);
  CHECK(cache.size() == 1);
  CHECK(s1.radius.value == s2.radius.value);
  wnr::summary(draw(Ensemble::Ginibre, 4, 2), ctx);
  CHECK(cache.size() == 2);
  cache.clear();
  CHECK(cache.size() == 0);
}

TEST_CASE("every group holds on random inputs") {
  wnr::FovCache cache;
  for (int k = 0; k < 12; ++k) {
    cache.clear();
    const auto ctx = context(&cache);
    const int n = 2 + k % 4;
    const auto ens = static_cast<Ensemble>(k % 5);
    const auto a = draw(ens, n, 10 + k);
    const auto b = draw(Ensemble::Ginibre, n, 100 + k);
    const auto p = wnr::parse_weights(kFamilies[k % kFamilies.size()]);
    const double t = p.interval() * (0.1 + 0.8 * wnr::lds_point(k));
    CHECK(all_asserted_pass(wnr::check_basic_properties(a, b, p, t, ctx)));
    CHECK(all_asserted_pass(wnr::check_difference_bounds(a, b, p, t, ctx)));
    const wnr::SmoothnessInputs in{p.interval() * wnr::lds_point(k, 0.3), 1.0 + k, 2.0 + k};
    CHECK(all_asserted_pass(wnr::check_smoothness(a, b, p, t, in, ctx)));
    CHECK(all_asserted_pass(wnr::check_direct_sum(a, b, p, t, ctx)));
    CHECK(all_asserted_pass(wnr::check_lower_bounds(a, p, t, ctx)));
    CHECK(all_asserted_pass(wnr::check_classical_lower_bounds(a, ctx)));
    CHECK(all_asserted_pass(wnr::check_upper_bounds(a, p, t, ctx)));
    CHECK(all_asserted_pass(wnr::check_index_bounds(a, p, t, ctx)));
    if (k % 3 == 0) CHECK(all_asserted_pass(wnr::check_integral_bounds(a, p, ctx)));
  }
  CHECK(all_asserted_pass(wnr::check_vector_inequalities(4, 50, 7, context())));
}

TEST_CASE("derivative checks on one-sided monotone weights") {
  const auto ctx = context();
  const auto a = draw(Ensemble::Ginibre, 3, 5);
  const std::vector<wnr::WeightPair> pairs{
      wnr::parse_weights("poly:[0,1]|[0]"), wnr::parse_weights("poly:[0,0,1]|[0]"),
      wnr::WeightPair(wnr::WeightFn::sin_quarter(std::numbers::pi), wnr::WeightFn::constant(0.0, std::numbers::pi)),
      wnr::WeightPair(wnr::WeightFn::constant(0.0, std::numbers::pi), wnr::WeightFn::sin_quarter(std::numbers::pi))};
  for (const auto& p : pairs) {
    const auto rs = wnr::check_derivative(a, p, 0.5 * p.interval(), ctx);
    CHECK(rs.size() == 2);
    CHECK(all_asserted_pass(rs));
  }
  auto kind = [&](const wnr::WeightPair& p, double t) {
    try {
      wnr::check_derivative(a, p, t, ctx);
    } catch (const wnr::Error& e) {
      return e.kind();
    }
    return wnr::ErrorKind::BadParameter;
  };
  CHECK(kind(wnr::builtin("nayak"), 0.5) == wnr::ErrorKind::NotApplicable);
  CHECK(kind(wnr::parse_weights("poly:[1,-1]|[0]"), 0.5) == wnr::ErrorKind::NotApplicable);
  CHECK(kind(pairs[0], 0.0) == wnr::ErrorKind::OutOfInterval);
  CHECK(kind(pairs[0], 1.0) == wnr::ErrorKind::OutOfInterval);
}

TEST_CASE("integral bounds reject vanishing weights") {
  const auto a = draw(Ensemble::Ginibre, 3, 5);
  try {
    wnr::check_integral_bounds(a, wnr::parse_weights("const:0,0"), context());
    FAIL("expected DegenerateWeights");
  } catch (const wnr::Error& e) {
    CHECK(e.kind() == wnr::ErrorKind::DegenerateWeights);
  }
  CHECK_THROWS_AS(wnr::check_basic_properties(a, draw(Ensemble::Ginibre, 2, 1),
                                              wnr::builtin("nayak"), 0.5, context()),
                  wnr::Error);
}

TEST_CASE("printed forms are refuted by counterexamples") {
  // the harness keeps these report-only; confirm it is able to see them fail
  std::map<std::string, int> refuted;
  wnr::FovCache cache;
  for (int k = 0; k < 20; ++k) {
    cache.clear();
    const auto ctx = context(&cache);
    const auto a = draw(Ensemble::Ginibre, 3, 200 + k);
    const auto b = draw(Ensemble::Ginibre, 3, 300 + k);
    const auto p = wnr::builtin("nayak");
    auto rs = wnr::check_basic_properties(a, b, p, 0.3, ctx);
    auto more = wnr::check_difference_bounds(a, b, p, 0.3, ctx);
    rs.insert(rs.end(), more.begin(), more.end());
    for (const auto& r : rs) {
      if (r.check_id.ends_with("_printed")) {
        CHECK(r.mode == CheckMode::ReportOnly);
        const auto as = r.check_id.find("reverse") != std::string::npos ? CheckMode::AssertLe
                                                                        : CheckMode::AssertEq;
        if (violated(r, as)) ++refuted[r.check_id];
      }
    }
  }
  CHECK(refuted["weighted.equal_unit_crawford_printed"] > 0);
  CHECK(refuted["weighted.opposite_unit_crawford_printed"] > 0);
}

TEST_CASE("suite runs are deterministic and clean") {
  wnr::SuiteConfig cfg;
  cfg.trials = 4;
  cfg.dim_hi = 4;
  cfg.index_every = 0;
  const auto r1 = wnr::run_suite(cfg);
  const auto r2 = wnr::run_suite(cfg);
  CHECK(r1.ok());
  CHECK(r1.total == static_cast<int>(r1.results.size()));
  CHECK(r1.passed + r1.failed + r1.report_only == r1.total);
  CHECK(wnr::results_to_json(r1.results) == wnr::results_to_json(r2.results));
  CHECK(std::is_sorted(r1.results.begin(), r1.results.end(), [](const auto& x, const auto& y) {
    return std::tie(x.check_id, x.trial) < std::tie(y.check_id, y.trial);
  }));
  CHECK(r1.check_ids.size() >= 40);
  cfg.rng_seed = 43;
  CHECK(wnr::results_to_json(wnr::run_suite(cfg).results) != wnr::results_to_json(r1.results));
}

TEST_CASE("suite on a fixed operator") {
  wnr::SuiteConfig cfg;
  cfg.trials = 2;
  cfg.index_every = 0;
  cfg.integral_every = 0;
  cfg.derivative_every = 0;
  cfg.matrix = wnr::example_2x2();
  const auto r = wnr::run_suite(cfg);
  CHECK(r.ok());
  CHECK(r.results.front().input_digest.find("ens=input") != std::string::npos);
}

TEST_CASE("suite configuration is validated") {
  wnr::SuiteConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), wnr::Error);
  cfg = {};
  cfg.dim_lo = 5;
  cfg.dim_hi = 3;
  CHECK_THROWS_AS(cfg.validate(), wnr::Error);
  cfg = {};
  cfg.families.clear();
  CHECK_THROWS_AS(cfg.validate(), wnr::Error);
  cfg = {};
  cfg.families = {"bogus"};
  CHECK_THROWS_AS(wnr::run_suite(cfg), wnr::Error);
}

TEST_CASE("low-discrepancy points") {
  std::vector<double> xs;
  for (std::uint64_t k = 0; k < 64; ++k) {
    const double x = wnr::lds_point(k, 0.25);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) gap = std::max(gap, xs[i] - xs[i - 1]);
  CHECK(gap < 0.05);
}
