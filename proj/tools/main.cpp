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

// wnr: weighted numerical radius toolkit.
//
// Exit codes: 0 success, 1 an asserted check failed, 2 usage error,
// 3 numerical failure.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "wnr/error.hpp"
#include "wnr/fov.hpp"
#include "wnr/gallery.hpp"
#include "wnr/harness.hpp"
#include "wnr/index.hpp"
#include "wnr/io.hpp"
#include "wnr/weighted.hpp"
#include "wnr/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string matrix;
  std::string gallery;
  std::string weights = "classical";
  std::optional<double> t;
  std::optional<int> grid;
  std::string quantity = "radius";
  int trials = 200;
  std::string dims = "2..8";
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::string out;
  std::string format;
  // sweep and estimator knobs
  int sweep_grid = 0;  // 0: chosen from the dimension
  int dim = 2;
  int samples = 20000;
  int refine = 30;
};

wnr::ComplexMatrix load_matrix(const Options& o, bool required) {
  if (!o.matrix.empty() && !o.gallery.empty())
    throw UsageError("give either --matrix or --gallery, not both");
  if (!o.matrix.empty()) return wnr::read_matrix(o.matrix);
  if (!o.gallery.empty()) return wnr::gallery_matrix(o.gallery, o.seed);
  if (required) throw UsageError("a matrix source is required (--matrix PATH or --gallery NAME)");
  return {};
}

bool has_matrix(const Options& o) { return !o.matrix.empty() || !o.gallery.empty(); }

std::string format_or(const Options& o, const std::string& fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::pair<int, int> parse_dims(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int d = parse_int(s, "--dims");
    return {d, d};
  }
  return {parse_int(std::string_view(s).substr(0, dots), "--dims"),
          parse_int(std::string_view(s).substr(dots + 2), "--dims")};
}

// The full 1024-direction grid up to n = 32; above that each direction costs
// a dense O(n^3) solve, so K shrinks like 1/n and the adaptive polygon
// refinement carries the certificate.
int auto_grid(std::size_t n) {
  if (n <= 32) return 1024;
  return std::max(64, static_cast<int>(32768 / n));
}

wnr::SweepConfig sweep_config(const Options& o, std::size_t n) {
  wnr::SweepConfig c;
  c.grid_size = o.sweep_grid > 0 ? o.sweep_grid : auto_grid(n);
  c.rng_seed = o.seed;
  return c;
}

void write_certified(wnr::JsonWriter& w, const wnr::CertifiedValue& c) {
  w.begin_object();
  w.key("value").value(c.value);
  w.key("lower").value(c.lower);
  w.key("upper").value(c.upper);
  w.key("theta").value(c.theta);
  w.end_object();
}

double require_t(const Options& o, const wnr::WeightPair& p) {
  const double t = o.t.value_or(0.0);
  p.check_t(t);
  return t;
}

int run_compute(const Options& o) {
  const auto a = load_matrix(o, true);
  const auto p = wnr::parse_weights(o.weights);
  const double t = require_t(o, p);
  const auto q = wnr::weighted_quantities(a, p, t, sweep_config(o, a.dim()));
  std::string text;
  if (format_or(o, "json") == "json") {
    wnr::JsonWriter w;
    w.begin_object();
    w.key("weights").value(wnr::format_weights(p));
    w.key("t").value(t);
    w.key("omega_t");
    write_certified(w, q.radius);
    w.key("crawford_t");
    write_certified(w, q.crawford);
    w.key("norm_t").value(q.norm);
    w.end_object();
    text = w.str() + "\n";
  } else {
    text = "quantity,value,lower,upper\n";
    text += "omega_t," + wnr::format_real(q.radius.value) + ',' +
            wnr::format_real(q.radius.lower) + ',' + wnr::format_real(q.radius.upper) + '\n';
    text += "crawford_t," + wnr::format_real(q.crawford.value) + ',' +
            wnr::format_real(q.crawford.lower) + ',' + wnr::format_real(q.crawford.upper) + '\n';
    const auto n = wnr::format_real(q.norm);
    text += "norm_t," + n + ',' + n + ',' + n + '\n';
  }
  wnr::write_text(o.out, text);
  return kExitOk;
}

int run_sweep(const Options& o) {
  const auto a = load_matrix(o, true);
  const auto p = wnr::parse_weights(o.weights);
  const auto q = wnr::parse_quantity(o.quantity);
  const auto curve = wnr::t_sweep(a, p, q, o.grid.value_or(11), sweep_config(o, a.dim()));
  std::string text;
  if (format_or(o, "csv") == "csv") {
    text = "t,value,lower,upper\n";
    for (std::size_t i = 0; i < curve.ts.size(); ++i)
      text += wnr::format_real(curve.ts[i]) + ',' + wnr::format_real(curve.values[i]) + ',' +
              wnr::format_real(curve.lower[i]) + ',' + wnr::format_real(curve.upper[i]) + '\n';
  } else {
    wnr::JsonWriter w;
    w.begin_object();
    w.key("quantity").value(wnr::to_string(q));
    w.key("weights").value(wnr::format_weights(p));
    for (const auto& [name, v] : {std::pair{"t", &curve.ts}, std::pair{"value", &curve.values},
                                  std::pair{"lower", &curve.lower},
                                  std::pair{"upper", &curve.upper}}) {
      w.key(name).begin_array();
      for (const double x : *v) w.value(x);
      w.end_array();
    }
    w.end_object();
    text = w.str() + "\n";
  }
  wnr::write_text(o.out, text);
  return kExitOk;
}

int run_check(const Options& o, bool weights_given) {
  wnr::SuiteConfig cfg;
  cfg.trials = o.trials;
  std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(o.dims);
  cfg.rng_seed = o.seed;
  if (o.tol) cfg.tol_rel = *o.tol;
  if (weights_given) cfg.families = {o.weights};
  if (has_matrix(o)) cfg.matrix = load_matrix(o, true);
  const auto fmt = format_or(o, "json");
  const auto rep = wnr::run_suite(cfg);
  wnr::write_text(o.out, fmt == "json" ? wnr::results_to_json(rep.results)
                                       : wnr::results_to_csv(rep.results));
  std::cerr << "total=" << rep.total << " passed=" << rep.passed << " failed=" << rep.failed
            << " report_only=" << rep.report_only << " check_ids=" << rep.check_ids.size()
            << '\n';
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int run_gallery(const Options& o) {
  if (o.gallery.empty()) throw UsageError("gallery needs --gallery NAME[:N]");
  if (format_or(o, "json") != "json") throw UsageError("gallery writes json only");
  wnr::write_text(o.out, wnr::matrix_to_json(load_matrix(o, true)));
  return kExitOk;
}

int run_boundary(const Options& o) {
  const auto a = load_matrix(o, true);
  if (format_or(o, "csv") != "csv") throw UsageError("boundary writes csv only");
  const auto pts = wnr::range_boundary(a, o.grid.value_or(360));
  std::string text = "theta,re,im\n";
  for (const auto& b : pts)
    text += wnr::format_real(b.theta) + ',' + wnr::format_real(b.z.real()) + ',' +
            wnr::format_real(b.z.imag()) + '\n';
  wnr::write_text(o.out, text);
  return kExitOk;
}

int run_index(const Options& o) {
  if (format_or(o, "json") != "json") throw UsageError("index writes json only");
  const auto p = wnr::parse_weights(o.weights);
  const double t = require_t(o, p);
  const auto cfg = sweep_config(o, static_cast<std::size_t>(std::max(o.dim, 1)));
  const auto est = wnr::estimate_index(o.dim, p, t, o.samples, o.refine, cfg);
  wnr::JsonWriter w;
  w.begin_object();
  w.key("weights").value(wnr::format_weights(p));
  w.key("t").value(t);
  w.key("value").value(est.value);
  w.key("lower").value(est.lower);
  w.key("upper").value(est.upper);
  w.key("certificate");
  write_certified(w, est.radius);
  w.key("witness");
  wnr::write_matrix_json(w, est.witness);
  w.key("samples").value(est.samples);
  w.key("dim").value(est.dim);
  w.key("seed").value(est.seed);
  w.end_object();
  wnr::write_text(o.out, w.str() + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted numerical radius, Crawford number, norm and index"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrix, "matrix JSON file");
    c->add_option("--gallery", o.gallery, "gallery matrix, e.g. 2x2, volterra:512, ginibre:4");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--format", o.format, "json or csv");
  };
  auto add_sweep = [&](CLI::App* c) {
    c->add_option("--sweep-grid", o.sweep_grid,
                  "directions in the support-function sweep (default: from the dimension)")
        ->check(CLI::Range(8, 1 << 20));
  };
  CLI::Option* weights_opt = nullptr;

  auto* compute = app.add_subcommand("compute", "omega_t, c_t and ||A||_t at one t");
  add_source(compute);
  add_common(compute);
  add_sweep(compute);
  compute->add_option("--weights", o.weights, "weight pair spec");
  compute->add_option("--t", o.t, "parameter t");

  auto* sweep = app.add_subcommand("sweep", "a weighted quantity over a uniform t grid");
  add_source(sweep);
  add_common(sweep);
  add_sweep(sweep);
  sweep->add_option("--weights", o.weights, "weight pair spec");
  sweep->add_option("--grid", o.grid, "number of t points (>= 2)");
  sweep->add_option("--quantity", o.quantity, "radius, crawford or norm");

  auto* check = app.add_subcommand("check", "run the verification suite");
  add_source(check);
  add_common(check);
  weights_opt = check->add_option("--weights", o.weights, "restrict to one weight pair");
  check->add_option("--trials", o.trials, "number of trials");
  check->add_option("--dims", o.dims, "dimension range A..B");
  check->add_option("--tol", o.tol, "relative tolerance");

  auto* gallery = app.add_subcommand("gallery", "write a gallery matrix as JSON");
  gallery->add_option("--gallery", o.gallery, "gallery matrix spec")->required();
  add_common(gallery);

  auto* boundary = app.add_subcommand("boundary", "supporting points of the numerical range");
  add_source(boundary);
  add_common(boundary);
  boundary->add_option("--grid", o.grid, "number of directions (>= 3)");

  auto* index = app.add_subcommand("index", "estimate the weighted numerical index");
  add_common(index);
  add_sweep(index);
  index->add_option("--weights", o.weights, "weight pair spec");
  index->add_option("--t", o.t, "parameter t");
  index->add_option("--dim", o.dim, "matrix dimension (>= 2)");
  index->add_option("--samples", o.samples, "random candidates");
  index->add_option("--refine", o.refine, "coordinate descent rounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "wnr: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(o);
    if (sweep->parsed()) return run_sweep(o);
    if (check->parsed()) return run_check(o, weights_opt->count() > 0);
    if (gallery->parsed()) return run_gallery(o);
    if (boundary->parsed()) return run_boundary(o);
    if (index->parsed()) return run_index(o);
  } catch (const UsageError& e) {
    std::cerr << "wnr: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wnr::Error& e) {
    std::cerr << "wnr: " << e.what() << '\n';
    return wnr::is_numerical(e.kind()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "wnr: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
