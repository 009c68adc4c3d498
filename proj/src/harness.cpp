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

#include "wnr/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "wnr/error.hpp"
#include "wnr/fov.hpp"
#include "wnr/gallery.hpp"
#include "wnr/index.hpp"
#include "wnr/io.hpp"
#include "wnr/rng.hpp"
#include "wnr/weighted.hpp"

namespace wnr {

namespace {

using Results = std::vector<CheckResult>;

constexpr auto kLe = CheckMode::AssertLe;
constexpr auto kEq = CheckMode::AssertEq;
constexpr auto kReport = CheckMode::ReportOnly;

Est radius(const ComplexMatrix& m, const CheckContext& ctx) {
  return cert(summary(m, ctx).radius);
}

Est crawford(const ComplexMatrix& m, const CheckContext& ctx) {
  return cert(summary(m, ctx).crawford);
}

Est est_max(Est a, Est b) { return {std::max(a.v, b.v), std::max(a.w, b.w)}; }
Est est_min(Est a, Est b) { return {std::min(a.v, b.v), std::max(a.w, b.w)}; }

// a / b for b bounded away from zero.
Est est_div(Est a, Est b) {
  const double q = a.v / b.v;
  const double lo = std::abs(b.v) - b.w;
  if (!(lo > 0.0)) return {q, std::numeric_limits<double>::infinity()};
  return {q, (a.w + std::abs(q) * b.w) / lo};
}

Est power(Est a, int k) {
  Est r = exact(1.0);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

// ||A*A + AA*||
double kittaneh_norm(const ComplexMatrix& a) {
  const auto ad = adjoint(a);
  return operator_norm(ad * a + a * ad);
}

ComplexMatrix squared(const ComplexMatrix& a) { return a * a; }

bool same_pair(const WeightPair& p, const WeightFn& phi, const WeightFn& psi) {
  return p.phi == phi && p.psi == psi;
}

void append(Results& out, Results more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

void check_dims(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, "operators of different dimension");
}

// Simpson on the library grid, with the change against half as many nodes
// as the width: the integrands here are piecewise smooth.
Est integral(const std::function<double(double)>& f, double upper) {
  const double fine = integrate(f, 0.0, upper);
  const double coarse = integrate(f, 0.0, upper, (kQuadratureNodes + 1) / 2);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace

Results check_basic_properties(const ComplexMatrix& a, const ComplexMatrix& b,
                               const WeightPair& p, double t, const CheckContext& ctx) {
  check_dims(a, b);
  p.check_t(t);
  const double f = p.phi(t);
  const double g = p.psi(t);
  const double af = std::abs(f);
  const double ag = std::abs(g);
  const auto ad = adjoint(a);
  const auto re = re_part(a);
  const auto im = im_part(a);
  const double nre = operator_norm(re);
  const double nim = operator_norm(im);
  const auto base = summary(a, ctx);
  const Est w = cert(base.radius);
  const Est c = cert(base.crawford);
  const auto bt = weighted_operator(a, p, t);
  const auto ft = summary(bt, ctx);
  const Est wt = cert(ft.radius);
  const Est ct = cert(ft.crawford);
  Results out;

  {
    const auto s = summary(Complex(g) * ad, ctx);
    out.push_back(make_check("weighted.zero_phi_radius", t, cert(s.radius), ag * w, kEq, ctx));
    out.push_back(make_check("weighted.zero_phi_crawford", t, cert(s.crawford), ag * c, kEq, ctx));
  }
  {
    const auto s = summary(Complex(f) * a, ctx);
    out.push_back(make_check("weighted.zero_psi_radius", t, cert(s.radius), af * w, kEq, ctx));
    out.push_back(make_check("weighted.zero_psi_crawford", t, cert(s.crawford), af * c, kEq, ctx));
  }
  {
    const auto s = summary(a + ad, ctx);
    out.push_back(make_check("weighted.equal_unit_radius", std::nullopt, cert(s.radius),
                             exact(2.0 * nre), kEq, ctx));
    out.push_back(make_check("weighted.equal_unit_crawford", std::nullopt, cert(s.crawford),
                             exact(2.0 * hermitian_crawford(re)), kEq, ctx));
    out.push_back(make_check("weighted.equal_unit_crawford_printed", std::nullopt,
                             cert(s.crawford), exact(2.0 * nre), kReport, ctx,
                             "printed form; holds only when Re A is a multiple of I"));
  }
  {
    const auto s = summary(a - ad, ctx);
    out.push_back(make_check("weighted.opposite_unit_radius", std::nullopt, cert(s.radius),
                             exact(2.0 * nim), kEq, ctx));
    out.push_back(make_check("weighted.opposite_unit_crawford", std::nullopt, cert(s.crawford),
                             exact(2.0 * hermitian_crawford(im)), kEq, ctx));
    out.push_back(make_check("weighted.opposite_unit_crawford_printed", std::nullopt,
                             cert(s.crawford), exact(2.0 * nim), kReport, ctx,
                             "printed form; holds only when Im A is a multiple of I"));
  }
  out.push_back(make_check("weighted.i_twist", t,
                           radius(weighted_operator(Complex(0.0, 1.0) * a, p, t), ctx),
                           radius(weighted_operator(a, negate_psi(p), t), ctx), kEq, ctx));
  out.push_back(make_check("weighted.norm_sandwich_lower", t, exact(0.5 * ft.norm), wt, kLe, ctx));
  out.push_back(make_check("weighted.norm_sandwich_upper", t, wt, exact(ft.norm), kLe, ctx));
  out.push_back(make_check("weighted.radius_abs_bound", t, wt, (af + ag) * w, kLe, ctx));
  out.push_back(make_check("weighted.crawford_abs_bound", t, std::abs(af - ag) * c, ct, kLe, ctx));
  out.push_back(make_check("weighted.equal_phi", t, radius(Complex(f) * (a + ad), ctx),
                           exact(2.0 * af * nre), kEq, ctx));
  out.push_back(make_check("weighted.equal_psi", t, radius(Complex(g) * (a + ad), ctx),
                           exact(2.0 * ag * nre), kEq, ctx));
  {
    const Est wh = radius(weighted_operator(re, p, t), ctx);
    out.push_back(make_check("weighted.hermitian_closed_form", t, wh,
                             exact(std::abs(f + g) * nre), kEq, ctx, "H = Re A"));
    out.push_back(make_check("weighted.hermitian_swap", t, wh,
                             radius(weighted_operator(re, swapped(p), t), ctx), kEq, ctx,
                             "H = Re A"));
  }
  out.push_back(make_check("weighted.adjoint_swap", t, wt,
                           radius(weighted_operator(ad, swapped(p), t), ctx), kEq, ctx));
  {
    const auto fb = summary(weighted_operator(b, p, t), ctx);
    const auto fs = summary(weighted_operator(a + b, p, t), ctx);
    out.push_back(make_check("weighted.triangle_radius", t, cert(fs.radius),
                             wt + cert(fb.radius), kLe, ctx));
    out.push_back(make_check("weighted.triangle_crawford", t, cert(fs.crawford),
                             wt + cert(fb.crawford), kLe, ctx));
  }
  {
    const auto ab = a * b;
    const auto fab = summary(ab, ctx);
    const auto fabt = summary(weighted_operator(ab, p, t), ctx);
    out.push_back(make_check("weighted.product_radius", t, cert(fabt.radius),
                             (af + ag) * cert(fab.radius), kLe, ctx));
    out.push_back(make_check("weighted.product_crawford", t, cert(fabt.crawford),
                             af * cert(fab.crawford) + ag * cert(fab.radius), kLe, ctx));
    const double nab = operator_norm(ab);
    const Est sq1 = radius(squared(ab), ctx);
    const Est sq2 = radius(squared(adjoint(ab)), ctx);
    out.push_back(make_check("weighted.product_norm_square", t, exact(std::pow(fabt.norm, 2)),
                             exact((f * f + g * g) * nab * nab) + std::abs(f * g) * (sq1 + sq2),
                             kLe, ctx));
  }
  {
    // second pair (psi, -phi), so that the sum (phi+psi, psi-phi) mixes both
    const WeightPair q(p.psi, -p.phi, "");
    out.push_back(make_check("weighted.weight_additivity", t,
                             radius(weighted_operator(a, sum(p, q), t), ctx),
                             wt + radius(weighted_operator(a, q, t), ctx), kLe, ctx,
                             "second pair (psi, -phi)"));
  }
  {
    const auto cv = combo_values(p, t);
    out.push_back(make_check("weighted.crawford_alpha_lower", t, cv.alpha * c, ct, kLe, ctx));
  }
  return out;
}

Results check_difference_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                const WeightPair& p, double t, const CheckContext& ctx) {
  check_dims(a, b);
  p.check_t(t);
  const auto fa = summary(weighted_operator(a, p, t), ctx);
  const auto fb = summary(weighted_operator(b, p, t), ctx);
  const auto fd = summary(weighted_operator(a - b, p, t), ctx);
  Results out;
  out.push_back(make_check("weighted.reverse_triangle_radius", t,
                           abs(cert(fa.radius) - cert(fb.radius)), cert(fd.radius), kLe, ctx));
  const Est dc = abs(cert(fa.crawford) - cert(fb.crawford));
  out.push_back(make_check("weighted.reverse_triangle_crawford", t, dc, cert(fd.radius), kLe, ctx));
  out.push_back(make_check("weighted.reverse_triangle_crawford_printed", t, dc,
                           cert(fd.crawford), kReport, ctx,
                           "printed form with c_t on the right"));
  return out;
}

Results check_smoothness(const ComplexMatrix& a, const ComplexMatrix& e, const WeightPair& p,
                         double t, const SmoothnessInputs& in, const CheckContext& ctx) {
  check_dims(a, e);
  p.check_t(t);
  p.check_t(in.s);
  if (!(in.seq_n >= 1.0) || !(in.seq_k >= 1.0))
    throw Error(ErrorKind::BadParameter, "sequence indices must be >= 1");
  const double s = in.s;
  const double na = operator_norm(a);
  const auto ft = summary(weighted_operator(a, p, t), ctx);
  const auto fs = summary(weighted_operator(a, p, s), ctx);
  Results out;

  const double dw = std::abs(p.phi(t) - p.phi(s)) + std::abs(p.psi(t) - p.psi(s));
  const Est drad = abs(cert(ft.radius) - cert(fs.radius));
  const Est dcraw = abs(cert(ft.crawford) - cert(fs.crawford));
  const std::string note = "s=" + format_real(s);
  out.push_back(make_check("smooth.continuity_radius", t, drad, exact(dw * na), kLe, ctx, note));
  out.push_back(make_check("smooth.continuity_crawford", t, dcraw, exact(dw * na), kLe, ctx, note));

  const double k = std::max(p.phi.lipschitz(), p.psi.lipschitz());
  const double expo = std::min(p.phi.holder_exponent(), p.psi.holder_exponent());
  const double holder = 2.0 * k * na * std::pow(std::abs(t - s), expo);
  const std::string hnote = note + " K=" + format_real(k) + " a=" + format_real(expo);
  out.push_back(make_check("smooth.holder_radius", t, drad, exact(holder), kLe, ctx, hnote));
  out.push_back(make_check("smooth.holder_crawford", t, dcraw, exact(holder), kLe, ctx, hnote));

  {
    const auto fn = summary(weighted_operator(a, perturbed(p, in.seq_n), t), ctx);
    const double bound = perturbation_size(p, t) / in.seq_n * na;
    const std::string snote = "n=" + format_real(in.seq_n);
    out.push_back(make_check("smooth.weight_sequence_radius", t,
                             abs(cert(fn.radius) - cert(ft.radius)), exact(bound), kLe, ctx, snote));
    out.push_back(make_check("smooth.weight_sequence_crawford", t,
                             abs(cert(fn.crawford) - cert(ft.crawford)), exact(bound), kLe, ctx,
                             snote));
  }
  {
    const auto ak = a + Complex(1.0 / in.seq_k) * e;
    const auto fk = summary(weighted_operator(ak, p, t), ctx);
    const double bound = weighted_norm(ak - a, p, t);
    const std::string knote = "k=" + format_real(in.seq_k);
    out.push_back(make_check("smooth.operator_sequence_radius", t,
                             abs(cert(fk.radius) - cert(ft.radius)), exact(bound), kLe, ctx, knote));
    out.push_back(make_check("smooth.operator_sequence_crawford", t,
                             abs(cert(fk.crawford) - cert(ft.crawford)), exact(bound), kLe, ctx,
                             knote));
  }
  return out;
}

Results check_derivative(const ComplexMatrix& a, const WeightPair& p, double t,
                         const CheckContext& ctx) {
  const bool phi_side = p.psi.is_zero();
  if (!phi_side && !p.phi.is_zero())
    throw Error(ErrorKind::NotApplicable, "derivative check needs a one-sided weight pair");
  const WeightFn& w = phi_side ? p.phi : p.psi;
  const WeightFn dw = w.derivative();
  const double T = p.interval();
  constexpr int kProbe = 257;
  for (int i = 0; i < kProbe; ++i) {
    const double u = T * i / (kProbe - 1);
    if (w(u) < -1e-12 || dw(u) < -1e-12)
      throw Error(ErrorKind::NotApplicable, "derivative check needs a nonnegative nondecreasing weight");
  }
  const double h = kDerivativeStep;
  if (t < h || t > T - h)
    throw Error(ErrorKind::OutOfInterval, "derivative check needs an interior t");
  const auto m = phi_side ? a : adjoint(a);
  const auto fp = summary(Complex(w(t + h)) * m, ctx);
  const auto fm = summary(Complex(w(t - h)) * m, ctx);
  const auto fd = summary(Complex(dw(t)) * m, ctx);
  const double na = operator_norm(a);
  // truncation h^2/6 sup|w'''| ||A|| plus eigensolver noise of the values over 2h
  const double third = dw.derivative().lipschitz();
  const double noise = 64.0 * static_cast<double>(a.dim()) *
                       std::numeric_limits<double>::epsilon() * std::max(1.0, na) / h;
  const double extra = 1e-4 + h * h / 6.0 * third * na + noise;
  const std::string note = "central difference h=" + format_real(h);
  Results out;
  out.push_back(make_check("smooth.derivative_radius", t,
                           exact((fp.radius.value - fm.radius.value) / (2.0 * h)),
                           exact(fd.radius.value), kEq, ctx, note, extra));
  out.push_back(make_check("smooth.derivative_crawford", t,
                           exact((fp.crawford.value - fm.crawford.value) / (2.0 * h)),
                           exact(fd.crawford.value), kEq, ctx, note, extra));
  return out;
}

Results check_integral_bounds(const ComplexMatrix& a, const WeightPair& p,
                              const CheckContext& ctx) {
  const double T = p.interval();
  const int nodes = kIntegralSweepNodes;
  const double step = T / (nodes - 1);
  std::vector<double> val(nodes);
  double width = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = i == nodes - 1 ? T : step * i;
    const auto r = summary(weighted_operator(a, p, t), ctx).radius;
    val[i] = r.value;
    width = std::max(width, r.width());
  }
  auto interp = [&](double t) {
    const double x = std::clamp(t / step, 0.0, double(nodes - 1));
    const int i = std::min(static_cast<int>(x), nodes - 2);
    const double u = x - i;
    return (1.0 - u) * val[i] + u * val[i + 1];
  };
  const double na = operator_norm(a);
  // t -> omega_t is (L_phi + L_psi) ||A||-Lipschitz, so the linear
  // interpolant misses the integral by at most L h T / 4.
  const double lip_t = (p.phi.lipschitz() + p.psi.lipschitz()) * na;
  const double quad = integrate(interp, 0.0, T);
  const Est iw{quad, T * width + lip_t * step * T / 4.0};

  const Est isum = integral([&](double t) { return combo_values(p, t).sum; }, T);
  const Est idiff = integral([&](double t) { return combo_values(p, t).diff; }, T);
  const Est ialpha = integral([&](double t) { return combo_values(p, t).alpha; }, T);
  const Est ilambda = integral([&](double t) { return combo_values(p, t).lambda; }, T);
  constexpr double kDegenerate = 1e-9;
  const bool sum_ok = isum.v > kDegenerate;
  const bool diff_ok = idiff.v > kDegenerate;
  if (!sum_ok && !diff_ok)
    throw Error(ErrorKind::DegenerateWeights, "both weight integrals vanish");

  const std::string note = "65-node sweep, linear interpolation";
  Results out;
  if (sum_ok)
    out.push_back(make_check("integral.real_part", std::nullopt, exact(operator_norm(re_part(a))),
                             est_div(iw, isum), kLe, ctx, note));
  if (diff_ok)
    out.push_back(make_check("integral.imag_part", std::nullopt, exact(operator_norm(im_part(a))),
                             est_div(iw, idiff), kLe, ctx, note));
  if (sum_ok && diff_ok)
    out.push_back(make_check("integral.norm", std::nullopt, exact(na),
                             est_div(iw, isum) + est_div(iw, idiff), kLe, ctx, note));
  const Est w = radius(a, ctx);
  out.push_back(make_check("index.integral_alpha_lower", std::nullopt, ialpha * w, iw, kLe, ctx,
                           note));
  out.push_back(make_check("index.integral_lambda_upper", std::nullopt, iw, ilambda * w, kLe, ctx,
                           note));
  return out;
}

Results check_direct_sum(const ComplexMatrix& a, const ComplexMatrix& b, const WeightPair& p,
                         double t, const CheckContext& ctx) {
  p.check_t(t);
  Results out;
  {
    const std::array blocks{a, b};
    const Est whole = radius(weighted_operator(direct_sum(blocks), p, t), ctx);
    const Est parts = est_max(radius(weighted_operator(a, p, t), ctx),
                              radius(weighted_operator(b, p, t), ctx));
    out.push_back(make_check("direct_sum.radius", t, whole, parts, kEq, ctx));
  }
  {
    auto shift = [](const ComplexMatrix& m) {
      const double low = hermitian_eigvals(re_part(m)).front();
      return m + Complex(std::max(0.0, -low)) * ComplexMatrix::identity(m.dim());
    };
    const std::array blocks{shift(a), shift(b)};
    const Est whole = crawford(weighted_operator(direct_sum(blocks), p, t), ctx);
    const Est parts = est_min(radius(weighted_operator(blocks[0], p, t), ctx),
                              radius(weighted_operator(blocks[1], p, t), ctx));
    out.push_back(make_check("direct_sum.crawford_printed", t, whole, parts, kReport, ctx,
                             "blocks shifted to Re >= 0"));
  }
  return out;
}

namespace {

struct LowerTerms {
  double norm;      // ||A||/2 + | ||Re A|| - ||Im A|| | / 2
  double kittaneh;  // ||A*A+AA*||/4 + | ||Re A||^2 - ||Im A||^2 | / 2
  double crawford;  // kittaneh term refined by c(Re A), c(Im A)
  double fourth;    // ||(A*A+AA*)^2 + 4 Re^2(A^2)||/16 + | ||Re A||^4 - ||Im A||^4 | / 2
};

LowerTerms lower_terms(const ComplexMatrix& a) {
  const auto re = re_part(a);
  const auto im = im_part(a);
  const double r = operator_norm(re);
  const double i = operator_norm(im);
  const double cr = hermitian_crawford(re);
  const double ci = hermitian_crawford(im);
  const auto ad = adjoint(a);
  const auto k = ad * a + a * ad;
  const double kn = operator_norm(k);
  const auto re2 = re_part(a * a);
  const double f = operator_norm(k * k + Complex(4.0) * (re2 * re2));
  LowerTerms out{};
  out.norm = 0.5 * operator_norm(a) + 0.5 * std::abs(r - i);
  out.kittaneh = 0.25 * kn + 0.5 * std::abs(r * r - i * i);
  out.crawford = 0.25 * kn + 0.5 * (cr * cr + ci * ci) +
                 std::abs(0.5 * (r * r - i * i) + 0.5 * (ci * ci - cr * cr));
  out.fourth = f / 16.0 + 0.5 * std::abs(std::pow(r, 4) - std::pow(i, 4));
  return out;
}

}  // namespace

Results check_classical_lower_bounds(const ComplexMatrix& a, const CheckContext& ctx) {
  const auto lt = lower_terms(a);
  const Est w = radius(a, ctx);
  Results out;
  out.push_back(make_check("classical.lower_norm", std::nullopt, exact(lt.norm), w, kLe, ctx));
  out.push_back(make_check("classical.lower_kittaneh", std::nullopt, exact(lt.kittaneh),
                           square(w), kLe, ctx));
  out.push_back(make_check("classical.lower_crawford", std::nullopt, exact(lt.crawford),
                           square(w), kLe, ctx));
  out.push_back(make_check("classical.lower_fourth", std::nullopt, exact(lt.fourth), power(w, 4),
                           kLe, ctx));
  return out;
}

Results check_lower_bounds(const ComplexMatrix& a, const WeightPair& p, double t,
                           const CheckContext& ctx) {
  p.check_t(t);
  Results out = check_classical_lower_bounds(a, ctx);
  const auto lt = lower_terms(a);
  const double al = combo_values(p, t).alpha;
  const Est wt = radius(weighted_operator(a, p, t), ctx);
  out.push_back(make_check("weighted.lower_norm", t, exact(al * lt.norm), wt, kLe, ctx));
  out.push_back(make_check("weighted.lower_kittaneh", t, exact(al * al * lt.kittaneh), square(wt),
                           kLe, ctx));
  out.push_back(make_check("weighted.lower_crawford", t, exact(al * al * lt.crawford), square(wt),
                           kLe, ctx));
  out.push_back(make_check("weighted.lower_fourth", t, exact(std::pow(al, 4) * lt.fourth),
                           power(wt, 4), kLe, ctx));
  return out;
}

Results check_vector_inequalities(int dim, int trials, std::uint64_t seed, const CheckContext& ctx) {
  if (dim < 1) throw Error(ErrorKind::BadDimension, "dimension must be >= 1");
  if (trials < 1) throw Error(ErrorKind::BadParameter, "trials must be >= 1");
  const auto n = static_cast<std::size_t>(dim);
  Results out;
  for (int k = 0; k < trials; ++k) {
    Rng rng(seed, static_cast<std::uint64_t>(k));
    auto vec = [&] {
      Vector v(n);
      for (auto& z : v) z = rng.complex_normal();
      return v;
    };
    auto unit = [&] {
      Vector v;
      double nv = 0.0;
      do {
        v = vec();
        nv = norm(v);
      } while (nv == 0.0);
      for (auto& z : v) z /= nv;
      return v;
    };
    auto mat = [&] {
      ComplexMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
      return m;
    };
    CheckContext c = ctx;
    c.trial = ctx.trial < 0 ? k : ctx.trial;
    {
      const auto x = vec();
      const auto y = vec();
      const auto e = unit();
      const double lhs = std::abs(inner(x, e) * inner(e, y));
      const double rhs = 0.5 * (std::abs(inner(x, y)) + norm(x) * norm(y));
      out.push_back(make_check("vector.buzano", std::nullopt, exact(lhs), exact(rhs), kLe, c));
    }
    {
      const auto g = mat();
      const auto tm = g * adjoint(g);
      const auto x = unit();
      const double base = std::max(0.0, rayleigh(tm, x).real());
      for (const double r : {1.0, 1.5, 2.0, 3.0}) {
        const double rhs = rayleigh(psd_power(tm, r), x).real();
        out.push_back(make_check("vector.power", std::nullopt, exact(std::pow(base, r)),
                                 exact(rhs), kLe, c, "r=" + format_real(r)));
      }
    }
    {
      const auto tm = mat();
      const auto td = adjoint(tm);
      const auto x = vec();
      const auto y = vec();
      const double lhs = std::norm(inner(tm * x, y));
      const auto tt = td * tm;  // |T|^2
      const auto ttd = tm * td;  // |T*|^2
      for (const double al : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double rx = inner(psd_power(tt, al) * x, x).real();
        const double ry = inner(psd_power(ttd, 1.0 - al) * y, y).real();
        out.push_back(make_check("vector.mixed_schwarz", std::nullopt, exact(lhs),
                                 exact(rx * ry), kLe, c, "a=" + format_real(al)));
      }
    }
  }
  return out;
}

Results check_upper_bounds(const ComplexMatrix& a, const WeightPair& p, double t,
                           const CheckContext& ctx) {
  p.check_t(t);
  const double f = p.phi(t);
  const double g = p.psi(t);
  const double fg = std::abs(f * g);
  const auto ad = adjoint(a);
  const Est w = radius(a, ctx);
  const Est w2 = radius(squared(a), ctx);
  const double kn = kittaneh_norm(a);
  const double herm = hermitian_radius(a * a + ad * ad);
  const Est wt = radius(weighted_operator(a, p, t), ctx);
  const Est lhs = square(wt);
  Results out;
  out.push_back(make_check("weighted.upper_buzano", t, lhs,
                           f * f * square(w) + fg * w2 +
                               exact(0.5 * (std::abs(f) + std::abs(g)) * std::abs(g) * kn),
                           kLe, ctx));
  out.push_back(make_check("weighted.upper_mixed_schwarz", t, lhs,
                           exact(0.5 * (f * f + g * g) * kn + fg * herm), kLe, ctx));
  out.push_back(make_check("weighted.upper_square_sum", t, lhs,
                           (f * f + g * g) * square(w) + fg * w2 + exact(0.5 * fg * kn), kLe,
                           ctx));
  const double na = operator_norm(a);
  out.push_back(make_check("weighted.upper_norm", t, lhs,
                           exact(std::pow((std::abs(f) + std::abs(g)) * na, 2)), kLe, ctx));

  const double T = p.interval();
  const auto one = WeightFn::constant(1.0, T);
  const auto rev = WeightFn::affine(1.0, -2.0, T);
  const bool reversed = same_pair(p, rev, one);
  const bool nayak = same_pair(p, one, rev);
  if (T == 1.0 && (reversed || nayak)) {
    // omega_t(1-2t, 1; T) with T = A, or T = A* for (1, 1-2t)
    const auto tm = reversed ? a : ad;
    const auto td = adjoint(tm);
    const Est lt = square(radius(weighted_operator(tm, WeightPair(rev, one), t), ctx));
    const Est wT = radius(tm, ctx);
    const Est wT2 = radius(squared(tm), ctx);
    const double knT = kittaneh_norm(tm);
    const double hT = hermitian_radius(tm * tm + td * td);
    const double u = 1.0 - 2.0 * t;
    const CheckMode mode = t <= 0.5 ? kLe : kReport;
    const std::string note = std::string(reversed ? "T = A" : "T = A*") +
                             (t <= 0.5 ? "" : "; printed coefficients assume t <= 1/2");
    out.push_back(make_check("special.reversed_nayak_buzano", t, lt,
                             u * u * square(wT) + u * wT2 + exact((1.0 - t) * knT), mode, ctx,
                             note));
    out.push_back(make_check("special.reversed_nayak_mixed_schwarz", t, lt,
                             exact((1.0 - 2.0 * t + 2.0 * t * t) * knT + u * hT), mode, ctx, note));
    out.push_back(make_check("special.reversed_nayak_square_sum", t, lt,
                             (2.0 - 4.0 * t + 4.0 * t * t) * square(wT) + u * wT2 +
                                 exact(0.5 * u * knT),
                             mode, ctx, note));
  }
  if (p.phi.is_zero() && p.psi == one) {
    out.push_back(make_check("special.adjoint_buzano", t, lhs, exact(0.5 * kn), kLe, ctx));
    out.push_back(make_check("special.adjoint_mixed_schwarz", t, lhs, exact(0.5 * kn), kLe, ctx));
  }
  return out;
}

Results check_index_bounds(const ComplexMatrix& a, const WeightPair& p, double t,
                           const CheckContext& ctx) {
  p.check_t(t);
  const auto cv = combo_values(p, t);
  const Est w = radius(a, ctx);
  const Est wt = radius(weighted_operator(a, p, t), ctx);
  const double kn = kittaneh_norm(a);
  Results out;
  out.push_back(make_check("index.radius_alpha_lower", t, cv.alpha * w, wt, kLe, ctx));
  out.push_back(make_check("index.radius_lambda_upper", t, wt, cv.lambda * w, kLe, ctx));
  out.push_back(make_check("index.square_alpha_lower", t, exact(0.25 * cv.alpha * cv.alpha * kn),
                           square(wt), kLe, ctx));
  out.push_back(make_check("index.square_lambda_upper", t, square(wt),
                           exact(0.5 * cv.lambda * cv.lambda * kn), kLe, ctx));
  return out;
}

std::vector<std::string> SuiteConfig::default_families() {
  auto f = builtin_family_names();
  f.push_back("poly:[1,-2]|[1]");
  f.push_back("const:0,1");
  return f;
}

SweepConfig SuiteConfig::default_sweep() {
  SweepConfig s;
  s.grid_size = 64;
  s.max_extra_evals = 32;
  return s;
}

void SuiteConfig::validate() const {
  if (trials < 1) throw Error(ErrorKind::BadParameter, "trials must be >= 1");
  if (dim_lo < 2 || dim_hi < dim_lo)
    throw Error(ErrorKind::BadDimension, "dims must satisfy 2 <= lo <= hi");
  if (families.empty()) throw Error(ErrorKind::BadParameter, "no weight families");
  if (!(tol_rel >= 0.0)) throw Error(ErrorKind::BadParameter, "tol_rel must be >= 0");
  if (t_samples < 1) throw Error(ErrorKind::BadParameter, "t_samples must be >= 1");
  if (integral_every < 0 || derivative_every < 0 || index_every < 0)
    throw Error(ErrorKind::BadParameter, "group periods must be >= 0");
  if (index_samples < 1 || index_refine_steps < 0)
    throw Error(ErrorKind::BadParameter, "bad index estimation budget");
  sweep.validate();
}

double lds_point(std::uint64_t k, double offset) noexcept {
  constexpr double g = 0.6180339887498948482;  // 1 / golden ratio
  const double x = offset + static_cast<double>(k % (1ULL << 40)) * g;
  return x - std::floor(x);
}

namespace {

constexpr std::array kEnsembles{Ensemble::Ginibre, Ensemble::Hermitian, Ensemble::Unitary,
                                Ensemble::Nilpotent2, Ensemble::Antidiagonal};

// One-sided pairs for the derivative group: nonnegative and nondecreasing.
std::vector<WeightPair> derivative_pairs() {
  constexpr double pi = std::numbers::pi;
  return {
      WeightPair(WeightFn::constant(1.0), WeightFn::constant(0.0), "const:1,0"),
      WeightPair(WeightFn::affine(0.0, 1.0), WeightFn::constant(0.0), "poly:[0,1]|[0]"),
      WeightPair(WeightFn::polynomial({0.0, 0.0, 1.0}), WeightFn::constant(0.0),
                 "poly:[0,0,1]|[0]"),
      WeightPair(WeightFn::sin_quarter(pi), WeightFn::constant(0.0, pi), "sinq,0@T=pi"),
      WeightPair(WeightFn::constant(0.0, pi), WeightFn::sin_quarter(pi), "0,sinq@T=pi"),
  };
}

// t-sample j of trial i as a fraction of the interval. Every tenth trial
// pins its first two samples to the endpoints.
double t_fraction(const SuiteConfig& cfg, int trial, int j) {
  if (trial % 10 == 0 && j < 2) return j == 0 ? 0.0 : 1.0;
  return lds_point(static_cast<std::uint64_t>(trial) * cfg.t_samples + j, 0.5);
}

Results run_trial(const SuiteConfig& cfg, int trial, const std::vector<WeightPair>& pairs) {
  const std::uint64_t tr = static_cast<std::uint64_t>(trial);
  Rng rng(cfg.rng_seed, tr);
  const Ensemble ens = kEnsembles[tr % kEnsembles.size()];
  const int dim = cfg.matrix ? static_cast<int>(cfg.matrix->dim())
                             : static_cast<int>(rng.integer(cfg.dim_lo, cfg.dim_hi));
  const auto a = cfg.matrix ? *cfg.matrix : sample({ens, dim, stream_seed(cfg.rng_seed, 3 * tr)});
  const auto b = sample({Ensemble::Ginibre, dim, stream_seed(cfg.rng_seed, 3 * tr + 1)});
  const auto e = sample({Ensemble::Ginibre, dim, stream_seed(cfg.rng_seed, 3 * tr + 2)});

  FovCache cache;
  CheckContext ctx;
  ctx.tol_rel = cfg.tol_rel;
  ctx.sweep = cfg.sweep;
  ctx.trial = trial;
  ctx.cache = &cache;
  const std::string head = "seed=" + std::to_string(cfg.rng_seed) + " trial=" +
                           std::to_string(trial) + " dim=" + std::to_string(dim) +
                           " ens=" + (cfg.matrix ? "input" : to_string(ens));
  ctx.digest = head;

  Results out;
  append(out, check_classical_lower_bounds(a, ctx));
  append(out, check_vector_inequalities(dim, 1, stream_seed(cfg.rng_seed, tr), ctx));

  for (std::size_t fi = 0; fi < pairs.size(); ++fi) {
    const auto& p = pairs[fi];
    ctx.digest = head + " weights=" + cfg.families[fi];
    const double T = p.interval();
    for (int j = 0; j < cfg.t_samples; ++j) {
      const double t = std::min(T, T * t_fraction(cfg, trial, j));
      const double s = std::min(T, T * lds_point(tr * cfg.t_samples + j, 0.1180339887));
      append(out, check_basic_properties(a, b, p, t, ctx));
      append(out, check_difference_bounds(a, b, p, t, ctx));
      SmoothnessInputs in;
      in.s = s;
      in.seq_n = double(1 << (j % 5));
      in.seq_k = double(1 << ((trial + j) % 5));
      append(out, check_smoothness(a, e, p, t, in, ctx));
      auto lower = check_lower_bounds(a, p, t, ctx);
      // the classical part is emitted once per trial above
      std::erase_if(lower, [](const CheckResult& r) { return r.check_id.starts_with("classical."); });
      append(out, std::move(lower));
      append(out, check_upper_bounds(a, p, t, ctx));
      append(out, check_index_bounds(a, p, t, ctx));
      if (j == 0) append(out, check_direct_sum(a, b, p, t, ctx));
    }
    if (cfg.integral_every > 0 && trial % cfg.integral_every == 0)
      append(out, check_integral_bounds(a, p, ctx));
    if (cfg.index_every > 0 && trial % cfg.index_every == 0) {
      const double t = T * t_fraction(cfg, trial, 0);
      SweepConfig scfg = cfg.sweep;
      scfg.rng_seed = stream_seed(cfg.rng_seed, tr);
      const auto est = estimate_index(2, p, t, cfg.index_samples, cfg.index_refine_steps, scfg);
      const Est v{est.value, est.radius.width()};
      out.push_back(make_check("index.estimate_bracket", t, exact(est.lower), v, kLe, ctx,
                               "lower end, dim=2", kIndexEstimationTol));
      out.push_back(make_check("index.estimate_bracket", t, v, exact(est.upper), kLe, ctx,
                               "upper end, dim=2", kIndexEstimationTol));
      if (trial == 0) {
        CheckContext ictx = ctx;
        ictx.sweep = scfg;
        append(out, check_index_lipschitz(p, perturbed(p, 2.0), t, 2, cfg.index_samples,
                                          cfg.index_refine_steps, ictx));
      }
    }
  }

  if (cfg.derivative_every > 0 && trial % cfg.derivative_every == 0) {
    const double h = kDerivativeStep;
    for (const auto& p : derivative_pairs()) {
      ctx.digest = head + " weights=" + p.label;
      const double T = p.interval();
      const double t = h + (T - 2.0 * h) * lds_point(tr, 0.3);
      append(out, check_derivative(a, p, t, ctx));
    }
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<WeightPair> pairs;
  pairs.reserve(cfg.families.size());
  for (const auto& f : cfg.families) pairs.push_back(parse_weights(f));

  std::vector<Results> per_trial(static_cast<std::size_t>(cfg.trials));
  detail::parallel_for(per_trial.size(), [&](std::size_t i) {
    per_trial[i] = run_trial(cfg, static_cast<int>(i), pairs);
  }, 1);

  SuiteReport rep;
  for (auto& r : per_trial) append(rep.results, std::move(r));
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const CheckResult& x, const CheckResult& y) {
                     if (x.check_id != y.check_id) return x.check_id < y.check_id;
                     return x.trial < y.trial;
                   });
  for (const auto& r : rep.results) {
    ++rep.total;
    if (r.mode == CheckMode::ReportOnly) ++rep.report_only;
    else if (r.pass) ++rep.passed;
    else ++rep.failed;
    if (rep.check_ids.empty() || rep.check_ids.back() != r.check_id)
      rep.check_ids.push_back(r.check_id);
  }
  return rep;
}

}  // namespace wnr
