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

#include "wnr/fov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "parallel.hpp"
#include "wnr/error.hpp"
#include "wnr/rng.hpp"

namespace wnr {

void SweepConfig::validate() const {
  if (grid_size < 8) throw Error(ErrorKind::BadParameter, "grid_size must be >= 8");
  if (!(refine_tol > 0.0)) throw Error(ErrorKind::BadParameter, "refine_tol must be > 0");
  if (oracle_samples < 1) throw Error(ErrorKind::BadParameter, "oracle_samples must be >= 1");
  if (!(eig_tol > 0.0)) throw Error(ErrorKind::BadParameter, "eig_tol must be > 0");
  if (max_extra_evals < 0) throw Error(ErrorKind::BadParameter, "max_extra_evals must be >= 0");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kRefinedPeaks = 4;
constexpr int kHullProbeDirections = 16;
// Above this size the hull certificate costs too many eigenvector solves.
constexpr std::size_t kHullMaxDim = 32;

// Re(e^{i theta} A) = cos(theta) ReA - sin(theta) ImA
struct Pencil {
  ComplexMatrix re;
  ComplexMatrix im;

  explicit Pencil(const ComplexMatrix& a) : re(re_part(a)), im(im_part(a)) {}

  ComplexMatrix at(double theta) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t n = re.dim();
    std::vector<Complex> h(n * n);
    const auto r = re.entries();
    const auto i = im.entries();
    for (std::size_t k = 0; k < n * n; ++k) h[k] = c * r[k] - s * i[k];
    return ComplexMatrix(n, std::move(h));
  }
};

struct Extremes {
  double max;
  double min;
};

Extremes extremes(const Pencil& p, double theta, double eig_tol) {
  const auto w = hermitian_eigvals(p.at(theta), eig_tol);
  return {w.back(), w.front()};
}

struct Refined {
  double theta;
  double value;
};

// Maximises f on [a, b] by Brent's method (golden section with parabolic
// steps). Brent cannot resolve theta below sqrt(eps) relative, which is
// already far below what moves the value of a smooth maximum.
template <class F>
Refined refine_max(F&& f, double a, double b, double tol) {
  const int max_bits = std::numeric_limits<double>::digits / 2;
  const int bits = std::clamp(static_cast<int>(std::ceil(-std::log2(tol))), 8, max_bits);
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::brent_find_minima(
      [&](double t) { return -f(t); }, a, b, bits, iters);
  return {r.first, -r.second};
}

// Indices of the strongest grid-local maxima of a cyclic sequence.
std::vector<std::size_t> top_local_maxima(const std::vector<double>& v, int how_many) {
  const std::size_t k = v.size();
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < k; ++i) {
    const double prev = v[(i + k - 1) % k];
    const double next = v[(i + 1) % k];
    if (v[i] > prev && v[i] >= next) peaks.push_back(i);
  }
  if (peaks.empty()) peaks.push_back(static_cast<std::size_t>(
      std::max_element(v.begin(), v.end()) - v.begin()));
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (peaks.size() > static_cast<std::size_t>(how_many)) peaks.resize(how_many);
  return peaks;
}

// Upper bound for h on [t1, t2], 0 < t2 - t1 < pi, given the support values
// at both ends. W(A) lies in the wedge cut out by the two support lines, so
// h(t) <= Re(e^{i t} v) for the apex v = e^{-i t1}(h1 + i b), where
// b = (h1 cos d - h2) / sin d. That sinusoid peaks at |v| when its peak falls
// inside the interval and at an endpoint otherwise. The Lipschitz tent bound
// covers nearly antiparallel lines, whose apex can be far away.
double edge_bound(double t1, double h1, double t2, double h2, double lip) {
  const double d = t2 - t1;
  const double b = (h1 * std::cos(d) - h2) / std::sin(d);
  const double peak = -std::atan2(b, h1);
  const double wedge = (peak >= 0.0 && peak <= d) ? std::hypot(h1, b) : std::max(h1, h2);
  const double tent = 0.5 * (h1 + h2) + 0.5 * lip * d;
  return std::max(std::max(h1, h2), std::min(wedge, tent));
}

struct SupportLine {
  double theta;
  double h;
};

struct Polygon {
  std::vector<SupportLine> lines;  // sorted by theta in [0, 2pi)
  std::vector<double> vertex;      // vertex[i] bounds h between lines i and i+1
  double lip = 0.0;

  void rebuild() {
    vertex.resize(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) vertex[i] = edge(i);
  }
  double edge(std::size_t i) const {
    const auto& a = lines[i];
    const auto& b = lines[(i + 1) % lines.size()];
    double tb = b.theta;
    if (tb <= a.theta) tb += kTwoPi;
    return edge_bound(a.theta, a.h, tb, b.h, lip);
  }
  std::size_t worst() const {
    return static_cast<std::size_t>(std::max_element(vertex.begin(), vertex.end()) -
                                    vertex.begin());
  }
  double midpoint(std::size_t i) const {
    const double a = lines[i].theta;
    double b = lines[(i + 1) % lines.size()].theta;
    if (b <= a) b += kTwoPi;
    return std::fmod(0.5 * (a + b), kTwoPi);
  }
  void insert(SupportLine s) {
    auto it = std::lower_bound(lines.begin(), lines.end(), s.theta,
                               [](const SupportLine& l, double t) { return l.theta < t; });
    if (it != lines.end() && it->theta == s.theta) return;
    const auto pos = static_cast<std::size_t>(it - lines.begin());
    lines.insert(it, s);
    vertex.insert(vertex.begin() + pos, 0.0);
    const std::size_t m = lines.size();
    vertex[(pos + m - 1) % m] = edge((pos + m - 1) % m);
    vertex[pos] = edge(pos);
  }
};

double wrap(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

// Closest point to the origin of the convex hull of `pts`, via monotone chain.
Complex hull_nearest_origin(std::vector<Complex> pts, bool& origin_inside) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  origin_inside = false;
  if (pts.size() == 1) return pts[0];
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  if (hull.size() >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < hull.size() && inside; ++i)
      inside = cross(hull[i], hull[(i + 1) % hull.size()], Complex{}) > 0.0;
    if (inside) {
      origin_inside = true;
      return Complex{};
    }
  }
  Complex best = hull[0];
  double best_d = std::abs(best);
  const std::size_t m = hull.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % m];
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0.0 ? -(a.real() * ab.real() + a.imag() * ab.imag()) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    const Complex p = a + s * ab;
    if (std::abs(p) < best_d) {
      best_d = std::abs(p);
      best = p;
    }
  }
  return best;
}

}  // namespace

SupportValue support_value(const ComplexMatrix& a, double theta, Extreme which,
                           double eig_tol) {
  const Complex rot = std::polar(1.0, theta);
  auto eig = hermitian_eigs(re_part(rot * a), eig_tol);
  if (which == Extreme::Max) return {eig.values.back(), std::move(eig.vectors.back())};
  return {eig.values.front(), std::move(eig.vectors.front())};
}

double hermitian_radius(const ComplexMatrix& h) {
  const auto w = hermitian_eigvals(h);
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

double hermitian_crawford(const ComplexMatrix& h) {
  const auto w = hermitian_eigvals(h);
  if (w.front() > 0.0) return w.front();
  if (w.back() < 0.0) return -w.back();
  return 0.0;
}

FovSummary field_of_values(const ComplexMatrix& a, const SweepConfig& cfg) {
  cfg.validate();
  FovSummary out;
  const std::size_t n = a.dim();
  if (n == 1) {
    const double v = std::abs(a(0, 0));
    const double arg = std::arg(a(0, 0));
    out.norm = v;
    out.radius = {v, v, v, wrap(-arg), Vector{1.0}};
    out.crawford = {v, v, v, wrap(-arg), Vector{1.0}};
    return out;
  }

  const Pencil pencil(a);
  const double lip = operator_norm(a);
  out.norm = lip;
  if (lip == 0.0) {
    Vector e(n);
    e[0] = 1.0;
    out.radius = {0.0, 0.0, 0.0, 0.0, e};
    out.crawford = {0.0, 0.0, 0.0, 0.0, e};
    return out;
  }
  const double slack = 32.0 * static_cast<double>(n) * kEps * lip;
  const std::size_t k = static_cast<std::size_t>(cfg.grid_size);
  const double step = kTwoPi / static_cast<double>(k);

  std::vector<double> hmax(k), hmin(k);
  detail::parallel_for(k, [&](std::size_t i) {
    const auto e = extremes(pencil, step * static_cast<double>(i), cfg.eig_tol);
    hmax[i] = e.max;
    hmin[i] = e.min;
  }, 16);

  auto hmax_at = [&](double t) { return extremes(pencil, t, cfg.eig_tol).max; };
  auto hmin_at = [&](double t) { return extremes(pencil, t, cfg.eig_tol).min; };

  // ---- numerical radius ----
  const auto grid_best = *std::max_element(hmax.begin(), hmax.end());
  Polygon poly;
  poly.lip = lip;
  poly.lines.reserve(k + 2 * kRefinedPeaks + cfg.max_extra_evals);
  for (std::size_t i = 0; i < k; ++i) poly.lines.push_back({step * double(i), hmax[i]});
  poly.rebuild();

  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    if (hmax[i] > best) {
      best = hmax[i];
      best_theta = step * double(i);
    }
  for (std::size_t peak : top_local_maxima(hmax, kRefinedPeaks)) {
    const double t0 = step * double(peak);
    const auto g = refine_max(hmax_at, t0 - step, t0 + step, cfg.refine_tol);
    const double t = wrap(g.theta);
    poly.insert({t, g.value});
    if (g.value > best) {
      best = g.value;
      best_theta = t;
    }
  }
  const double target = cfg.cert_rel * std::max(std::abs(best), 1e-300);
  for (int extra = 0; extra < cfg.max_extra_evals; ++extra) {
    const std::size_t w = poly.worst();
    if (poly.vertex[w] - best <= target) break;
    const double t = poly.midpoint(w);
    const double h = hmax_at(t);
    poly.insert({t, h});
    if (h > best) {
      best = h;
      best_theta = t;
    }
  }
  const double poly_upper = poly.vertex[poly.worst()];
  const double lip_upper = grid_best + lip * step;
  {
    auto sv = support_value(a, best_theta, Extreme::Max, cfg.eig_tol);
    out.radius.value = best;
    out.radius.lower = best - slack;
    out.radius.upper = std::max(best, std::min(poly_upper, lip_upper)) + slack;
    out.radius.theta = best_theta;
    out.radius.witness = std::move(sv.x);
  }

  // ---- Crawford number ----
  double cbest = -std::numeric_limits<double>::infinity();
  double ctheta = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    if (hmin[i] > cbest) {
      cbest = hmin[i];
      ctheta = step * double(i);
    }
  for (std::size_t peak : top_local_maxima(hmin, 2)) {
    if (hmin[peak] + lip * step <= 0.0) continue;
    const double t0 = step * double(peak);
    const auto g = refine_max(hmin_at, t0 - step, t0 + step, cfg.refine_tol);
    if (g.value > cbest) {
      cbest = g.value;
      ctheta = wrap(g.theta);
    }
  }

  double c_upper = std::numeric_limits<double>::infinity();
  Vector c_witness;
  auto attained = [&](double theta) {
    auto sv = support_value(a, theta, Extreme::Min, cfg.eig_tol);
    const double z = std::abs(rayleigh(a, sv.x));
    if (z < c_upper) {
      c_upper = z;
      c_witness = sv.x;
    }
  };
  if (cbest > 0.0) {
    attained(ctheta);
    if (n <= kHullMaxDim) {
      // At a kink of lambda_min the nearest point of W(A) sits on a flat
      // edge and one eigenvector only sees an end of it; points attained on
      // both sides of ctheta span the edge.
      std::vector<Complex> pts;
      for (const double d : {0.0, 1e-7, 1e-5, 1e-3, step}) {
        for (const double sgn : {1.0, -1.0}) {
          if (d == 0.0 && sgn < 0.0) continue;
          const auto sv = support_value(a, ctheta + sgn * d, Extreme::Min, cfg.eig_tol);
          pts.push_back(rayleigh(a, sv.x));
        }
      }
      bool inside = false;
      const Complex p = hull_nearest_origin(std::move(pts), inside);
      c_upper = std::min(c_upper, inside ? 0.0 : std::abs(p));
    }
  } else if (n > kHullMaxDim) {
    // Eigenvectors are expensive here; bound max g between grid nodes by the
    // Lipschitz estimate instead: g <= (g_i + g_{i+1})/2 + ||A|| step / 2.
    double bound = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      bound = std::max(bound, 0.5 * (hmin[i] + hmin[(i + 1) % k]) + 0.5 * lip * step);
    c_upper = bound;
  } else {
    // No separating direction: certify 0 in W(A) through the hull of
    // attained boundary points, first with a few probe directions.
    auto hull_distance = [&](std::size_t directions) {
      std::vector<Complex> pts;
      pts.reserve(2 * directions);
      for (std::size_t i = 0; i < directions; ++i) {
        const double t = kTwoPi * double(i) / double(directions);
        const Complex rot = std::polar(1.0, t);
        const auto eig = hermitian_eigs(re_part(rot * a), cfg.eig_tol);
        pts.push_back(rayleigh(a, eig.vectors.back()));
        pts.push_back(rayleigh(a, eig.vectors.front()));
      }
      bool inside = false;
      const Complex p = hull_nearest_origin(std::move(pts), inside);
      return std::pair{inside, p};
    };
    auto [inside, nearest] = hull_distance(kHullProbeDirections);
    if (!inside) std::tie(inside, nearest) = hull_distance(k);
    if (inside) {
      c_upper = 0.0;
    } else {
      c_upper = std::abs(nearest);
      const double t0 = wrap(-std::arg(nearest));
      const auto g = refine_max(hmin_at, t0 - step, t0 + step, cfg.refine_tol);
      if (g.value > cbest) {
        cbest = g.value;
        ctheta = wrap(g.theta);
      }
      if (cbest > 0.0) attained(ctheta);
    }
  }
  const double cval = std::max(0.0, cbest);
  if (c_witness.empty()) c_witness = support_value(a, ctheta, Extreme::Min, cfg.eig_tol).x;
  out.crawford.value = cval;
  out.crawford.lower = std::max(0.0, cval - slack);
  out.crawford.upper = std::max(cval, c_upper) + slack;
  out.crawford.theta = ctheta;
  out.crawford.witness = std::move(c_witness);
  return out;
}

CertifiedValue numerical_radius(const ComplexMatrix& a, const SweepConfig& cfg) {
  return field_of_values(a, cfg).radius;
}

CertifiedValue crawford_number(const ComplexMatrix& a, const SweepConfig& cfg) {
  return field_of_values(a, cfg).crawford;
}

double m_lower(const ComplexMatrix& a, const SweepConfig& cfg) {
  return crawford_number(a, cfg).value;
}

std::vector<BoundaryPoint> range_boundary(const ComplexMatrix& a, int points, double eig_tol) {
  if (points < 3) throw Error(ErrorKind::BadParameter, "range_boundary needs >= 3 points");
  std::vector<BoundaryPoint> out(static_cast<std::size_t>(points));
  detail::parallel_for(out.size(), [&](std::size_t i) {
    const double t = kTwoPi * double(i) / double(points);
    const auto sv = support_value(a, t, Extreme::Max, eig_tol);
    out[i] = {t, rayleigh(a, sv.x)};
  }, 16);
  return out;
}

double sphere_oracle(const ComplexMatrix& a, OracleMode mode, const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t n = a.dim();
  const auto samples = static_cast<std::size_t>(cfg.oracle_samples);
  std::vector<double> q(samples);
  detail::parallel_for(samples, [&](std::size_t s) {
    Rng rng(cfg.rng_seed, s);
    Vector x(n);
    double nx = 0.0;
    do {
      for (auto& xi : x) xi = rng.complex_normal();
      nx = norm(x);
    } while (nx == 0.0);
    for (auto& xi : x) xi /= nx;
    q[s] = std::abs(inner(a * x, x));
  }, 1024);
  return mode == OracleMode::Sup ? *std::max_element(q.begin(), q.end())
                                 : *std::min_element(q.begin(), q.end());
}

}  // namespace wnr
