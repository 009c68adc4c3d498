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

#include "wnr/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "wnr/error.hpp"

namespace wnr {

namespace {

void check_interval(double interval) {
  if (!(interval > 0.0) || !std::isfinite(interval))
    throw Error(ErrorKind::BadInterval, "weight interval must be a positive finite T");
}

void trim(std::vector<double>& c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.empty()) c.push_back(0.0);
}

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(x))
    throw Error(ErrorKind::BadParameter,
                "cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  return x;
}

std::vector<double> parse_list(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::BadParameter, "polynomial coefficients must be written as [c0,c1,...]");
  s = s.substr(1, s.size() - 2);
  std::vector<double> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_number(s.substr(0, comma), "coefficient"));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_list(const std::vector<double>& c) {
  std::string s = "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += shortest(c[k]);
  }
  return s + "]";
}

}  // namespace

WeightFn WeightFn::constant(double c, double interval) {
  return polynomial({c}, interval);
}

WeightFn WeightFn::affine(double a, double b, double interval) {
  return polynomial({a, b}, interval);
}

WeightFn WeightFn::polynomial(std::vector<double> coeffs, double interval) {
  check_interval(interval);
  for (double c : coeffs)
    if (!std::isfinite(c)) throw Error(ErrorKind::BadParameter, "non-finite coefficient");
  WeightFn f;
  f.coeffs_ = std::move(coeffs);
  trim(f.coeffs_);
  f.interval_ = interval;
  return f;
}

WeightFn WeightFn::sin_quarter(double interval, double amplitude) {
  check_interval(interval);
  WeightFn f;
  f.sin_amp_ = amplitude;
  f.interval_ = interval;
  return f;
}

WeightFn WeightFn::cos_quarter(double interval, double amplitude) {
  check_interval(interval);
  WeightFn f;
  f.cos_amp_ = amplitude;
  f.interval_ = interval;
  return f;
}

double WeightFn::eval_unchecked(double t) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  if (sin_amp_ != 0.0) v += sin_amp_ * std::sin(0.25 * t);
  if (cos_amp_ != 0.0) v += cos_amp_ * std::cos(0.25 * t);
  return v;
}

double WeightFn::operator()(double t) const {
  const double slack = 1e-12 * interval_;
  if (!(t >= -slack && t <= interval_ + slack))
    throw Error(ErrorKind::OutOfInterval,
                "t=" + shortest(t) + " outside [0, " + shortest(interval_) + "]");
  return eval_unchecked(std::clamp(t, 0.0, interval_));
}

WeightKind WeightFn::kind() const noexcept {
  const bool poly = coeffs_.size() > 1 || coeffs_[0] != 0.0;
  if (sin_amp_ != 0.0 || cos_amp_ != 0.0) {
    if (poly || (sin_amp_ != 0.0 && cos_amp_ != 0.0)) return WeightKind::Mixed;
    return sin_amp_ != 0.0 ? WeightKind::SinQuarter : WeightKind::CosQuarter;
  }
  if (coeffs_.size() == 1) return WeightKind::Constant;
  if (coeffs_.size() == 2) return WeightKind::Affine;
  return WeightKind::Polynomial;
}

bool WeightFn::is_zero() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == 0.0 && sin_amp_ == 0.0 && cos_amp_ == 0.0;
}

WeightFn WeightFn::derivative() const {
  WeightFn d;
  d.interval_ = interval_;
  d.coeffs_.assign(std::max<std::size_t>(1, coeffs_.size() - 1), 0.0);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.coeffs_[k - 1] = static_cast<double>(k) * coeffs_[k];
  trim(d.coeffs_);
  // (a sin(t/4) + b cos(t/4))' = (a/4) cos(t/4) - (b/4) sin(t/4)
  d.sin_amp_ = -0.25 * cos_amp_;
  d.cos_amp_ = 0.25 * sin_amp_;
  return d;
}

double WeightFn::lipschitz() const {
  double k = 0.0;
  if (coeffs_.size() == 2) {
    k = std::abs(coeffs_[1]);
  } else {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      k += static_cast<double>(j) * std::abs(coeffs_[j]) * std::pow(interval_, double(j - 1));
  }
  return k + 0.25 * (std::abs(sin_amp_) + std::abs(cos_amp_));
}

WeightFn WeightFn::with_interval(double interval) const {
  check_interval(interval);
  WeightFn f = *this;
  f.interval_ = interval;
  return f;
}

WeightFn operator+(const WeightFn& a, const WeightFn& b) {
  if (a.interval_ != b.interval_)
    throw Error(ErrorKind::BadInterval, "cannot add weights on different intervals");
  WeightFn r = a;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  trim(r.coeffs_);
  r.sin_amp_ += b.sin_amp_;
  r.cos_amp_ += b.cos_amp_;
  return r;
}

WeightFn operator*(double s, const WeightFn& f) {
  WeightFn r = f;
  for (double& c : r.coeffs_) c *= s;
  trim(r.coeffs_);
  r.sin_amp_ *= s;
  r.cos_amp_ *= s;
  return r;
}

WeightPair::WeightPair(WeightFn phi_in, WeightFn psi_in, std::string label_in)
    : phi(std::move(phi_in)), psi(std::move(psi_in)), label(std::move(label_in)) {
  if (phi.interval() != psi.interval())
    throw Error(ErrorKind::BadInterval, "phi and psi must share their interval");
}

void WeightPair::check_t(double t) const { (void)phi(t); }

WeightPair builtin(std::string_view name) {
  if (name == "classical")
    return {WeightFn::constant(1.0), WeightFn::constant(0.0), "classical"};
  if (name == "nayak")
    return {WeightFn::constant(1.0), WeightFn::affine(1.0, -2.0), "nayak"};
  if (name == "trig") {
    const double T = std::numbers::pi;
    return {WeightFn::sin_quarter(T), WeightFn::cos_quarter(T), "trig"};
  }
  if (name.starts_with("convex:")) {
    const double nu = parse_number(name.substr(7), "nu");
    if (nu < 0.0 || nu > 1.0) throw Error(ErrorKind::BadParameter, "convex:nu needs nu in [0,1]");
    return {WeightFn::constant(nu), WeightFn::constant(1.0 - nu), "convex:" + shortest(nu)};
  }
  throw Error(ErrorKind::UnknownFamily, "unknown weight family '" + std::string(name) + "'");
}

std::vector<std::string> builtin_family_names() {
  return {"classical", "nayak", "convex:0.3", "trig"};
}

ComboValues combo_values(const WeightPair& p, double t) {
  const double f = p.phi(t);
  const double g = p.psi(t);
  ComboValues v{};
  v.sum = std::abs(f + g);
  v.diff = std::abs(f - g);
  v.alpha = std::min(v.sum, v.diff);
  v.lambda = std::max(v.sum, v.diff);
  v.absphi = std::abs(f);
  v.abspsi = std::abs(g);
  return v;
}

double integrate(const std::function<double(double)>& f, double a, double b, int nodes) {
  if (nodes < 3 || nodes % 2 == 0)
    throw Error(ErrorKind::BadParameter, "Simpson rule needs an odd node count >= 3");
  const int m = nodes - 1;
  const double h = (b - a) / m;
  double s = f(a) + f(b);
  for (int k = 1; k < m; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

WeightPair perturbed(const WeightPair& p, double n) {
  const double T = p.interval();
  const WeightFn dphi = WeightFn::affine(0.5, 0.5 / T, T);
  const WeightFn dpsi = WeightFn::affine(0.5, -0.5 / T, T);
  return {p.phi + (1.0 / n) * dphi, p.psi + (1.0 / n) * dpsi,
          p.label + "+delta/" + shortest(n)};
}

double perturbation_size(const WeightPair& p, double t) {
  const double u = t / p.interval();
  return std::abs(0.5 * (1.0 + u)) + std::abs(0.5 * (1.0 - u));
}

WeightPair sum(const WeightPair& a, const WeightPair& b) {
  return {a.phi + b.phi, a.psi + b.psi, "(" + a.label + ")+(" + b.label + ")"};
}

WeightPair swapped(const WeightPair& p) {
  return {p.psi, p.phi, "swap(" + p.label + ")"};
}

WeightPair negate_psi(const WeightPair& p) {
  return {p.phi, -p.psi, "negpsi(" + p.label + ")"};
}

WeightPair parse_weights(std::string_view spec) {
  std::string_view body = spec;
  double interval = -1.0;
  if (const auto at = spec.find('@'); at != std::string_view::npos) {
    body = spec.substr(0, at);
    std::string_view suffix = spec.substr(at + 1);
    if (!suffix.starts_with("T="))
      throw Error(ErrorKind::BadInterval, "interval override must read @T=<real>");
    try {
      interval = parse_number(suffix.substr(2), "interval");
    } catch (const Error&) {
      throw Error(ErrorKind::BadInterval, "cannot parse interval in '" + std::string(spec) + "'");
    }
    check_interval(interval);
  }

  WeightPair p;
  if (body.starts_with("poly:")) {
    const std::string_view lists = body.substr(5);
    const auto bar = lists.find('|');
    if (bar == std::string_view::npos)
      throw Error(ErrorKind::BadParameter, "poly weights need two lists separated by '|'");
    auto c = parse_list(lists.substr(0, bar));
    auto d = parse_list(lists.substr(bar + 1));
    p = WeightPair(WeightFn::polynomial(c), WeightFn::polynomial(d),
                   "poly:" + format_list(c) + "|" + format_list(d));
  } else if (body.starts_with("const:")) {
    const std::string_view args = body.substr(6);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::BadParameter, "const weights read const:<a>,<b>");
    const double a = parse_number(args.substr(0, comma), "a");
    const double b = parse_number(args.substr(comma + 1), "b");
    p = WeightPair(WeightFn::constant(a), WeightFn::constant(b),
                   "const:" + shortest(a) + "," + shortest(b));
  } else {
    p = builtin(body);
  }
  if (interval > 0.0 && interval != p.interval()) {
    p.phi = p.phi.with_interval(interval);
    p.psi = p.psi.with_interval(interval);
    p.label += "@T=" + shortest(interval);
  }
  return p;
}

std::string format_weights(const WeightPair& p) {
  if (!p.label.empty()) {
    try {
      const WeightPair q = parse_weights(p.label);
      if (q.phi == p.phi && q.psi == p.psi) return p.label;
    } catch (const Error&) {
    }
  }
  const bool trig = p.phi.sin_amplitude() != 0.0 || p.phi.cos_amplitude() != 0.0 ||
                    p.psi.sin_amplitude() != 0.0 || p.psi.cos_amplitude() != 0.0;
  if (!trig) {
    std::string s = "poly:" + format_list(p.phi.coefficients()) + "|" +
                    format_list(p.psi.coefficients());
    if (p.interval() != 1.0) s += "@T=" + shortest(p.interval());
    return s;
  }
  return p.label;
}

}  // namespace wnr
