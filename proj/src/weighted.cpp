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

#include "wnr/weighted.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "wnr/error.hpp"

namespace wnr {

ComplexMatrix weighted_operator(const ComplexMatrix& a, const WeightPair& p, double t) {
  p.check_t(t);
  const double f = p.phi(t);
  const double g = p.psi(t);
  if (g == 0.0) return Complex(f) * a;
  return Complex(f) * a + Complex(g) * adjoint(a);
}

CertifiedValue weighted_radius(const ComplexMatrix& a, const WeightPair& p, double t,
                               const SweepConfig& cfg) {
  return numerical_radius(weighted_operator(a, p, t), cfg);
}

CertifiedValue weighted_crawford(const ComplexMatrix& a, const WeightPair& p, double t,
                                 const SweepConfig& cfg) {
  return crawford_number(weighted_operator(a, p, t), cfg);
}

double weighted_norm(const ComplexMatrix& a, const WeightPair& p, double t) {
  return operator_norm(weighted_operator(a, p, t));
}

WeightedQuantities weighted_quantities(const ComplexMatrix& a, const WeightPair& p, double t,
                                       const SweepConfig& cfg) {
  auto fov = field_of_values(weighted_operator(a, p, t), cfg);
  return {t, std::move(fov.radius), std::move(fov.crawford), fov.norm};
}

double antidiagonal_radius_closed_form(Complex a, Complex b, const WeightPair& p, double t) {
  p.check_t(t);
  const double f = p.phi(t);
  const double g = p.psi(t);
  // B_t = [[0, p], [q, 0]] and sup_theta |p e^{i theta} + q e^{-i theta}| = |p| + |q|.
  return 0.5 * (std::abs(f * a + g * std::conj(b)) + std::abs(f * b + g * std::conj(a)));
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::BadDimension, "direct_sum needs at least one block");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  ComplexMatrix out(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) out(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return out;
}

double direct_sum_radius(std::span<const ComplexMatrix> blocks, const WeightPair& p, double t,
                         const SweepConfig& cfg) {
  if (blocks.empty()) throw Error(ErrorKind::BadDimension, "direct_sum needs at least one block");
  double best = 0.0;
  for (const auto& b : blocks) best = std::max(best, weighted_radius(b, p, t, cfg).value);
  return best;
}

Quantity parse_quantity(const std::string& s) {
  if (s == "radius") return Quantity::Radius;
  if (s == "crawford") return Quantity::Crawford;
  if (s == "norm") return Quantity::Norm;
  throw Error(ErrorKind::BadParameter, "unknown quantity '" + s + "'");
}

const char* to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::Radius: return "radius";
    case Quantity::Crawford: return "crawford";
    case Quantity::Norm: return "norm";
  }
  return "?";
}

SweepCurve t_sweep(const ComplexMatrix& a, const WeightPair& p, Quantity q, int grid,
                   const SweepConfig& cfg) {
  if (grid < 2) throw Error(ErrorKind::BadParameter, "t_sweep needs grid >= 2");
  const auto m = static_cast<std::size_t>(grid);
  const double T = p.interval();
  SweepCurve out;
  out.quantity = q;
  out.ts.resize(m);
  out.values.resize(m);
  out.lower.resize(m);
  out.upper.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    out.ts[i] = i + 1 == m ? T : T * static_cast<double>(i) / static_cast<double>(m - 1);
  detail::parallel_for(m, [&](std::size_t i) {
    const double t = out.ts[i];
    if (q == Quantity::Norm) {
      const double v = weighted_norm(a, p, t);
      out.values[i] = out.lower[i] = out.upper[i] = v;
      return;
    }
    const auto c = q == Quantity::Radius ? weighted_radius(a, p, t, cfg)
                                         : weighted_crawford(a, p, t, cfg);
    out.values[i] = c.value;
    out.lower[i] = c.lower;
    out.upper[i] = c.upper;
  }, 1);
  return out;
}

}  // namespace wnr
