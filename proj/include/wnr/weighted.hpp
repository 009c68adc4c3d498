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

#ifndef WNR_WEIGHTED_HPP
#define WNR_WEIGHTED_HPP

#include <span>
#include <string>
#include <vector>

#include "wnr/fov.hpp"
#include "wnr/linalg.hpp"
#include "wnr/weights.hpp"

namespace wnr {

/// B_t = phi(t) A + psi(t) A*
ComplexMatrix weighted_operator(const ComplexMatrix& a, const WeightPair& p, double t);

CertifiedValue weighted_radius(const ComplexMatrix& a, const WeightPair& p, double t,
                               const SweepConfig& cfg = {});
CertifiedValue weighted_crawford(const ComplexMatrix& a, const WeightPair& p, double t,
                                 const SweepConfig& cfg = {});
double weighted_norm(const ComplexMatrix& a, const WeightPair& p, double t);

struct WeightedQuantities {
  double t = 0.0;
  CertifiedValue radius;    // omega_t
  CertifiedValue crawford;  // c_t
  double norm = 0.0;        // ||A||_t
};

/// All three quantities from one sweep of B_t.
WeightedQuantities weighted_quantities(const ComplexMatrix& a, const WeightPair& p, double t,
                                       const SweepConfig& cfg = {});

/// omega_t of [[0, a], [b, 0]] in closed form:
///   (|phi a + psi conj(b)| + |phi b + psi conj(a)|) / 2.
double antidiagonal_radius_closed_form(Complex a, Complex b, const WeightPair& p, double t);

/// Block-diagonal assembly. Throws BadDimension on an empty list.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);
/// max over blocks of omega_t.
double direct_sum_radius(std::span<const ComplexMatrix> blocks, const WeightPair& p, double t,
                         const SweepConfig& cfg = {});

enum class Quantity { Radius, Crawford, Norm };

Quantity parse_quantity(const std::string& s);
const char* to_string(Quantity q) noexcept;

struct SweepCurve {
  Quantity quantity = Quantity::Radius;
  std::vector<double> ts;
  std::vector<double> values;
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Uniform t grid of `grid` points over the weight interval (grid >= 2).
SweepCurve t_sweep(const ComplexMatrix& a, const WeightPair& p, Quantity q, int grid,
                   const SweepConfig& cfg = {});

}  // namespace wnr

#endif
