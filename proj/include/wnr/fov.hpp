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

#ifndef WNR_FOV_HPP
#define WNR_FOV_HPP

#include <cstdint>
#include <vector>

#include "wnr/linalg.hpp"

namespace wnr {

/// Field-of-values sweep parameters.
struct SweepConfig {
  int grid_size = 1024;        // K, uniform directions on [0, 2pi)
  double refine_tol = 1e-10;   // golden-section bracket in theta
  double eig_tol = kDefaultEigTol;
  int oracle_samples = 20000;
  std::uint64_t rng_seed = 0;
  // Extra support evaluations spent tightening the polygon certificate.
  int max_extra_evals = 128;
  // Stop tightening once upper - lower <= cert_rel * max(|value|, 1e-300)
  double cert_rel = 1e-10;

  void validate() const;
};

/// A value with a bracket [lower, upper] known to contain the exact
/// quantity, up to eigensolver round-off.
struct CertifiedValue {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double theta = 0.0;  // direction at which value is attained
  Vector witness;      // unit vector realising the supporting point

  double width() const noexcept { return upper - lower; }
};

enum class Extreme { Max, Min };

struct SupportValue {
  double lambda;  // extreme eigenvalue of Re(e^{i theta} A)
  Vector x;       // its unit eigenvector
};

/// Extreme eigenpair of Re(e^{i theta} A); lambda = Re(e^{i theta} <Ax,x>).
SupportValue support_value(const ComplexMatrix& a, double theta, Extreme which,
                           double eig_tol = kDefaultEigTol);

struct FovSummary {
  CertifiedValue radius;    // omega(A)
  CertifiedValue crawford;  // c(A)
  double norm = 0.0;        // ||A||, the Lipschitz constant of the support function
};

/// omega(A) and c(A) from one sweep of support functions.
///
/// omega(A) = max_theta lambda_max(Re(e^{i theta} A)) and, because W(A) is
/// convex, c(A) = max(0, max_theta lambda_min(Re(e^{i theta} A))). Both are
/// maximised on the grid, every competitive grid-local maximum is refined by
/// golden section, and the brackets come from:
///   omega: lower = attained support value; upper = min of the Lipschitz
///          bound (best grid value + ||A|| 2pi/K) and the largest vertex of
///          the circumscribed polygon cut out by the evaluated support lines,
///          tightened adaptively.
///   c:     lower = best separating margin; upper = distance from 0 to the
///          convex hull of attained points of W(A).
FovSummary field_of_values(const ComplexMatrix& a, const SweepConfig& cfg = {});

CertifiedValue numerical_radius(const ComplexMatrix& a, const SweepConfig& cfg = {});
CertifiedValue crawford_number(const ComplexMatrix& a, const SweepConfig& cfg = {});
/// m(A) = inf |<Ax,x>| over the unit sphere, i.e. c(A).
double m_lower(const ComplexMatrix& a, const SweepConfig& cfg = {});

/// Exact omega and c of a Hermitian matrix from its extreme eigenvalues.
double hermitian_radius(const ComplexMatrix& h);
double hermitian_crawford(const ComplexMatrix& h);

struct BoundaryPoint {
  double theta;
  Complex z;
};

/// Supporting points of W(A) for `points` uniform directions.
std::vector<BoundaryPoint> range_boundary(const ComplexMatrix& a, int points,
                                          double eig_tol = kDefaultEigTol);

enum class OracleMode { Sup, Inf };

/// max or min of |<Ax,x>| over cfg.oracle_samples unit vectors drawn from the
/// rotation-invariant distribution. An inner bound: never above omega and
/// never below c. Deterministic in cfg.rng_seed.
double sphere_oracle(const ComplexMatrix& a, OracleMode mode, const SweepConfig& cfg = {});

}  // namespace wnr

#endif
