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

#ifndef WNR_INDEX_HPP
#define WNR_INDEX_HPP

#include <cstdint>
#include <vector>

#include "wnr/check.hpp"
#include "wnr/fov.hpp"
#include "wnr/weights.hpp"

namespace wnr {

/// Upper estimate of the weighted numerical index
///   n_t(phi, psi; H) = inf { omega_t(phi, psi; A) : ||A|| = 1 }
/// over dim x dim matrices.
struct IndexEstimate {
  double value = 0.0;     // omega_t(witness)
  CertifiedValue radius;  // certified omega_t of the witness
  ComplexMatrix witness;  // ||witness|| = 1
  double lower = 0.0;     // alpha(t) / 2
  double upper = 0.0;     // lambda(t) / 2
  int samples = 0;
  int dim = 0;
  std::uint64_t seed = 0;
};

struct IndexBounds {
  double lower;  // alpha(t) / 2
  double upper;  // lambda(t) / 2
};

IndexBounds index_bounds(const WeightPair& p, double t);

/// Screens `samples` random unit-norm candidates (Ginibre plus nilpotent,
/// antidiagonal, Hermitian and skew-Hermitian ones; the witness
/// [[0,1],[0,0]] (+) 0 is always in the pool), then runs coordinate descent
/// with renormalisation from the best few, halving the step whenever a
/// round brings no improvement, for `refine_steps` rounds. Candidate k is
/// drawn from Rng(cfg.rng_seed, k), so two weight pairs estimated with the
/// same seed see the same pool. Throws BadDimension for dim < 2.
IndexEstimate estimate_index(int dim, const WeightPair& p, double t, int samples,
                             int refine_steps, const SweepConfig& cfg = {});

constexpr double kIndexEstimationTol = 0.01;

/// |n(p1) - n(p2)| <= |phi1-phi2|(t) + |psi1-psi2|(t) + 2 tol_est, and the
/// same along p_n = perturbed(p1, n) for n in {1, 2, 4, 8, 16}.
std::vector<CheckResult> check_index_lipschitz(const WeightPair& p1, const WeightPair& p2,
                                               double t, int dim, int samples,
                                               int refine_steps, const CheckContext& ctx);

}  // namespace wnr

#endif
