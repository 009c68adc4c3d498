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

#ifndef WNR_HARNESS_HPP
#define WNR_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wnr/check.hpp"
#include "wnr/linalg.hpp"
#include "wnr/weights.hpp"

namespace wnr {

// Each check_* function instantiates a group of statements on concrete
// inputs and returns one CheckResult per statement. Weighted quantities are
// taken at parameter t of the weight pair p; the certified widths of every
// swept quantity enter the tolerance.

/// Scaling, closed forms, symmetries, triangle and product inequalities,
/// weight additivity. A and B must have equal dimension.
std::vector<CheckResult> check_basic_properties(const ComplexMatrix& a, const ComplexMatrix& b,
                                                const WeightPair& p, double t,
                                                const CheckContext& ctx);

/// Reverse triangle inequalities for omega_t and c_t.
std::vector<CheckResult> check_difference_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                                 const WeightPair& p, double t,
                                                 const CheckContext& ctx);

struct SmoothnessInputs {
  double s = 0.0;      // second parameter
  double seq_n = 1.0;  // index n of the weight sequence perturbed(p, n)
  double seq_k = 1.0;  // index k of the operator sequence A + E/k
};

/// Continuity and Hoelder moduli in t, and the weight and operator
/// sequence bounds. E has the dimension of A.
std::vector<CheckResult> check_smoothness(const ComplexMatrix& a, const ComplexMatrix& e,
                                          const WeightPair& p, double t,
                                          const SmoothnessInputs& in, const CheckContext& ctx);

inline constexpr double kDerivativeStep = 1e-4;

/// Central difference of t -> omega_t, c_t against the weighted quantity of
/// the differentiated weight. Only for one-sided pairs (phi, 0) or (0, psi)
/// with a nonnegative nondecreasing weight (NotApplicable otherwise) and
/// for t at least kDerivativeStep inside the interval (OutOfInterval).
std::vector<CheckResult> check_derivative(const ComplexMatrix& a, const WeightPair& p, double t,
                                          const CheckContext& ctx);

inline constexpr int kIntegralSweepNodes = 65;

/// Bounds of ||Re A||, ||Im A||, ||A|| by int omega_t dt, and the integrated
/// alpha/lambda bracket. int omega_t comes from a kIntegralSweepNodes-point
/// sweep, interpolated linearly; the interpolation error enters the width.
/// Items whose weight integral is below 1e-9 are skipped; DegenerateWeights
/// if every norm item is skipped.
std::vector<CheckResult> check_integral_bounds(const ComplexMatrix& a, const WeightPair& p,
                                               const CheckContext& ctx);

/// omega_t of a direct sum against the blockwise maximum, and the Crawford
/// form for blocks shifted to Re >= 0 (report only).
std::vector<CheckResult> check_direct_sum(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const WeightPair& p, double t,
                                          const CheckContext& ctx);

/// Lower bounds for omega(A) and their weighted forms.
std::vector<CheckResult> check_lower_bounds(const ComplexMatrix& a, const WeightPair& p, double t,
                                            const CheckContext& ctx);

/// Unweighted lower bounds only.
std::vector<CheckResult> check_classical_lower_bounds(const ComplexMatrix& a,
                                                      const CheckContext& ctx);

/// Buzano, power and mixed Schwarz inequalities on `trials` random draws of
/// dimension dim, from Rng(seed, trial).
std::vector<CheckResult> check_vector_inequalities(int dim, int trials, std::uint64_t seed,
                                             const CheckContext& ctx);

/// Upper bounds for omega_t^2, plus the specialised forms when p is
/// (1, 1-2t) (read through T = A*) or (0, 1).
std::vector<CheckResult> check_upper_bounds(const ComplexMatrix& a, const WeightPair& p, double t,
                                            const CheckContext& ctx);

/// alpha(t) omega(A) <= omega_t <= lambda(t) omega(A) and the squared forms.
std::vector<CheckResult> check_index_bounds(const ComplexMatrix& a, const WeightPair& p, double t,
                                            const CheckContext& ctx);

struct SuiteConfig {
  int trials = 200;
  int dim_lo = 2;
  int dim_hi = 8;
  std::vector<std::string> families = default_families();
  double tol_rel = 1e-7;
  std::uint64_t rng_seed = 42;
  int t_samples = 5;
  SweepConfig sweep = default_sweep();
  // Costlier groups run on every n-th trial only; 0 disables them.
  int integral_every = 10;
  int derivative_every = 10;
  int index_every = 50;
  int index_samples = 200;
  int index_refine_steps = 8;
  // When set, every trial uses this operator as A (dims are ignored); the
  // companions B and E are still drawn from the seed.
  std::optional<ComplexMatrix> matrix;

  void validate() const;

  static std::vector<std::string> default_families();
  static SweepConfig default_sweep();
};

struct SuiteReport {
  std::vector<CheckResult> results;  // sorted by check_id, then trial
  int total = 0;
  int passed = 0;
  int failed = 0;  // asserted checks that failed
  int report_only = 0;
  std::vector<std::string> check_ids;  // distinct, sorted

  bool ok() const noexcept { return failed == 0; }
};

/// Runs every group over the configured trials. Trial i draws its matrices,
/// dimension and t-samples from cfg.rng_seed and i alone, so the report is a
/// pure function of the configuration.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Low-discrepancy point in [0, 1) for sample k (golden-ratio sequence).
double lds_point(std::uint64_t k, double offset = 0.0) noexcept;

}  // namespace wnr

#endif
