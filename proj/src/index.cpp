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

#include "wnr/index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "wnr/error.hpp"
#include "wnr/gallery.hpp"
#include "wnr/rng.hpp"
#include "wnr/weighted.hpp"

namespace wnr {

IndexBounds index_bounds(const WeightPair& p, double t) {
  const auto c = combo_values(p, t);
  return {0.5 * c.alpha, 0.5 * c.lambda};
}

namespace {

constexpr int kDescentStarts = 3;
constexpr double kInitialStep = 0.25;

ComplexMatrix normalized(ComplexMatrix a) {
  const double s = operator_norm(a);
  if (s > 0.0) a *= Complex(1.0 / s);
  return a;
}

ComplexMatrix candidate(std::size_t n, std::uint64_t seed, std::uint64_t k) {
  Rng rng(seed, k);
  const auto sub = rng.next_u64();
  switch (k % 8) {
    case 4: return sample({Ensemble::Nilpotent2, int(n), sub});
    case 5: return sample({Ensemble::Antidiagonal, int(n), sub});
    case 6: return sample({Ensemble::Hermitian, int(n), sub});
    case 7: return Complex(0.0, 1.0) * sample({Ensemble::Hermitian, int(n), sub});
    default: return sample({Ensemble::Ginibre, int(n), sub});
  }
}

struct Scored {
  double value;
  std::size_t index;
};

}  // namespace

IndexEstimate estimate_index(int dim, const WeightPair& p, double t, int samples,
                             int refine_steps, const SweepConfig& cfg) {
  if (dim < 2) throw Error(ErrorKind::BadDimension, "index estimate needs dim >= 2");
  if (samples < 1) throw Error(ErrorKind::BadParameter, "index estimate needs samples >= 1");
  if (refine_steps < 0) throw Error(ErrorKind::BadParameter, "refine_steps must be >= 0");
  cfg.validate();
  p.check_t(t);
  const auto n = static_cast<std::size_t>(dim);
  const double f = p.phi(t);
  const double g = p.psi(t);

  // Screening runs on a coarse grid; only the final witness is certified
  // with the caller's configuration.
  SweepConfig coarse = cfg;
  coarse.grid_size = std::min(cfg.grid_size, 32);
  coarse.max_extra_evals = 8;
  auto objective = [&](const ComplexMatrix& a) {
    const auto b = Complex(f) * a + Complex(g) * adjoint(a);
    return numerical_radius(b, coarse).value / operator_norm(a);
  };

  const auto m = static_cast<std::size_t>(samples);
  std::vector<double> score(m + 1);
  detail::parallel_for(m + 1, [&](std::size_t k) {
    const auto a = k == m ? jordan_witness(dim) : candidate(n, cfg.rng_seed, k);
    const double s = operator_norm(a);
    score[k] = s > 0.0 ? objective(a) : std::numeric_limits<double>::infinity();
  }, 256);

  std::vector<Scored> order(m + 1);
  for (std::size_t k = 0; k <= m; ++k) order[k] = {score[k], k};
  std::stable_sort(order.begin(), order.end(),
                   [](const Scored& a, const Scored& b) { return a.value < b.value; });

  auto matrix_of = [&](std::size_t k) {
    return normalized(k == m ? jordan_witness(dim) : candidate(n, cfg.rng_seed, k));
  };

  ComplexMatrix best = matrix_of(order[0].index);
  double best_value = order[0].value;
  const std::size_t starts = std::min<std::size_t>(kDescentStarts, order.size());
  for (std::size_t s = 0; s < starts; ++s) {
    ComplexMatrix a = matrix_of(order[s].index);
    double value = order[s].value;
    double step = kInitialStep;
    for (int round = 0; round < refine_steps; ++round) {
      bool improved = false;
      for (std::size_t e = 0; e < n * n; ++e) {
        for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
          ComplexMatrix trial = a;
          trial(e / n, e % n) += step * dir;
          const double nrm = operator_norm(trial);
          if (!(nrm > 0.0)) continue;
          const double v = objective(trial);
          if (v < value) {
            a = normalized(std::move(trial));
            value = v;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value < best_value) {
      best_value = value;
      best = a;
    }
  }

  IndexEstimate out;
  out.witness = best;
  out.radius = numerical_radius(Complex(f) * best + Complex(g) * adjoint(best), cfg);
  out.value = out.radius.value;
  const auto bounds = index_bounds(p, t);
  out.lower = bounds.lower;
  out.upper = bounds.upper;
  out.samples = samples;
  out.dim = dim;
  out.seed = cfg.rng_seed;
  return out;
}

std::vector<CheckResult> check_index_lipschitz(const WeightPair& p1, const WeightPair& p2,
                                               double t, int dim, int samples,
                                               int refine_steps, const CheckContext& ctx) {
  if (p1.interval() != p2.interval())
    throw Error(ErrorKind::BadInterval, "weight pairs must share their interval");
  std::vector<CheckResult> out;
  const auto e1 = estimate_index(dim, p1, t, samples, refine_steps, ctx.sweep);
  const auto e2 = estimate_index(dim, p2, t, samples, refine_steps, ctx.sweep);
  const double dist = std::abs(p1.phi(t) - p2.phi(t)) + std::abs(p1.psi(t) - p2.psi(t));
  out.push_back(make_check("index.weight_lipschitz", t, exact(std::abs(e1.value - e2.value)),
                           exact(dist), CheckMode::AssertLe, ctx,
                           p1.label + " vs " + p2.label, 2.0 * kIndexEstimationTol));
  for (const int k : {1, 2, 4, 8, 16}) {
    const auto pk = perturbed(p1, k);
    const auto ek = estimate_index(dim, pk, t, samples, refine_steps, ctx.sweep);
    out.push_back(make_check("index.weight_convergence", t,
                             exact(std::abs(ek.value - e1.value)),
                             exact(perturbation_size(p1, t) / k), CheckMode::AssertLe, ctx,
                             p1.label + " n=" + std::to_string(k),
                             2.0 * kIndexEstimationTol));
  }
  return out;
}

}  // namespace wnr
