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

#ifndef WNR_WEIGHTS_HPP
#define WNR_WEIGHTS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wnr {

enum class WeightKind { Constant, Affine, Polynomial, SinQuarter, CosQuarter, Mixed };

/// Real continuous weight on [0, T] of the form
///   sum_k c_k t^k + a sin(t/4) + b cos(t/4).
/// Every family the library knows (constants, affine maps, polynomials and
/// the quarter-angle sine/cosine) is a special case, and the form is closed
/// under sums, scaling and differentiation.
class WeightFn {
 public:
  WeightFn() = default;

  static WeightFn constant(double c, double interval = 1.0);
  static WeightFn affine(double a, double b, double interval = 1.0);
  static WeightFn polynomial(std::vector<double> coeffs, double interval = 1.0);
  static WeightFn sin_quarter(double interval = 1.0, double amplitude = 1.0);
  static WeightFn cos_quarter(double interval = 1.0, double amplitude = 1.0);

  /// Throws OutOfInterval unless t lies in [0, T] (up to 1e-12 T).
  double operator()(double t) const;
  double eval_unchecked(double t) const;

  double interval() const noexcept { return interval_; }
  WeightKind kind() const noexcept;
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  double sin_amplitude() const noexcept { return sin_amp_; }
  double cos_amplitude() const noexcept { return cos_amp_; }

  WeightFn derivative() const;
  /// sup |f'| over the interval: |b| for affine, 1/4 for sinq/cosq.
  double lipschitz() const;
  /// Hoelder exponent the Lipschitz constant refers to (all kinds are C^1).
  double holder_exponent() const noexcept { return 1.0; }
  bool is_zero() const noexcept;

  WeightFn with_interval(double interval) const;

  friend WeightFn operator+(const WeightFn& a, const WeightFn& b);
  friend WeightFn operator*(double s, const WeightFn& f);
  friend WeightFn operator-(const WeightFn& f) { return -1.0 * f; }
  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  std::vector<double> coeffs_{0.0};
  double sin_amp_ = 0.0;
  double cos_amp_ = 0.0;
  double interval_ = 1.0;
};

/// (phi, psi) on a shared interval, with a label used in reports.
struct WeightPair {
  WeightFn phi;
  WeightFn psi;
  std::string label;

  WeightPair() = default;
  /// Throws BadInterval if the two intervals differ.
  WeightPair(WeightFn phi, WeightFn psi, std::string label = {});

  double interval() const noexcept { return phi.interval(); }
  void check_t(double t) const;
};

/// classical, nayak, convex:<nu>, trig. Throws UnknownFamily / BadParameter.
WeightPair builtin(std::string_view name);

/// Families swept by the verification suite.
std::vector<std::string> builtin_family_names();

struct ComboValues {
  double sum;     // |phi + psi|(t)
  double diff;    // |phi - psi|(t)
  double alpha;   // min(sum, diff)
  double lambda;  // max(sum, diff)
  double absphi;
  double abspsi;
};

ComboValues combo_values(const WeightPair& p, double t);

inline constexpr int kQuadratureNodes = 2049;

/// Composite Simpson on a uniform grid (nodes must be odd and >= 3).
double integrate(const std::function<double(double)>& f, double a, double b,
                 int nodes = kQuadratureNodes);

/// phi_n = phi + delta_phi / n, psi_n = psi + delta_psi / n, with the fixed
/// affine perturbation delta_phi = (1 + t/T)/2, delta_psi = (1 - t/T)/2.
WeightPair perturbed(const WeightPair& p, double n);
/// |delta_phi|(t) + |delta_psi|(t) of the perturbation used by perturbed().
double perturbation_size(const WeightPair& p, double t);

WeightPair sum(const WeightPair& a, const WeightPair& b);
WeightPair swapped(const WeightPair& p);
WeightPair negate_psi(const WeightPair& p);

/// Grammar: classical | nayak | convex:<nu> | trig | const:<a>,<b> |
/// poly:[c0,c1,...]|[d0,d1,...], each optionally followed by @T=<real>.
WeightPair parse_weights(std::string_view spec);
/// Canonical spec string; parse_weights(format_weights(p)) reproduces p for
/// every pair that came from parse_weights or builtin.
std::string format_weights(const WeightPair& p);

}  // namespace wnr

#endif
