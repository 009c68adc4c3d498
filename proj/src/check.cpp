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

#include "wnr/check.hpp"

#include <algorithm>
#include <cmath>

#include "wnr/error.hpp"
#include "wnr/io.hpp"

namespace wnr {

const char* to_string(CheckMode m) noexcept {
  switch (m) {
    case CheckMode::AssertLe: return "assert_le";
    case CheckMode::AssertEq: return "assert_eq";
    case CheckMode::ReportOnly: return "report_only";
  }
  return "?";
}

Est operator+(Est a, Est b) { return {a.v + b.v, a.w + b.w}; }
Est operator-(Est a, Est b) { return {a.v - b.v, a.w + b.w}; }
Est operator*(Est a, Est b) {
  return {a.v * b.v, std::abs(a.v) * b.w + std::abs(b.v) * a.w + a.w * b.w};
}
Est operator*(double s, Est a) { return {s * a.v, std::abs(s) * a.w}; }
Est abs(Est a) { return {std::abs(a.v), a.w}; }
Est square(Est a) { return a * a; }

const std::vector<Statement>& statement_registry() {
  static const std::vector<Statement> kAll = {
      // elementary properties of the weighted radius and Crawford number
      {"weighted.zero_phi_radius", "omega_t(0,psi;A) = |psi(t)| omega(A)"},
      {"weighted.zero_phi_crawford", "c_t(0,psi;A) = |psi(t)| c(A)"},
      {"weighted.zero_psi_radius", "omega_t(phi,0;A) = |phi(t)| omega(A)"},
      {"weighted.zero_psi_crawford", "c_t(phi,0;A) = |phi(t)| c(A)"},
      {"weighted.equal_unit_radius", "omega_t(1,1;A) = 2 ||Re A||"},
      {"weighted.equal_unit_crawford", "c_t(1,1;A) = 2 c(Re A)"},
      {"weighted.equal_unit_crawford_printed", "c_t(1,1;A) = 2 ||Re A||"},
      {"weighted.opposite_unit_radius", "omega_t(1,-1;A) = 2 ||Im A||"},
      {"weighted.opposite_unit_crawford", "c_t(1,-1;A) = 2 c(Im A)"},
      {"weighted.opposite_unit_crawford_printed", "c_t(1,-1;A) = 2 ||Im A||"},
      {"weighted.i_twist", "omega_t(phi,psi;iA) = omega_t(phi,-psi;A)"},
      {"weighted.norm_sandwich_lower", "||A||_t / 2 <= omega_t(phi,psi;A)"},
      {"weighted.norm_sandwich_upper", "omega_t(phi,psi;A) <= ||A||_t"},
      {"weighted.radius_abs_bound", "omega_t(phi,psi;A) <= (|phi|+|psi|)(t) omega(A)"},
      {"weighted.crawford_abs_bound", "||phi|-|psi||(t) c(A) <= c_t(phi,psi;A)"},
      {"weighted.equal_phi", "omega_t(phi,phi;A) = 2 |phi(t)| ||Re A||"},
      {"weighted.equal_psi", "omega_t(psi,psi;A) = 2 |psi(t)| ||Re A||"},
      {"weighted.hermitian_closed_form", "H = H*: omega_t(phi,psi;H) = |phi+psi|(t) ||H||"},
      {"weighted.adjoint_swap", "omega_t(phi,psi;A) = omega_t(psi,phi;A*)"},
      {"weighted.hermitian_swap", "H = H*: omega_t(phi,psi;H) = omega_t(psi,phi;H)"},
      {"weighted.triangle_radius", "omega_t(A+B) <= omega_t(A) + omega_t(B)"},
      {"weighted.triangle_crawford", "c_t(A+B) <= omega_t(A) + c_t(B)"},
      {"weighted.product_radius", "omega_t(phi,psi;AB) <= (|phi|+|psi|)(t) omega(AB)"},
      {"weighted.product_crawford", "c_t(phi,psi;AB) <= |phi|(t) c(AB) + |psi|(t) omega(AB)"},
      {"weighted.product_norm_square",
       "||phi AB + psi (AB)*||^2 <= (phi^2+psi^2)(t) ||AB||^2 + |phi psi|(t) "
       "(omega((AB)^2) + omega((B*A*)^2))"},
      {"weighted.weight_additivity",
       "omega_t(phi1+phi2,psi1+psi2;A) <= omega_t(phi1,psi1;A) + omega_t(phi2,psi2;A)"},
      {"weighted.crawford_alpha_lower", "min(|phi+psi|,|phi-psi|)(t) m(A) <= c_t(phi,psi;A)"},
      // differences
      {"weighted.reverse_triangle_radius", "|omega_t(A) - omega_t(B)| <= omega_t(A-B)"},
      {"weighted.reverse_triangle_crawford", "|c_t(A) - c_t(B)| <= omega_t(A-B)"},
      {"weighted.reverse_triangle_crawford_printed", "|c_t(A) - c_t(B)| <= c_t(A-B)"},
      // dependence on t, on the weights and on the operator
      {"smooth.continuity_radius",
       "|omega_t - omega_s| <= (|phi(t)-phi(s)| + |psi(t)-psi(s)|) ||A||"},
      {"smooth.continuity_crawford", "|c_t - c_s| <= (|phi(t)-phi(s)| + |psi(t)-psi(s)|) ||A||"},
      {"smooth.holder_radius", "|omega_t - omega_s| <= 2 K ||A|| |t-s|^a"},
      {"smooth.holder_crawford", "|c_t - c_s| <= 2 K ||A|| |t-s|^a"},
      {"smooth.weight_sequence_radius",
       "|omega_t(phi_n,psi_n;A) - omega_t(phi,psi;A)| <= (|phi_n-phi| + |psi_n-psi|)(t) ||A||"},
      {"smooth.weight_sequence_crawford",
       "|c_t(phi_n,psi_n;A) - c_t(phi,psi;A)| <= (|phi_n-phi| + |psi_n-psi|)(t) ||A||"},
      {"smooth.operator_sequence_radius", "|omega_t(A_k) - omega_t(A)| <= ||A_k - A||_t"},
      {"smooth.operator_sequence_crawford", "|c_t(A_k) - c_t(A)| <= ||A_k - A||_t"},
      {"smooth.derivative_radius", "d/dt omega_t(phi,0;A) = omega_t(phi',0;A), phi >= 0"},
      {"smooth.derivative_crawford", "d/dt c_t(phi,0;A) = c_t(phi',0;A), phi >= 0"},
      // integral bounds
      {"integral.real_part", "||Re A|| <= (int |phi+psi|)^-1 int omega_t"},
      {"integral.imag_part", "||Im A|| <= (int |phi-psi|)^-1 int omega_t"},
      {"integral.norm", "||A|| <= ((int |phi+psi|)^-1 + (int |phi-psi|)^-1) int omega_t"},
      // direct sums
      {"direct_sum.radius", "omega_t(A1 (+) A2) = max(omega_t(A1), omega_t(A2))"},
      {"direct_sum.crawford_printed",
       "Re A_n >= 0: c_t(A1 (+) A2) = min(omega_t(A1), omega_t(A2))"},
      // lower bounds
      {"classical.lower_norm", "omega(A) >= ||A||/2 + | ||Re A|| - ||Im A|| | / 2"},
      {"classical.lower_kittaneh",
       "omega^2(A) >= ||A*A+AA*||/4 + | ||Re A||^2 - ||Im A||^2 | / 2"},
      {"classical.lower_crawford",
       "omega^2(A) >= ||A*A+AA*||/4 + (c^2(Re A) + c^2(Im A))/2 + "
       "| (||Re A||^2 - ||Im A||^2)/2 + (c^2(Im A) - c^2(Re A))/2 |"},
      {"classical.lower_fourth",
       "omega^4(A) >= ||(A*A+AA*)^2 + 4 Re^2(A^2)||/16 + | ||Re A||^4 - ||Im A||^4 | / 2"},
      {"weighted.lower_norm", "omega_t >= alpha(t) (||A||/2 + | ||Re A|| - ||Im A|| | / 2)"},
      {"weighted.lower_kittaneh",
       "omega_t^2 >= alpha(t)^2 (||A*A+AA*||/4 + | ||Re A||^2 - ||Im A||^2 | / 2)"},
      {"weighted.lower_crawford",
       "omega_t^2 >= alpha(t)^2 (||A*A+AA*||/4 + (c^2(Re A) + c^2(Im A))/2 + "
       "| (||Re A||^2 - ||Im A||^2)/2 + (c^2(Im A) - c^2(Re A))/2 |)"},
      {"weighted.lower_fourth",
       "omega_t^4 >= alpha(t)^4 (||(A*A+AA*)^2 + 4 Re^2(A^2)||/16 + "
       "| ||Re A||^4 - ||Im A||^4 | / 2)"},
      // vector inequalities
      {"vector.buzano", "|<x,e><e,y>| <= (|<x,y>| + ||x|| ||y||)/2, ||e|| = 1"},
      {"vector.power", "T >= 0, r >= 1, ||x|| = 1: <Tx,x>^r <= <T^r x,x>"},
      {"vector.mixed_schwarz", "|<Tx,y>|^2 <= <|T|^(2a) x,x> <|T*|^(2(1-a)) y,y>"},
      // upper bounds
      {"weighted.upper_buzano",
       "omega_t^2 <= phi^2 omega^2(A) + |phi psi| omega(A^2) + (|phi|+|psi|)|psi|/2 "
       "||A*A+AA*||"},
      {"weighted.upper_mixed_schwarz",
       "omega_t^2 <= (phi^2+psi^2)/2 ||A*A+AA*|| + |phi psi| omega(A^2 + (A*)^2)"},
      {"weighted.upper_square_sum",
       "omega_t^2 <= (phi^2+psi^2) omega^2(A) + |phi psi| omega(A^2) + |phi psi|/2 "
       "||AA*+A*A||"},
      {"weighted.upper_norm", "omega_t^2 <= (|phi|+|psi|)^2 ||A||^2"},
      {"special.reversed_nayak_buzano",
       "phi = 1-2t, psi = 1, T = A*: omega_t^2(T) <= (1-2t)^2 omega^2(T) + (1-2t) omega(T^2) "
       "+ (1-t) ||T*T+TT*||"},
      {"special.reversed_nayak_mixed_schwarz",
       "phi = 1-2t, psi = 1: omega_t^2(T) <= (1-2t+2t^2) ||T*T+TT*|| + (1-2t) omega(T^2+(T*)^2)"},
      {"special.reversed_nayak_square_sum",
       "phi = 1-2t, psi = 1: omega_t^2(T) <= (2-4t+4t^2) omega^2(T) + (1-2t) omega(T^2) "
       "+ (1-2t)/2 ||T*T+TT*||"},
      {"special.adjoint_buzano", "phi = 0, psi = 1: omega^2(A) <= ||A*A+AA*||/2"},
      {"special.adjoint_mixed_schwarz", "phi = 0, psi = 1: omega^2(A) <= ||A*A+AA*||/2"},
      // weighted numerical index
      {"index.radius_alpha_lower", "alpha(t) omega(A) <= omega_t(phi,psi;A)"},
      {"index.radius_lambda_upper", "omega_t(phi,psi;A) <= lambda(t) omega(A)"},
      {"index.square_alpha_lower", "alpha(t)^2 ||A*A+AA*|| / 4 <= omega_t^2"},
      {"index.square_lambda_upper", "omega_t^2 <= lambda(t)^2 ||A*A+AA*|| / 2"},
      {"index.integral_alpha_lower", "int alpha dt omega(A) <= int omega_t dt"},
      {"index.integral_lambda_upper", "int omega_t dt <= int lambda dt omega(A)"},
      {"index.estimate_bracket", "alpha(t)/2 <= n_t(phi,psi;H) <= lambda(t)/2"},
      {"index.weight_lipschitz",
       "|n_t(phi1,psi1;H) - n_t(phi2,psi2;H)| <= |phi1-phi2|(t) + |psi1-psi2|(t)"},
      {"index.weight_convergence",
       "|n_t(phi_n,psi_n;H) - n_t(phi,psi;H)| <= |phi_n-phi|(t) + |psi_n-psi|(t) -> 0"},
  };
  return kAll;
}

const Statement& statement(std::string_view id) {
  for (const auto& s : statement_registry())
    if (s.id == id) return s;
  throw Error(ErrorKind::BadParameter, "unknown check id '" + std::string(id) + "'");
}

const FovSummary& FovCache::get(const ComplexMatrix& a, const SweepConfig& cfg) {
  const auto e = a.entries();
  std::string key(reinterpret_cast<const char*>(e.data()), e.size_bytes());
  auto it = map_.find(key);
  if (it == map_.end()) it = map_.emplace(std::move(key), field_of_values(a, cfg)).first;
  return it->second;
}

FovSummary summary(const ComplexMatrix& a, const CheckContext& ctx) {
  if (ctx.cache) return ctx.cache->get(a, ctx.sweep);
  return field_of_values(a, ctx.sweep);
}

CheckResult make_check(std::string_view id, std::optional<double> t, Est lhs, Est rhs,
                       CheckMode mode, const CheckContext& ctx, std::string note,
                       double extra_tol) {
  const auto& s = statement(id);
  CheckResult r;
  r.check_id = std::string(s.id);
  r.statement = std::string(s.text);
  r.t = t;
  r.lhs = lhs.v;
  r.rhs = rhs.v;
  r.slack = rhs.v - lhs.v;
  r.mode = mode;
  const double scale = std::max({1.0, std::abs(lhs.v), std::abs(rhs.v)});
  r.tol = ctx.tol_rel * scale + lhs.w + rhs.w + extra_tol;
  switch (mode) {
    case CheckMode::AssertLe: r.pass = lhs.v <= rhs.v + r.tol; break;
    case CheckMode::AssertEq: r.pass = std::abs(lhs.v - rhs.v) <= r.tol; break;
    case CheckMode::ReportOnly: r.pass = true; break;
  }
  if (!std::isfinite(lhs.v) || !std::isfinite(rhs.v)) r.pass = mode == CheckMode::ReportOnly;
  r.input_digest = ctx.digest;
  r.note = std::move(note);
  r.trial = ctx.trial;
  return r;
}

std::string results_to_json(const std::vector<CheckResult>& results) {
  JsonWriter w;
  w.begin_array();
  for (const auto& r : results) {
    w.begin_object();
    w.key("check_id").value(r.check_id);
    w.key("statement").value(r.statement);
    w.key("t");
    if (r.t) w.value(*r.t); else w.null();
    w.key("lhs").value(r.lhs);
    w.key("rhs").value(r.rhs);
    w.key("slack").value(r.slack);
    w.key("mode").value(to_string(r.mode));
    w.key("pass").value(r.pass);
    w.key("tol").value(r.tol);
    w.key("input_digest").value(r.input_digest);
    w.key("note").value(r.note);
    w.end_object();
  }
  w.end_array();
  return w.str() + "\n";
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string results_to_csv(const std::vector<CheckResult>& results) {
  std::string out = "check_id,statement,t,lhs,rhs,slack,mode,pass,tol,input_digest,note\n";
  for (const auto& r : results) {
    out += csv_field(r.check_id) + ',' + csv_field(r.statement) + ',';
    if (r.t) out += format_real(*r.t);
    out += ',' + format_real(r.lhs) + ',' + format_real(r.rhs) + ',' + format_real(r.slack) + ',';
    out += std::string(to_string(r.mode)) + ',' + (r.pass ? "true" : "false") + ',';
    out += format_real(r.tol) + ',' + csv_field(r.input_digest) + ',' + csv_field(r.note) + '\n';
  }
  return out;
}

}  // namespace wnr
