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

#ifndef WNR_CHECK_HPP
#define WNR_CHECK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wnr/fov.hpp"

namespace wnr {

enum class CheckMode { AssertLe, AssertEq, ReportOnly };

const char* to_string(CheckMode m) noexcept;

/// One instantiated statement. `statement` holds its formula; every
/// check_id maps to exactly one.
struct CheckResult {
  std::string check_id;
  std::string statement;
  std::optional<double> t;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  CheckMode mode = CheckMode::ReportOnly;
  bool pass = true;
  double tol = 0.0;
  std::string input_digest;
  std::string note;
  int trial = -1;  // ordering key, also part of input_digest
};

/// A computed number together with the width of the bracket known to
/// contain the exact value. Arithmetic propagates widths to first order
/// plus the product of widths, which keeps them conservative.
struct Est {
  double v = 0.0;
  double w = 0.0;
};

inline Est exact(double v) { return {v, 0.0}; }
inline Est cert(const CertifiedValue& c) { return {c.value, c.width()}; }
Est operator+(Est a, Est b);
Est operator-(Est a, Est b);
Est operator*(Est a, Est b);
Est operator*(double s, Est a);
Est abs(Est a);
Est square(Est a);

struct Statement {
  std::string_view id;
  std::string_view text;
};

/// Every statement the harness knows how to check.
const std::vector<Statement>& statement_registry();
/// Throws BadParameter for unknown ids.
const Statement& statement(std::string_view id);

/// Memoises field_of_values on exact matrix contents, so an operator that
/// several statements share is swept once. Not thread-safe.
class FovCache {
 public:
  const FovSummary& get(const ComplexMatrix& a, const SweepConfig& cfg);
  void clear() { map_.clear(); }
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::unordered_map<std::string, FovSummary> map_;
};

struct CheckContext {
  double tol_rel = 1e-7;
  SweepConfig sweep;
  std::string digest;
  int trial = -1;
  FovCache* cache = nullptr;  // optional
};

/// field_of_values(a, ctx.sweep), through ctx.cache when one is attached.
FovSummary summary(const ComplexMatrix& a, const CheckContext& ctx);

/// Builds a result: tol = tol_rel * max(1, |lhs|, |rhs|) + lhs.w + rhs.w + extra_tol.
CheckResult make_check(std::string_view id, std::optional<double> t, Est lhs, Est rhs,
                       CheckMode mode, const CheckContext& ctx, std::string note = {},
                       double extra_tol = 0.0);

/// JSON array of CheckResult objects, one per line.
std::string results_to_json(const std::vector<CheckResult>& results);
/// Header plus one row per result.
std::string results_to_csv(const std::vector<CheckResult>& results);

}  // namespace wnr

#endif
