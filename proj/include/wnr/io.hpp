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

#ifndef WNR_IO_HPP
#define WNR_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wnr/linalg.hpp"

namespace wnr {

/// 17 significant digits, '.' separator, independent of the locale.
/// Non-finite values print as "nan", "inf" or "-inf".
std::string format_real(double x);

/// Minimal streaming JSON emitter. Numbers go through format_real; NaN and
/// infinities become null. Elements of the outermost array are placed on
/// their own lines.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(std::int64_t x);
  JsonWriter& value(int x) { return value(static_cast<std::int64_t>(x)); }
  JsonWriter& value(std::uint64_t x);
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null();
  /// Splices an already serialised JSON value.
  JsonWriter& raw(std::string_view json);

  const std::string& str() const noexcept { return out_; }

 private:
  void before_value();

  std::string out_;
  std::vector<bool> first_;  // one entry per open container
  std::vector<bool> is_array_;
  bool after_key_ = false;
};

/// {"n": N, "entries": [[[re, im], ...], ...]}
std::string matrix_to_json(const ComplexMatrix& a);
void write_matrix_json(JsonWriter& w, const ComplexMatrix& a);
/// Throws ParseError (with the offending field) or DimensionMismatch.
ComplexMatrix matrix_from_json(std::string_view text);

ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& a);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace wnr

#endif
