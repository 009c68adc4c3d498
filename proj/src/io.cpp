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

#include "wnr/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "wnr/error.hpp"

namespace wnr {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

namespace {

void escape_into(std::string& out, std::string_view s) {
  out.push_back('"');
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

}  // namespace

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (first_.empty()) return;
  if (!first_.back()) out_.push_back(',');
  if (first_.size() == 1 && is_array_.back()) out_.push_back('\n');
  first_.back() = false;
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  out_.push_back('{');
  first_.push_back(true);
  is_array_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_.push_back('}');
  first_.pop_back();
  is_array_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  out_.push_back('[');
  first_.push_back(true);
  is_array_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const bool outer = first_.size() == 1 && !first_.back();
  if (outer) out_.push_back('\n');
  out_.push_back(']');
  first_.pop_back();
  is_array_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  before_value();
  escape_into(out_, k);
  out_.push_back(':');
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  if (!std::isfinite(x)) return null();
  before_value();
  out_ += format_real(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t x) {
  before_value();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
  before_value();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  before_value();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  before_value();
  escape_into(out_, s);
  return *this;
}

JsonWriter& JsonWriter::null() {
  before_value();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::raw(std::string_view json) {
  before_value();
  out_ += json;
  return *this;
}

void write_matrix_json(JsonWriter& w, const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  w.begin_object().key("n").value(static_cast<std::int64_t>(n)).key("entries").begin_array();
  for (std::size_t i = 0; i < n; ++i) {
    w.begin_array();
    for (std::size_t j = 0; j < n; ++j)
      w.begin_array().value(a(i, j).real()).value(a(i, j).imag()).end_array();
    w.end_array();
  }
  w.end_array().end_object();
}

std::string matrix_to_json(const ComplexMatrix& a) {
  JsonWriter w;
  write_matrix_json(w, a);
  return w.str() + "\n";
}

ComplexMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw Error(ErrorKind::ParseError, "field 'n' must be an integer");
  const auto n = doc["n"].get<std::int64_t>();
  if (n <= 0) throw Error(ErrorKind::DimensionMismatch, "field 'n' must be positive");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw Error(ErrorKind::ParseError, "field 'entries' must be an array of rows");
  const auto& rows = doc["entries"];
  if (static_cast<std::int64_t>(rows.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "'entries' has " + std::to_string(rows.size()) +
                                                  " rows, expected " + std::to_string(n));
  const auto m = static_cast<std::size_t>(n);
  std::vector<Complex> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!row.is_array()) throw Error(ErrorKind::ParseError, where + " is not an array");
    if (row.size() != m)
      throw Error(ErrorKind::ParseError, where + " has " + std::to_string(row.size()) +
                                             " entries, expected " + std::to_string(m) +
                                             " (ragged rows)");
    for (std::size_t j = 0; j < m; ++j) {
      const auto& z = row[j];
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw Error(ErrorKind::ParseError, at + " must be [re, im]");
      e[i * m + j] = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  return ComplexMatrix(m, std::move(e));
}

ComplexMatrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return matrix_from_json(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + std::string(e.what()).substr(std::string(to_string(e.kind())).size() + 2));
  }
}

void write_matrix(const std::string& path, const ComplexMatrix& a) { write_text(path, matrix_to_json(a)); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot write '" + path + "'");
  out << text;
}

}  // namespace wnr
