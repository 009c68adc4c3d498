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

#include "wnr/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "wnr/error.hpp"
#include "wnr/rng.hpp"

namespace wnr {

ComplexMatrix volterra(int n) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "volterra needs n >= 2");
  const auto m = static_cast<std::size_t>(n);
  const double h = 1.0 / n;
  ComplexMatrix v(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) v(i, j) = h;
    v(i, i) = 0.5 * h;
  }
  return v;
}

ComplexMatrix skew_volterra(int n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::BadDimension, "skew_volterra needs even n >= 2");
  const auto m = static_cast<std::size_t>(n);
  const double h = 2.0 / n;
  ComplexMatrix a(m);
  for (std::size_t i = m / 2; i < m; ++i) {
    const double x = -1.0 + (static_cast<double>(i) + 0.5) * h;
    for (std::size_t j = 0; j < m; ++j) {
      const double lo = -1.0 + static_cast<double>(j) * h;
      const double overlap = std::min(lo + h, x) - std::max(lo, -x);
      if (overlap > 0.0) a(i, j) = overlap;
    }
    const std::size_t mirror = m - 1 - i;
    for (std::size_t j = 0; j < m; ++j) a(mirror, j) = -a(i, j);
  }
  return a;
}

ComplexMatrix example_2x2() { return ComplexMatrix{{0.0, 1.0}, {3.0, 0.0}}; }

ComplexMatrix jordan_witness(int n) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "jordan witness needs n >= 2");
  ComplexMatrix w(static_cast<std::size_t>(n));
  w(0, 1) = 1.0;
  return w;
}

namespace {

ComplexMatrix ginibre(std::size_t n, Rng& rng) {
  std::vector<Complex> e(n * n);
  for (auto& z : e) z = rng.complex_normal();
  return ComplexMatrix(n, std::move(e));
}

}  // namespace

ComplexMatrix sample(const EnsembleSpec& spec) {
  if (spec.dim < 1) throw Error(ErrorKind::BadDimension, "ensemble dim must be >= 1");
  const auto n = static_cast<std::size_t>(spec.dim);
  Rng rng(spec.rng_seed, static_cast<std::uint64_t>(spec.kind) * 1000003u + n);
  switch (spec.kind) {
    case Ensemble::Ginibre:
      return ginibre(n, rng);
    case Ensemble::Hermitian: {
      const auto g = ginibre(n, rng);
      return re_part(g);
    }
    case Ensemble::Unitary: {
      const auto g = ginibre(n, rng);
      std::vector<Vector> cols(n, Vector(n));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) cols[j][i] = g(i, j);
        // Two passes of modified Gram-Schmidt keep orthogonality at eps.
        for (int pass = 0; pass < 2; ++pass)
          for (std::size_t k = 0; k < j; ++k) {
            const Complex c = inner(cols[j], cols[k]);
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= c * cols[k][i];
          }
        const double s = norm(cols[j]);
        for (auto& z : cols[j]) z /= s;
      }
      ComplexMatrix u(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
      return u;
    }
    case Ensemble::Nilpotent2: {
      ComplexMatrix a(n);
      if (n == 1) return a;
      const auto split = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n) - 1));
      Vector u(n), v(n);
      for (std::size_t i = 0; i < split; ++i) u[i] = rng.complex_normal();
      for (std::size_t j = split; j < n; ++j) v[j] = rng.complex_normal();
      for (std::size_t i = 0; i < split; ++i)
        for (std::size_t j = split; j < n; ++j) a(i, j) = u[i] * std::conj(v[j]);
      return a;
    }
    case Ensemble::Antidiagonal: {
      if (n < 2) throw Error(ErrorKind::BadDimension, "antidiagonal ensemble needs dim >= 2");
      ComplexMatrix a(n);
      a(0, 1) = rng.complex_normal();
      a(1, 0) = rng.complex_normal();
      return a;
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown ensemble");
}

Ensemble parse_ensemble(std::string_view name) {
  if (name == "ginibre") return Ensemble::Ginibre;
  if (name == "hermitian") return Ensemble::Hermitian;
  if (name == "unitary") return Ensemble::Unitary;
  if (name == "nilpotent2") return Ensemble::Nilpotent2;
  if (name == "antidiagonal") return Ensemble::Antidiagonal;
  throw Error(ErrorKind::UnknownFamily, "unknown ensemble '" + std::string(name) + "'");
}

const char* to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::Ginibre: return "ginibre";
    case Ensemble::Hermitian: return "hermitian";
    case Ensemble::Unitary: return "unitary";
    case Ensemble::Nilpotent2: return "nilpotent2";
    case Ensemble::Antidiagonal: return "antidiagonal";
  }
  return "?";
}

ComplexMatrix gallery_matrix(std::string_view name, std::uint64_t seed) {
  if (name == "2x2") return example_2x2();
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  int n = 2;
  if (colon != std::string_view::npos) {
    const auto arg = name.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc{} || ptr != arg.data() + arg.size())
      throw Error(ErrorKind::BadParameter, "bad dimension in gallery name '" + std::string(name) + "'");
  } else if (head == "volterra" || head == "skew_volterra") {
    throw Error(ErrorKind::BadParameter, "gallery name '" + std::string(name) + "' needs :N");
  }
  if (head == "volterra") return volterra(n);
  if (head == "skew_volterra" || head == "skew-volterra") return skew_volterra(n);
  if (head == "identity") {
    if (n < 1) throw Error(ErrorKind::BadDimension, "identity needs n >= 1");
    return ComplexMatrix::identity(static_cast<std::size_t>(n));
  }
  if (head == "jordan") return jordan_witness(n);
  return sample({parse_ensemble(head), n, seed});
}

}  // namespace wnr
