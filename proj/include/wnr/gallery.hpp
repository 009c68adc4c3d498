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

#ifndef WNR_GALLERY_HPP
#define WNR_GALLERY_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "wnr/linalg.hpp"

namespace wnr {

/// Midpoint discretisation of (Vf)(x) = int_0^x f on L2(0, 1): 1/n below the
/// diagonal, 1/(2n) on it. n >= 2.
ComplexMatrix volterra(int n);

/// Midpoint discretisation of (Af)(x) = int_{-x}^{x} f on L2(-1, 1) with n
/// cells (n even, >= 2). Cells partially inside [-|x|, |x|] get weights
/// proportional to the overlap; rows with x < 0 are the negated mirror rows.
ComplexMatrix skew_volterra(int n);

/// [[0, 1], [3, 0]]
ComplexMatrix example_2x2();

/// [[0, 1], [0, 0]] padded with zeros to n x n.
ComplexMatrix jordan_witness(int n);

enum class Ensemble { Ginibre, Hermitian, Unitary, Nilpotent2, Antidiagonal };

struct EnsembleSpec {
  Ensemble kind = Ensemble::Ginibre;
  int dim = 2;
  std::uint64_t rng_seed = 0;
};

/// ginibre: iid complex standard normal entries; hermitian: (G + G*)/2;
/// unitary: Gram-Schmidt on a Ginibre sample; nilpotent2: u v* with u and v
/// supported on complementary index ranges, so N is strictly upper
/// triangular and N^2 = 0 exactly; antidiagonal: [[0, a], [b, 0]] padded
/// with zeros when dim > 2.
ComplexMatrix sample(const EnsembleSpec& spec);

Ensemble parse_ensemble(std::string_view name);
const char* to_string(Ensemble e) noexcept;

/// Named matrices: "2x2", "volterra:N", "skew_volterra:N", "identity:N",
/// "jordan:N", or an ensemble name with ":N" drawn from `seed`.
ComplexMatrix gallery_matrix(std::string_view name, std::uint64_t seed = 0);

}  // namespace wnr

#endif
