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

#ifndef WNR_ERROR_HPP
#define WNR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wnr {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NotUnitVector,
  DimensionMismatch,
  NonFinite,
  OutOfInterval,
  UnknownFamily,
  BadParameter,
  BadInterval,
  BadDimension,
  NotApplicable,
  DegenerateWeights,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True for failures of the numerics (as opposed to bad user input).
inline bool is_numerical(ErrorKind kind) noexcept {
  return kind == ErrorKind::NoConvergence || kind == ErrorKind::NotHermitian ||
         kind == ErrorKind::NonFinite;
}

}  // namespace wnr

#endif
