// Copyright 2026 The qrstates Authors.
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

#ifndef QRS_ERROR_HPP
#define QRS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrs {

enum class Errc {
  DeviceUnavailable,
  ShortRead,
  InvalidRange,
  InvalidParameter,
  EmptyList,
  TooManyEdges,
  NotSquare,
  NotHermitian,
  NotPsd,
  NoConvergence,
  RankDeficient,
  DimensionMismatch,
  NotDistribution,
  Degenerate,
  SingularAncilla,
  InvariantViolation,
  Format,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

  // True for failures of the entropy backend itself (unreachable or exhausted).
  bool is_backend_failure() const noexcept {
    return code_ == Errc::DeviceUnavailable || code_ == Errc::ShortRead;
  }

 private:
  Errc code_;
};

}  // namespace qrs

#endif  // QRS_ERROR_HPP
