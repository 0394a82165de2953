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

#include "qrs/error.hpp"

namespace qrs {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DeviceUnavailable: return "DeviceUnavailable";
    case Errc::ShortRead: return "ShortRead";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::EmptyList: return "EmptyList";
    case Errc::TooManyEdges: return "TooManyEdges";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPsd: return "NotPsd";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotDistribution: return "NotDistribution";
    case Errc::Degenerate: return "Degenerate";
    case Errc::SingularAncilla: return "SingularAncilla";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::Format: return "Format";
  }
  return "Unknown";
}

}  // namespace qrs
