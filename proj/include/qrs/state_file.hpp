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

#ifndef QRS_STATE_FILE_HPP
#define QRS_STATE_FILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qrs/entropy.hpp"
#include "qrs/qstates.hpp"

namespace qrs::cli {

using linalg::Index;

enum class GenKind {
  Ket,
  ProductKet,
  Unitary,
  LocalUnitary,
  StateHs,
  StateBures,
  StateInduced,
  ProductState,
  Dynamical,
  Ginibre,
  Simplex,
  Graph,
};

GenKind parse_gen_kind(std::string_view text);
std::string_view to_string(GenKind kind) noexcept;

struct GenRequest {
  GenKind kind = GenKind::Ket;
  std::vector<Index> dims;
  std::optional<states::MeasureSpec> measure;
  Index zero_eigenvalues = 0;  // dynamical only
};

// Throws Errc::InvalidParameter when dims/measure do not fit the kind.
void validate(const GenRequest& request);

struct StateMeta {
  std::string backend;
  std::optional<std::uint64_t> seed;
  std::string created;  // ISO-8601
};

// Draws one object and encodes it as a StateFile document:
//   {"kind", "dims", "measure", "data", "meta": {"backend", "seed", "created"}}
// Complex entries are [re, im]; matrices are arrays of rows.
nlohmann::json generate_state_document(entropy::EntropySource& src, const GenRequest& request,
                                       const StateMeta& meta);

// Checks shape against kind/dims and re-validates the type invariants of
// density, unitary and dynamical payloads. Throws Errc::Format or
// Errc::InvariantViolation.
void validate_state_document(const nlohmann::json& doc);

nlohmann::json encode_matrix(const linalg::ComplexMatrix& m);
linalg::ComplexMatrix decode_matrix(const nlohmann::json& data);
nlohmann::json encode_vector(const linalg::ComplexVector& v);
linalg::ComplexVector decode_vector(const nlohmann::json& data);

}  // namespace qrs::cli

#endif  // QRS_STATE_FILE_HPP
