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

#include "qrs/state_file.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "qrs/randkit.hpp"

namespace qrs::cli {
namespace {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using nlohmann::json;

constexpr std::array<std::pair<std::string_view, GenKind>, 12> kKindNames{{
    {"ket", GenKind::Ket},
    {"product-ket", GenKind::ProductKet},
    {"unitary", GenKind::Unitary},
    {"local-unitary", GenKind::LocalUnitary},
    {"state-hs", GenKind::StateHs},
    {"state-bures", GenKind::StateBures},
    {"state-induced", GenKind::StateInduced},
    {"product-state", GenKind::ProductState},
    {"dynamical", GenKind::Dynamical},
    {"ginibre", GenKind::Ginibre},
    {"simplex", GenKind::Simplex},
    {"graph", GenKind::Graph},
}};

[[noreturn]] void format_error(const std::string& what) { throw Error(Errc::Format, what); }

Index product(const std::vector<Index>& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

json encode_complex(Complex z) { return json::array({z.real(), z.imag()}); }

Complex decode_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    format_error("complex entry must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Index> decode_dims(const json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    format_error("missing dims");
  }
  std::vector<Index> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer()) format_error("dims must be integers");
    dims.push_back(d.get<Index>());
  }
  return dims;
}

void require_shape(const ComplexMatrix& m, Index rows, Index cols) {
  if (m.rows() != rows || m.cols() != cols) {
    format_error("data is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                 ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

GenKind parse_gen_kind(std::string_view text) {
  for (const auto& [name, kind] : kKindNames) {
    if (name == text) return kind;
  }
  throw Error(Errc::InvalidParameter, "unknown kind: " + std::string(text));
}

std::string_view to_string(GenKind kind) noexcept {
  for (const auto& [name, k] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

void validate(const GenRequest& r) {
  const auto need = [&](std::size_t lo, std::size_t hi) {
    if (r.dims.size() < lo || r.dims.size() > hi) {
      throw Error(Errc::InvalidParameter, std::string(to_string(r.kind)) + " takes " +
                                              std::to_string(lo) + (lo == hi ? "" : "+") +
                                              " dims, got " + std::to_string(r.dims.size()));
    }
  };
  constexpr std::size_t kMany = static_cast<std::size_t>(-1);
  switch (r.kind) {
    case GenKind::Ket:
    case GenKind::Unitary:
    case GenKind::StateHs:
    case GenKind::StateBures:
    case GenKind::Dynamical:
    case GenKind::Simplex:
      need(1, 1);
      break;
    case GenKind::StateInduced:
      need(1, 1);
      if (!r.measure || r.measure->kind != states::MeasureSpec::Kind::Induced) {
        throw Error(Errc::InvalidParameter, "state-induced needs --measure induced:<K>");
      }
      break;
    case GenKind::ProductKet:
    case GenKind::LocalUnitary:
    case GenKind::ProductState:
      need(1, kMany);
      break;
    case GenKind::Ginibre:
      need(1, 2);
      break;
    case GenKind::Graph:
      need(2, 2);
      if (r.dims[0] < 1 || r.dims[1] < 0) {
        throw Error(Errc::InvalidParameter, "graph needs --dims <vertices>,<edges>");
      }
      return;
  }
  for (Index d : r.dims) {
    if (d < 1) throw Error(Errc::InvalidParameter, "dims must be >= 1");
  }
  if (r.kind == GenKind::Dynamical &&
      (r.zero_eigenvalues < 0 || r.zero_eigenvalues > r.dims[0] * r.dims[0] - 1)) {
    throw Error(Errc::InvalidParameter, "--k must lie in [0, n^2 - 1]");
  }
}

json encode_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(encode_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix decode_matrix(const json& data) {
  if (!data.is_array() || data.empty() || !data[0].is_array()) format_error("matrix must be rows");
  const auto rows = static_cast<Index>(data.size());
  const auto cols = static_cast<Index>(data[0].size());
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) format_error("ragged matrix");
    for (Index j = 0; j < cols; ++j) m(i, j) = decode_complex(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

json encode_vector(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode_complex(v(i)));
  return out;
}

ComplexVector decode_vector(const json& data) {
  if (!data.is_array() || data.empty()) format_error("vector must be a non-empty array");
  ComplexVector v(static_cast<Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) v(static_cast<Index>(i)) = decode_complex(data[i]);
  return v;
}

json generate_state_document(entropy::EntropySource& src, const GenRequest& r,
                             const StateMeta& meta) {
  validate(r);
  json doc;
  doc["dims"] = r.dims;
  doc["measure"] = nullptr;
  const Index n = r.dims.front();
  switch (r.kind) {
    case GenKind::Ket:
      doc["kind"] = "ket";
      doc["data"] = encode_vector(states::random_ket(src, n).amplitudes());
      break;
    case GenKind::ProductKet:
      doc["kind"] = "ket";
      doc["data"] = encode_vector(states::random_product_ket(src, r.dims).amplitudes());
      break;
    case GenKind::Unitary:
      doc["kind"] = "unitary";
      doc["data"] = encode_matrix(states::random_unitary(src, n).matrix());
      break;
    case GenKind::LocalUnitary:
      doc["kind"] = "unitary";
      doc["data"] = encode_matrix(states::random_local_unitary(src, r.dims).matrix());
      break;
    case GenKind::StateHs:
      doc["kind"] = "density";
      doc["measure"] = "hs";
      doc["data"] = encode_matrix(states::random_state_hs(src, n).matrix());
      break;
    case GenKind::StateBures:
      doc["kind"] = "density";
      doc["measure"] = "bures";
      doc["data"] = encode_matrix(states::random_state_bures(src, n).matrix());
      break;
    case GenKind::StateInduced:
      doc["kind"] = "density";
      doc["measure"] = r.measure->label();
      doc["data"] = encode_matrix(states::random_state_induced(src, n, r.measure->ancilla).matrix());
      break;
    case GenKind::ProductState: {
      const auto mu = r.measure.value_or(states::MeasureSpec::hs());
      doc["kind"] = "density";
      doc["measure"] = mu.label();
      doc["data"] = encode_matrix(states::random_product_state(src, r.dims, mu).matrix());
      break;
    }
    case GenKind::Dynamical:
      doc["kind"] = "dynamical";
      doc["data"] = encode_matrix(states::random_dynamical_matrix(src, n, r.zero_eigenvalues).matrix());
      break;
    case GenKind::Ginibre: {
      const Index cols = r.dims.size() > 1 ? r.dims[1] : n;
      doc["kind"] = "ginibre";
      doc["dims"] = std::vector<Index>{n, cols};
      doc["data"] = encode_matrix(randkit::ginibre_matrix(src, n, cols));
      break;
    }
    case GenKind::Simplex:
      doc["kind"] = "simplex";
      doc["data"] = randkit::random_simplex(src, static_cast<std::size_t>(n)).weights();
      break;
    case GenKind::Graph: {
      doc["kind"] = "graph";
      json edges = json::array();
      for (const auto& e : randkit::random_graph(src, r.dims[0], r.dims[1])) {
        edges.push_back(json::array({e.first, e.second}));
      }
      doc["data"] = std::move(edges);
      break;
    }
  }
  doc["meta"] = {{"backend", meta.backend},
                 {"seed", meta.seed ? json(*meta.seed) : json(nullptr)},
                 {"created", meta.created}};
  return doc;
}

void validate_state_document(const json& doc) {
  if (!doc.is_object()) format_error("state file must be a JSON object");
  for (const char* key : {"kind", "dims", "measure", "data", "meta"}) {
    if (!doc.contains(key)) format_error(std::string("missing key: ") + key);
  }
  if (!doc["kind"].is_string()) format_error("kind must be a string");
  const auto& meta = doc["meta"];
  if (!meta.is_object() || !meta.contains("backend") || !meta.contains("seed") ||
      !meta.contains("created")) {
    format_error("meta must hold backend, seed and created");
  }
  const std::string kind = doc["kind"].get<std::string>();
  const auto dims = decode_dims(doc);
  const auto& data = doc["data"];

  if (kind == "ket") {
    const auto v = decode_vector(data);
    if (v.size() != product(dims)) format_error("ket length does not match dims");
    states::PureState{v};
  } else if (kind == "density") {
    auto m = decode_matrix(data);
    require_shape(m, product(dims), product(dims));
    states::DensityMatrix{std::move(m)};
  } else if (kind == "unitary") {
    auto m = decode_matrix(data);
    require_shape(m, product(dims), product(dims));
    states::UnitaryMatrix{std::move(m)};
  } else if (kind == "dynamical") {
    if (dims.size() != 1) format_error("dynamical dims must be [n]");
    auto m = decode_matrix(data);
    require_shape(m, dims[0] * dims[0], dims[0] * dims[0]);
    states::DynamicalMatrix(std::move(m), dims[0]);
  } else if (kind == "ginibre") {
    if (dims.size() != 2) format_error("ginibre dims must be [rows, cols]");
    const auto m = decode_matrix(data);
    require_shape(m, dims[0], dims[1]);
    if (!m.allFinite()) throw Error(Errc::InvariantViolation, "non-finite Ginibre entry");
  } else if (kind == "simplex") {
    if (dims.size() != 1 || !data.is_array() || static_cast<Index>(data.size()) != dims[0]) {
      format_error("simplex length does not match dims");
    }
    std::vector<double> w;
    for (const auto& x : data) {
      if (!x.is_number()) format_error("simplex weights must be numbers");
      w.push_back(x.get<double>());
    }
    randkit::SimplexPoint{std::move(w)};
  } else if (kind == "graph") {
    if (dims.size() != 2 || !data.is_array() || static_cast<Index>(data.size()) != dims[1]) {
      format_error("graph edge count does not match dims");
    }
    std::set<std::pair<Index, Index>> seen;
    for (const auto& e : data) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        format_error("edge must be [i, j]");
      }
      const auto i = e[0].get<Index>();
      const auto j = e[1].get<Index>();
      if (i < 1 || j > dims[0] || i >= j) {
        throw Error(Errc::InvariantViolation, "edge must satisfy 1 <= i < j <= v");
      }
      if (!seen.emplace(i, j).second) throw Error(Errc::InvariantViolation, "duplicate edge");
    }
  } else {
    format_error("unknown kind: " + kind);
  }
}

}  // namespace qrs::cli
