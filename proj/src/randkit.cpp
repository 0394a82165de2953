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

#include "qrs/randkit.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace qrs::randkit {

SimplexPoint::SimplexPoint(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(Errc::InvariantViolation, "empty simplex point");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw Error(Errc::InvariantViolation, "simplex weight outside [0,1]: " + std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(Errc::InvariantViolation, "simplex weights sum to " + std::to_string(sum));
  }
}

double normal_real(EntropySource& src, double mean, double stddev) {
  if (!(stddev > 0.0) || !std::isfinite(stddev) || !std::isfinite(mean)) {
    throw Error(Errc::InvalidParameter, "normal_real needs finite mean and stddev > 0");
  }
  double u1 = src.read_double_unit();
  while (u1 == 0.0) u1 = src.read_double_unit();
  const double u2 = src.read_double_unit();
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

RealArray normal_array(EntropySource& src, double mean, double stddev,
                       std::span<const std::size_t> dims) {
  if (dims.empty()) throw Error(Errc::InvalidParameter, "normal_array needs at least one dim");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw Error(Errc::InvalidParameter, "normal_array dims must be >= 1");
    total *= d;
  }
  RealArray out{std::vector<std::size_t>(dims.begin(), dims.end()), {}};
  out.values.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.values.push_back(normal_real(src, mean, stddev));
  return out;
}

SimplexPoint random_simplex(EntropySource& src, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidParameter, "simplex dimension must be >= 1");
  std::vector<double> w(n);
  for (auto& x : w) {
    double u = src.read_double_unit();
    while (u == 0.0) u = src.read_double_unit();
    x = -std::log(u);
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= sum;
  return SimplexPoint(std::move(w));
}

std::size_t random_index(EntropySource& src, std::size_t count) {
  if (count == 0) throw Error(Errc::EmptyList, "cannot choose from an empty list");
  return static_cast<std::size_t>(src.read_int_in(0, static_cast<std::int64_t>(count) - 1));
}

namespace {

// Number of edges whose first vertex (0-based) is below `row`.
std::int64_t edges_before_row(std::int64_t vertices, std::int64_t row) {
  return row * (2 * vertices - row - 1) / 2;
}

}  // namespace

Edge edge_from_index(std::int64_t vertices, std::int64_t index) {
  const std::int64_t total = vertices * (vertices - 1) / 2;
  if (index < 0 || index >= total) {
    throw Error(Errc::InvalidParameter, "edge index out of range");
  }
  std::int64_t lo = 0;
  std::int64_t hi = vertices - 2;
  while (lo < hi) {
    const std::int64_t mid = (lo + hi + 1) / 2;
    if (edges_before_row(vertices, mid) <= index) lo = mid;
    else hi = mid - 1;
  }
  const std::int64_t col = lo + 1 + (index - edges_before_row(vertices, lo));
  return Edge{lo + 1, col + 1};
}

std::vector<Edge> random_graph(EntropySource& src, std::int64_t vertices, std::int64_t edges) {
  if (vertices < 1) throw Error(Errc::InvalidParameter, "graph needs at least one vertex");
  if (edges < 0) throw Error(Errc::InvalidParameter, "negative edge count");
  const std::int64_t total = vertices * (vertices - 1) / 2;
  if (edges > total) {
    throw Error(Errc::TooManyEdges, std::to_string(edges) + " edges requested, only " +
                                        std::to_string(total) + " possible");
  }
  if (total > (std::int64_t{1} << 32)) {
    throw Error(Errc::InvalidParameter, "edge index space exceeds 2^32");
  }
  std::set<std::int64_t> chosen;
  for (std::int64_t j = total - edges; j < total; ++j) {
    const std::int64_t t = src.read_int_in(0, j);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Edge> out;
  out.reserve(chosen.size());
  for (std::int64_t idx : chosen) out.push_back(edge_from_index(vertices, idx));
  return out;
}

ComplexMatrix ginibre_matrix(EntropySource& src, linalg::Index rows, linalg::Index cols) {
  if (rows < 1 || cols < 1) {
    throw Error(Errc::InvalidParameter, "Ginibre matrix needs rows, cols >= 1");
  }
  ComplexMatrix g(rows, cols);
  for (linalg::Index i = 0; i < rows; ++i) {
    for (linalg::Index j = 0; j < cols; ++j) {
      const double re = normal_real(src, 0.0, 1.0);
      const double im = normal_real(src, 0.0, 1.0);
      g(i, j) = linalg::Complex(re, im);
    }
  }
  return g;
}

}  // namespace qrs::randkit
