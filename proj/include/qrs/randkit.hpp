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

#ifndef QRS_RANDKIT_HPP
#define QRS_RANDKIT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qrs/entropy.hpp"
#include "qrs/linalg.hpp"

namespace qrs::randkit {

using entropy::EntropySource;
using linalg::ComplexMatrix;

// Uniformly distributed point of the standard simplex.
// Construction checks non-negativity and sum == 1 within 1e-12.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> weights);

  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

// Dense real array, row-major over `shape`.
struct RealArray {
  std::vector<std::size_t> shape;
  std::vector<double> values;
};

// Undirected edge between 1-based vertex labels, first < second.
struct Edge {
  std::int64_t first;
  std::int64_t second;
  auto operator<=>(const Edge&) const = default;
};

// Box-Muller on two unit uniforms (a zero first uniform is redrawn); the
// sine partner is discarded so every variate costs the same entropy.
double normal_real(EntropySource& src, double mean, double stddev);

RealArray normal_array(EntropySource& src, double mean, double stddev,
                       std::span<const std::size_t> dims);

// Normalized Exp(1) draws, i.e. Dirichlet(1, ..., 1).
SimplexPoint random_simplex(EntropySource& src, std::size_t n);

std::size_t random_index(EntropySource& src, std::size_t count);

template <class T>
const T& random_choice(EntropySource& src, std::span<const T> items) {
  return items[random_index(src, items.size())];
}

// Uniform e-subset of the v(v-1)/2 possible edges, Floyd's sampling over edge
// indices. Returned sorted. Throws Errc::TooManyEdges.
std::vector<Edge> random_graph(EntropySource& src, std::int64_t vertices, std::int64_t edges);

// Maps a lexicographic edge index in [0, v(v-1)/2) to its vertex pair.
Edge edge_from_index(std::int64_t vertices, std::int64_t index);

// Entries N(0,1) + i N(0,1), real part drawn first, filled row by row.
ComplexMatrix ginibre_matrix(EntropySource& src, linalg::Index rows, linalg::Index cols);

}  // namespace qrs::randkit

#endif  // QRS_RANDKIT_HPP
