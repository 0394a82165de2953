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

#ifndef QRS_QUANTMETRICS_HPP
#define QRS_QUANTMETRICS_HPP

#include <span>
#include <vector>

#include "qrs/qstates.hpp"

namespace qrs::metrics {

using states::DensityMatrix;
using states::PureState;

// Spectrum of a density matrix: non-negative, summing to 1 within 1e-12.
class SpectrumPoint {
 public:
  explicit SpectrumPoint(std::vector<double> lambdas);
  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  std::size_t size() const noexcept { return lambdas_.size(); }

 private:
  std::vector<double> lambdas_;
};

// tr |sqrt(a) sqrt(b)|, evaluated as tr sqrt(sqrt(b) a sqrt(b)).
double root_fidelity(const DensityMatrix& a, const DensityMatrix& b);

// Square of root_fidelity; for pure a = |phi><phi| it equals <phi|b|phi>.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

// <phi|rho|phi>, the pure-state closed form of fidelity().
double pure_fidelity(const PureState& phi, const DensityMatrix& rho);

double hs_distance(const DensityMatrix& a, const DensityMatrix& b);

// sqrt(2 - 2 * root_fidelity), clamped at zero.
double bures_distance(const DensityMatrix& a, const DensityMatrix& b);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// sum_i sqrt(p_i q_i). Inputs must be probability vectors within 1e-9.
double hellinger_affinity(std::span<const double> p, std::span<const double> q);

// C_N * prod_{i<j} (l_i - l_j)^2, normalized over the full simplex.
double hs_eigenvalue_density(const SpectrumPoint& lambdas);

// Gamma(N^2) / prod_{k=1}^N Gamma(k) Gamma(k+1), evaluated in log space.
double hs_normalization(int n);

// Mean fidelity between two independent states of mu_{2,K}:
//   1/2 + 1/2 (Gamma(K-1/2) Gamma(K+1/2) / (Gamma(K-1) Gamma(K+1)))^2,
// with the K = 1 pole giving exactly 1/2.
double mean_fidelity_2K(long long k);

}  // namespace qrs::metrics

#endif  // QRS_QUANTMETRICS_HPP
