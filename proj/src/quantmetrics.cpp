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

#include "qrs/quantmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

namespace qrs::metrics {
namespace {

using linalg::ComplexMatrix;

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch, "states of dimension " + std::to_string(a.dim()) +
                                             " and " + std::to_string(b.dim()));
  }
}

void require_distribution(std::span<const double> p, double tol) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= -tol)) throw Error(Errc::NotDistribution, "negative probability");
    sum += x;
  }
  if (!(std::abs(sum - 1.0) <= tol)) {
    throw Error(Errc::NotDistribution, "probabilities sum to " + std::to_string(sum));
  }
}

}  // namespace

SpectrumPoint::SpectrumPoint(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw Error(Errc::NotDistribution, "empty spectrum");
  require_distribution(lambdas_, 1e-12);
}

double root_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b);
  const ComplexMatrix sb = linalg::sqrt_psd(b.matrix());
  ComplexMatrix m = sb * a.matrix() * sb;
  m = (m + m.adjoint()) * 0.5;
  // tr sqrt(M) = sum of sqrt(mu_i). Eigenvalues under the solver's resolution
  // are rounding noise; their square roots would add ~1e-8 for rank-deficient M.
  const linalg::RealVector mu = linalg::hermitian_eigenvalues(m);
  const double top = std::max(mu.maxCoeff(), 0.0);
  const double floor = static_cast<double>(mu.size()) * std::numeric_limits<double>::epsilon() * top;
  double total = 0.0;
  for (const double x : mu) {
    if (x < -linalg::kPsdClampWindow) throw Error(Errc::NotPsd, "fidelity operator is not PSD");
    if (x > floor) total += std::sqrt(x);
  }
  return total;
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  const double f = root_fidelity(a, b);
  return f * f;
}

double pure_fidelity(const PureState& phi, const DensityMatrix& rho) {
  if (phi.dim() != rho.dim()) throw Error(Errc::DimensionMismatch, "ket and state dimensions differ");
  const auto& v = phi.amplitudes();
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b);
  return (a.matrix() - b.matrix()).norm();
}

double bures_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * root_fidelity(a, b)));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix d = a.matrix() - b.matrix();
  d = (d + d.adjoint()) * 0.5;
  return 0.5 * linalg::hermitian_eigenvalues(d).cwiseAbs().sum();
}

double hellinger_affinity(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw Error(Errc::DimensionMismatch, "distributions differ in length");
  require_distribution(p, 1e-9);
  require_distribution(q, 1e-9);
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) h += std::sqrt(std::max(0.0, p[i]) * std::max(0.0, q[i]));
  return h;
}

double hs_eigenvalue_density(const SpectrumPoint& lambdas) {
  const auto& l = lambdas.lambdas();
  double vandermonde = 1.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      const double d = l[i] - l[j];
      vandermonde *= d * d;
    }
  }
  return hs_normalization(static_cast<int>(l.size())) * vandermonde;
}

double hs_normalization(int n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "hs_normalization needs N >= 1");
  double log_c = std::lgamma(static_cast<double>(n) * n);
  for (int k = 1; k <= n; ++k) log_c -= std::lgamma(k) + std::lgamma(k + 1.0);
  return std::exp(log_c);
}

double mean_fidelity_2K(long long k) {
  if (k < 1) throw Error(Errc::InvalidParameter, "mean_fidelity_2K needs K >= 1");
  if (k == 1) return 0.5;
  const double kk = static_cast<double>(k);
  // Gamma(K-1/2)/Gamma(K-1) * Gamma(K+1/2)/Gamma(K+1), each ratio evaluated directly.
  const double ratio = boost::math::tgamma_delta_ratio(kk - 0.5, -0.5) *
                       boost::math::tgamma_delta_ratio(kk + 0.5, 0.5);
  return 0.5 + 0.5 * ratio * ratio;
}

}  // namespace qrs::metrics
