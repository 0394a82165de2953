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

#include "qrs/qstates.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "qrs/randkit.hpp"

namespace qrs::states {
namespace {

using linalg::Complex;

ComplexMatrix hermitian_part(const ComplexMatrix& a) { return (a + a.adjoint()) * 0.5; }

void require_dims(std::span<const Index> dims, const char* what) {
  if (dims.empty()) throw Error(Errc::InvalidParameter, std::string(what) + ": empty dims");
  for (Index d : dims) {
    if (d < 1) throw Error(Errc::InvalidParameter, std::string(what) + ": dims must be >= 1");
  }
}

void require_dim(Index n, const char* what) {
  if (n < 1) throw Error(Errc::InvalidParameter, std::string(what) + ": dimension must be >= 1");
}

// rho = A A^dagger / tr(A A^dagger), or nullopt when the trace underflows.
std::optional<ComplexMatrix> normalized_gram(const ComplexMatrix& a) {
  ComplexMatrix rho = hermitian_part(a * a.adjoint());
  const double tr = rho.trace().real();
  if (!(tr >= 1e-300)) return std::nullopt;
  rho /= tr;
  return rho;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw Error(Errc::InvariantViolation, "empty ket");
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= tolerance::kNorm)) {
    throw Error(Errc::InvariantViolation, "ket norm^2 = " + std::to_string(norm2));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
    throw Error(Errc::InvariantViolation, "density matrix must be square and non-empty");
  }
  const double defect = linalg::hermitian_defect(matrix_);
  if (!(defect <= tolerance::kHermitian)) {
    throw Error(Errc::InvariantViolation, "density matrix not Hermitian: " + std::to_string(defect));
  }
  const Complex tr = matrix_.trace();
  if (!(std::abs(tr - Complex(1.0, 0.0)) <= tolerance::kTrace)) {
    throw Error(Errc::InvariantViolation, "density matrix trace " + std::to_string(tr.real()));
  }
  const double min_eig = linalg::hermitian_eigenvalues(matrix_).minCoeff();
  if (!(min_eig >= tolerance::kMinEigenvalue)) {
    throw Error(Errc::InvariantViolation, "density matrix eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const auto& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
    throw Error(Errc::InvariantViolation, "unitary must be square and non-empty");
  }
  const auto n = matrix_.rows();
  const double defect =
      (matrix_.adjoint() * matrix_ - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(defect <= tolerance::kUnitary)) {
    throw Error(Errc::InvariantViolation, "U^dagger U - I = " + std::to_string(defect));
  }
}

DynamicalMatrix::DynamicalMatrix(ComplexMatrix matrix, Index system_dim)
    : matrix_(std::move(matrix)), system_dim_(system_dim) {
  const Index side = system_dim_ * system_dim_;
  if (system_dim_ < 1 || matrix_.rows() != side || matrix_.cols() != side) {
    throw Error(Errc::InvariantViolation, "dynamical matrix must be n^2 x n^2");
  }
  const double defect = linalg::hermitian_defect(matrix_);
  if (!(defect <= tolerance::kChannelHermitian)) {
    throw Error(Errc::InvariantViolation, "dynamical matrix not Hermitian: " + std::to_string(defect));
  }
  const double tr = matrix_.trace().real();
  const double min_eig = linalg::hermitian_eigenvalues(matrix_).minCoeff();
  if (!(min_eig >= -tolerance::kChannelPsdRelative * tr)) {
    throw Error(Errc::InvariantViolation, "dynamical matrix eigenvalue " + std::to_string(min_eig));
  }
  const ComplexMatrix reduced =
      linalg::partial_trace(matrix_, system_dim_, system_dim_, linalg::Subsystem::First);
  const double tp = (reduced - ComplexMatrix::Identity(system_dim_, system_dim_)).cwiseAbs().maxCoeff();
  if (!(tp <= tolerance::kChannelPartialTrace)) {
    throw Error(Errc::InvariantViolation, "Tr_1 D - I = " + std::to_string(tp));
  }
}

MeasureSpec MeasureSpec::induced(Index k) {
  if (k < 1) throw Error(Errc::InvalidParameter, "induced measure needs K >= 1");
  return {Kind::Induced, k};
}

MeasureSpec MeasureSpec::parse(std::string_view text) {
  if (text == "hs" || text == "HS") return hs();
  if (text == "bures" || text == "Bures") return bures();
  std::string_view digits = text;
  if (digits.starts_with("induced:")) digits.remove_prefix(8);
  long long k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(Errc::InvalidParameter,
                "measure must be hs, bures, induced:<K> or <K>, got: " + std::string(text));
  }
  return induced(static_cast<Index>(k));
}

std::string MeasureSpec::label() const {
  switch (kind) {
    case Kind::HS: return "hs";
    case Kind::Bures: return "bures";
    case Kind::Induced: return "induced:" + std::to_string(ancilla);
  }
  return "unknown";
}

PureState random_ket(EntropySource& src, Index n) {
  require_dim(n, "random_ket");
  const auto s = randkit::random_simplex(src, static_cast<std::size_t>(n));
  ComplexVector v(n);
  v(0) = Complex(std::sqrt(s[0]), 0.0);
  for (Index k = 1; k < n; ++k) {
    const double phase = src.read_double_in(0.0, 2.0 * std::numbers::pi);
    v(k) = std::sqrt(s[static_cast<std::size_t>(k)]) * std::polar(1.0, phase);
  }
  return PureState(std::move(v));
}

PureState random_product_ket(EntropySource& src, std::span<const Index> dims) {
  require_dims(dims, "random_product_ket");
  ComplexMatrix v = ComplexMatrix::Ones(1, 1);
  for (Index d : dims) v = linalg::kron(v, random_ket(src, d).amplitudes());
  return PureState(v.col(0));
}

UnitaryMatrix random_unitary(EntropySource& src, Index n) {
  require_dim(n, "random_unitary");
  for (int attempt = 0;; ++attempt) {
    const ComplexMatrix g = randkit::ginibre_matrix(src, n, n);
    linalg::QrFactors qr;
    try {
      qr = linalg::qr_unitary(g);
    } catch (const Error& e) {
      if (e.code() != Errc::RankDeficient || attempt > 0) throw;
      continue;
    }
    // G = (Q D)(D^-1 R) with D_jj = R_jj/|R_jj| gives R a positive diagonal,
    // which makes the factorization unique and Q D Haar distributed.
    for (Index j = 0; j < n; ++j) {
      const Complex r = qr.r(j, j);
      qr.q.col(j) *= r / std::abs(r);
    }
    return UnitaryMatrix(std::move(qr.q));
  }
}

std::vector<UnitaryMatrix> random_local_unitary_factors(EntropySource& src,
                                                        std::span<const Index> dims) {
  require_dims(dims, "random_local_unitary");
  std::vector<UnitaryMatrix> out;
  out.reserve(dims.size());
  for (Index d : dims) out.push_back(random_unitary(src, d));
  return out;
}

UnitaryMatrix random_local_unitary(EntropySource& src, std::span<const Index> dims) {
  ComplexMatrix u = ComplexMatrix::Ones(1, 1);
  for (const auto& factor : random_local_unitary_factors(src, dims)) {
    u = linalg::kron(u, factor.matrix());
  }
  return UnitaryMatrix(std::move(u));
}

DensityMatrix random_state_induced(EntropySource& src, Index n, Index k) {
  require_dim(n, "random_state_induced");
  if (k < 1) throw Error(Errc::InvalidParameter, "random_state_induced: ancilla dimension must be >= 1");
  for (int attempt = 0;; ++attempt) {
    auto rho = normalized_gram(randkit::ginibre_matrix(src, n, k));
    if (rho) return DensityMatrix(std::move(*rho));
    if (attempt > 0) throw Error(Errc::Degenerate, "Ginibre sample has vanishing norm");
  }
}

DensityMatrix random_state_hs(EntropySource& src, Index n) {
  return random_state_induced(src, n, n);
}

DensityMatrix random_state_bures(EntropySource& src, Index n) {
  require_dim(n, "random_state_bures");
  for (int attempt = 0;; ++attempt) {
    const ComplexMatrix g = randkit::ginibre_matrix(src, n, n);
    const UnitaryMatrix u = random_unitary(src, n);
    // (I + U) G G^dagger (I + U^dagger) = A A^dagger with A = (I + U) G.
    const ComplexMatrix a = (ComplexMatrix::Identity(n, n) + u.matrix()) * g;
    auto rho = normalized_gram(a);
    if (rho) return DensityMatrix(std::move(*rho));
    if (attempt > 0) throw Error(Errc::Degenerate, "Bures sample has vanishing trace");
  }
}

DensityMatrix random_state(EntropySource& src, Index n, const MeasureSpec& mu) {
  switch (mu.kind) {
    case MeasureSpec::Kind::HS: return random_state_hs(src, n);
    case MeasureSpec::Kind::Bures: return random_state_bures(src, n);
    case MeasureSpec::Kind::Induced: return random_state_induced(src, n, mu.ancilla);
  }
  throw Error(Errc::InvalidParameter, "unknown measure");
}

std::vector<DensityMatrix> random_product_state_factors(EntropySource& src,
                                                        std::span<const Index> dims,
                                                        const MeasureSpec& mu) {
  require_dims(dims, "random_product_state");
  std::vector<DensityMatrix> out;
  out.reserve(dims.size());
  for (Index d : dims) out.push_back(random_state(src, d, mu));
  return out;
}

DensityMatrix random_product_state(EntropySource& src, std::span<const Index> dims,
                                   const MeasureSpec& mu) {
  ComplexMatrix rho = ComplexMatrix::Ones(1, 1);
  for (const auto& factor : random_product_state_factors(src, dims, mu)) {
    rho = linalg::kron(rho, factor.matrix());
  }
  return DensityMatrix(hermitian_part(rho));
}

DynamicalMatrix random_dynamical_matrix(EntropySource& src, Index n, Index zero_eigenvalues) {
  require_dim(n, "random_dynamical_matrix");
  const Index side = n * n;
  if (zero_eigenvalues < 0 || zero_eigenvalues > side - 1) {
    throw Error(Errc::InvalidParameter, "zero-eigenvalue count must lie in [0, n^2 - 1]");
  }
  for (int attempt = 0;; ++attempt) {
    const ComplexMatrix g = randkit::ginibre_matrix(src, side, side - zero_eigenvalues);
    const ComplexMatrix w = hermitian_part(g * g.adjoint());
    const ComplexMatrix y = linalg::partial_trace(w, n, n, linalg::Subsystem::First);
    const auto eig = linalg::hermitian_eig(hermitian_part(y));
    const double tr_y = eig.eigenvalues.sum();
    if (!(eig.eigenvalues.minCoeff() >= 1e-12 * tr_y)) {
      if (attempt > 0) throw Error(Errc::SingularAncilla, "reduced Gram matrix is singular");
      continue;
    }
    const linalg::RealVector inv_roots = eig.eigenvalues.cwiseSqrt().cwiseInverse();
    const ComplexMatrix y_inv_sqrt =
        eig.eigenvectors * inv_roots.asDiagonal() * eig.eigenvectors.adjoint();
    const ComplexMatrix whiten = linalg::kron(ComplexMatrix::Identity(n, n), y_inv_sqrt);
    return DynamicalMatrix(hermitian_part(whiten * w * whiten), n);
  }
}

}  // namespace qrs::states
