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

#include "qrs/linalg.hpp"

#include <string>

namespace qrs::linalg {
namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw Error(Errc::NotSquare, std::string(what) + ": matrix is " + std::to_string(a.rows()) +
                                     "x" + std::to_string(a.cols()));
  }
}

void require_hermitian(const ComplexMatrix& a) {
  require_square(a, "hermitian_eig");
  const double defect = hermitian_defect(a);
  if (!(defect <= kHermitianTolerance)) {
    throw Error(Errc::NotHermitian, "max |A - A^dagger| = " + std::to_string(defect));
  }
}

}  // namespace

ComplexMatrix conj_transpose(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

double hermitian_defect(const ComplexMatrix& a) {
  require_square(a, "hermitian_defect");
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NoConvergence, "Hermitian eigensolver hit its iteration cap");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  require_hermitian(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NoConvergence, "Hermitian eigensolver hit its iteration cap");
  }
  return solver.eigenvalues();
}

QrFactors qr_unitary(const ComplexMatrix& a) {
  require_square(a, "qr_unitary");
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  const double threshold = kRankThreshold * a.norm();
  for (Index i = 0; i < r.rows(); ++i) {
    if (!(std::abs(r(i, i)) > threshold)) {
      throw Error(Errc::RankDeficient, "|R_" + std::to_string(i) + std::to_string(i) +
                                           "| below rank threshold");
    }
  }
  ComplexMatrix q = qr.householderQ();
  return QrFactors{std::move(q), std::move(r)};
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
  HermitianEigen eig = hermitian_eig(a);
  RealVector roots(eig.eigenvalues.size());
  for (Index i = 0; i < roots.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (lambda < -kPsdClampWindow) {
      throw Error(Errc::NotPsd, "eigenvalue " + std::to_string(lambda) + " below -1e-10");
    }
    roots(i) = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  const auto& v = eig.eigenvectors;
  ComplexMatrix s = v * roots.asDiagonal() * v.adjoint();
  return (s + s.adjoint()) * 0.5;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, Index n, Index k, Subsystem which) {
  if (n < 1 || k < 1 || a.rows() != n * k || a.cols() != n * k) {
    throw Error(Errc::DimensionMismatch,
                "partial_trace: expected side " + std::to_string(n * k) + ", got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (which == Subsystem::Second) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index t = 0; t < k; ++t) out(i, j) += a(i * k + t, j * k + t);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(k, k);
  for (Index t = 0; t < n; ++t) out += a.block(t * k, t * k, k, k);
  return out;
}

}  // namespace qrs::linalg
