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

#ifndef QRS_LINALG_HPP
#define QRS_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

#include "qrs/error.hpp"

namespace qrs::linalg {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

struct QrFactors {
  ComplexMatrix q;
  ComplexMatrix r;
};

enum class Subsystem { First = 1, Second = 2 };

inline constexpr double kHermitianTolerance = 1e-8;
inline constexpr double kPsdClampWindow = 1e-10;
inline constexpr double kRankThreshold = 1e-12;

ComplexMatrix conj_transpose(const ComplexMatrix& a);

// Throws Errc::NotSquare.
Complex trace(const ComplexMatrix& a);

// max_ij |A_ij - conj(A_ji)|; requires a square matrix.
double hermitian_defect(const ComplexMatrix& a);

// Tridiagonalization followed by implicit symmetric QL iteration.
// Throws Errc::NotHermitian or Errc::NoConvergence.
HermitianEigen hermitian_eig(const ComplexMatrix& a);
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

// Householder QR without pivoting. Throws Errc::RankDeficient when some
// |R_ii| <= 1e-12 * ||A||_F.
QrFactors qr_unitary(const ComplexMatrix& a);

// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
// clamped to zero; anything lower throws Errc::NotPsd.
ComplexMatrix sqrt_psd(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// A acts on C^n (x) C^k. Subsystem::Second traces out C^k (n x n result),
// Subsystem::First traces out C^n (k x k result).
ComplexMatrix partial_trace(const ComplexMatrix& a, Index n, Index k, Subsystem which);

}  // namespace qrs::linalg

#endif  // QRS_LINALG_HPP
