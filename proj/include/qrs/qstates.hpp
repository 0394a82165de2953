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

#ifndef QRS_QSTATES_HPP
#define QRS_QSTATES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrs/entropy.hpp"
#include "qrs/linalg.hpp"

namespace qrs::states {

using entropy::EntropySource;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using linalg::Index;

namespace tolerance {
inline constexpr double kNorm = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kMinEigenvalue = -1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kChannelHermitian = 1e-10;
inline constexpr double kChannelPsdRelative = 1e-8;
inline constexpr double kChannelPartialTrace = 1e-8;
}  // namespace tolerance

// Unit-norm vector of C^n. The constructor enforces the invariant.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Index dim() const noexcept { return amplitudes_.size(); }

 private:
  ComplexVector amplitudes_;
};

// Hermitian, unit-trace, positive semi-definite.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);
  static DensityMatrix from_pure(const PureState& psi);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix matrix);
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

// Choi matrix of a channel on C^n, acting on C^n (x) C^n. Trace preservation
// is the condition Tr_1 D = I_n.
class DynamicalMatrix {
 public:
  DynamicalMatrix(ComplexMatrix matrix, Index system_dim);
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index system_dim() const noexcept { return system_dim_; }

 private:
  ComplexMatrix matrix_;
  Index system_dim_;
};

struct MeasureSpec {
  enum class Kind { HS, Bures, Induced };

  Kind kind = Kind::HS;
  Index ancilla = 0;  // only for Induced, >= 1

  static MeasureSpec hs() { return {Kind::HS, 0}; }
  static MeasureSpec bures() { return {Kind::Bures, 0}; }
  static MeasureSpec induced(Index k);

  // Accepts "hs", "bures", "induced:<K>" or a bare integer K.
  static MeasureSpec parse(std::string_view text);
  std::string label() const;
};

PureState random_ket(EntropySource& src, Index n);
PureState random_product_ket(EntropySource& src, std::span<const Index> dims);

// Haar unitary: QR of a Ginibre matrix with the R-diagonal phases moved into Q.
UnitaryMatrix random_unitary(EntropySource& src, Index n);
std::vector<UnitaryMatrix> random_local_unitary_factors(EntropySource& src,
                                                        std::span<const Index> dims);
UnitaryMatrix random_local_unitary(EntropySource& src, std::span<const Index> dims);

DensityMatrix random_state_induced(EntropySource& src, Index n, Index k);
DensityMatrix random_state_hs(EntropySource& src, Index n);
DensityMatrix random_state_bures(EntropySource& src, Index n);
DensityMatrix random_state(EntropySource& src, Index n, const MeasureSpec& mu);

std::vector<DensityMatrix> random_product_state_factors(EntropySource& src,
                                                        std::span<const Index> dims,
                                                        const MeasureSpec& mu);
DensityMatrix random_product_state(EntropySource& src, std::span<const Index> dims,
                                   const MeasureSpec& mu);

// Random channel with `zero_eigenvalues` eigenvalues of D pinned to zero.
DynamicalMatrix random_dynamical_matrix(EntropySource& src, Index n, Index zero_eigenvalues = 0);

}  // namespace qrs::states

#endif  // QRS_QSTATES_HPP
