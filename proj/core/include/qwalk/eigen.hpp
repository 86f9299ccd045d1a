#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/matrix.hpp"

namespace qwalk {

/// Eigenvalues in ascending order with orthonormal eigenvectors aligned to
/// them. Index 0 is the ground state.
class EigenSystem {
 public:
  EigenSystem(RealVector eigenvalues, std::vector<RealVector> eigenvectors);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> eigenvalues() const noexcept { return values_; }
  double eigenvalue(std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> eigenvector(std::size_t i) const noexcept {
    return vectors_[i];
  }

  /// max_i ||H v_i - lambda_i v_i||.
  double max_residual(const SymmetricMatrix& h) const;
  /// max |V^T V - I|.
  double orthogonality_error() const;

 private:
  RealVector values_;
  std::vector<RealVector> vectors_;
};

namespace eigen {

inline constexpr std::size_t kJacobiMaxDim = 8;
inline constexpr int kMaxSweeps = 100;

/// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
/// drops below 1e-14 * ||H||_F. Throws NumericalError after kMaxSweeps.
EigenSystem jacobi(const SymmetricMatrix& h);

/// Householder reduction to tridiagonal form followed by implicit-shift QL.
EigenSystem householder_ql(const SymmetricMatrix& h);

/// Jacobi for dim <= kJacobiMaxDim, Householder/QL above.
/// Output is sorted ascending and each eigenvector's largest-magnitude
/// component is positive (first such index on ties).
EigenSystem diagonalize(const SymmetricMatrix& h);

}  // namespace eigen
}  // namespace qwalk
