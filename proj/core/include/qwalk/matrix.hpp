#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

/// Dense real symmetric matrix, row-major. Writes go through set(), which
/// mirrors the entry, so the stored array is always exactly symmetric.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);

  static SymmetricMatrix identity(std::size_t dim);
  static SymmetricMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }
  void set(std::size_t row, std::size_t col, double value) noexcept {
    data_[row * dim_ + col] = value;
    data_[col * dim_ + row] = value;
  }
  void add(std::size_t row, std::size_t col, double value) noexcept;

  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * dim_, dim_};
  }
  std::span<const double> data() const noexcept { return data_; }

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& operator-=(const SymmetricMatrix& other);
  SymmetricMatrix& operator*=(double scale) noexcept;

  friend SymmetricMatrix operator+(SymmetricMatrix lhs,
                                   const SymmetricMatrix& rhs) {
    return lhs += rhs;
  }
  friend SymmetricMatrix operator-(SymmetricMatrix lhs,
                                   const SymmetricMatrix& rhs) {
    return lhs -= rhs;
  }
  friend SymmetricMatrix operator*(double scale, SymmetricMatrix m) {
    return m *= scale;
  }
  friend bool operator==(const SymmetricMatrix&,
                         const SymmetricMatrix&) = default;

  RealVector apply(std::span<const double> x) const;
  ComplexVector apply(std::span<const Complex> x) const;

  double frobenius_norm() const noexcept;
  /// Maximum absolute row sum; an upper bound on the spectral norm.
  double inf_norm() const noexcept;
  double trace() const noexcept;
  double max_abs_difference(const SymmetricMatrix& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> x, std::span<const double> y);
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const double> x);
double norm(std::span<const Complex> x);
ComplexVector to_complex(std::span<const double> x);

}  // namespace qwalk
