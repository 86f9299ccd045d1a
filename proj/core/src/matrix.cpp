#include "qwalk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/operator.hpp"

namespace qwalk {

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : dim_(dim), data_(dim * dim, 0.0) {}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
  SymmetricMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
  SymmetricMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

void SymmetricMatrix::add(std::size_t row, std::size_t col,
                          double value) noexcept {
  data_[row * dim_ + col] += value;
  if (row != col) data_[col * dim_ + row] += value;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.dim_ != dim_) throw ParameterError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& other) {
  if (other.dim_ != dim_) throw ParameterError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double scale) noexcept {
  for (auto& x : data_) x *= scale;
  return *this;
}

RealVector SymmetricMatrix::apply(std::span<const double> x) const {
  if (x.size() != dim_) throw ParameterError("vector length mismatch");
  RealVector y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* r = data_.data() + i * dim_;
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

ComplexVector SymmetricMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != dim_) throw ParameterError("vector length mismatch");
  ComplexVector y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* r = data_.data() + i * dim_;
    Complex acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double acc = 0.0;
  for (double x : data_) acc += x * x;
  return std::sqrt(acc);
}

double SymmetricMatrix::inf_norm() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (double x : row(i)) acc += std::abs(x);
    best = std::max(best, acc);
  }
  return best;
}

double SymmetricMatrix::trace() const noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

double SymmetricMatrix::max_abs_difference(const SymmetricMatrix& other) const {
  if (other.dim_ != dim_) throw ParameterError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("vector length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw ParameterError("vector length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double norm(std::span<const Complex> x) {
  double acc = 0.0;
  for (const auto& z : x) acc += std::norm(z);
  return std::sqrt(acc);
}

ComplexVector to_complex(std::span<const double> x) {
  return ComplexVector(x.begin(), x.end());
}

std::string_view to_string(BasisTag tag) noexcept {
  switch (tag) {
    case BasisTag::full:
      return "full";
    case BasisTag::reduced4:
      return "reduced4";
    case BasisTag::reduced3:
      return "reduced3";
    case BasisTag::reduced2:
      return "reduced2";
  }
  return "unknown";
}

BasisTag reduced_tag(std::size_t dim) {
  switch (dim) {
    case 4:
      return BasisTag::reduced4;
    case 3:
      return BasisTag::reduced3;
    case 2:
      return BasisTag::reduced2;
    default:
      throw ParameterError("reduced basis must have dimension 2..4, got " +
                           std::to_string(dim));
  }
}

}  // namespace qwalk
