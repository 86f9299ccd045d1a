#include "qwalk/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

EigenSystem::EigenSystem(RealVector eigenvalues,
                         std::vector<RealVector> eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
  if (vectors_.size() != values_.size()) {
    throw ParameterError("eigenvalue / eigenvector count mismatch");
  }
  for (const auto& v : vectors_) {
    if (v.size() != values_.size()) {
      throw ParameterError("eigenvector length mismatch");
    }
  }
}

double EigenSystem::max_residual(const SymmetricMatrix& h) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    auto hv = h.apply(std::span<const double>(vectors_[i]));
    double acc = 0.0;
    for (std::size_t k = 0; k < dim(); ++k) {
      const double r = hv[k] - values_[i] * vectors_[i][k];
      acc += r * r;
    }
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

double EigenSystem::orthogonality_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot(vectors_[i], vectors_[j]) - target));
    }
  }
  return worst;
}

namespace eigen {
namespace {

// Row-major square work array.
struct Work {
  std::size_t n;
  std::vector<double> a;
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

void check_finite(const SymmetricMatrix& h) {
  for (double x : h.data()) {
    if (!std::isfinite(x)) throw ParameterError("matrix has non-finite entries");
  }
}

double off_diagonal_norm(Work& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (i != j) acc += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(acc);
}

// Columns of v become eigenvectors.
EigenSystem from_columns(const std::vector<double>& values, Work& v) {
  std::vector<RealVector> vectors(v.n, RealVector(v.n));
  for (std::size_t i = 0; i < v.n; ++i) {
    for (std::size_t k = 0; k < v.n; ++k) vectors[i][k] = v(k, i);
  }
  return EigenSystem(values, std::move(vectors));
}

}  // namespace

EigenSystem jacobi(const SymmetricMatrix& h) {
  check_finite(h);
  const std::size_t n = h.dim();
  Work a{n, std::vector<double>(h.data().begin(), h.data().end())};
  Work v{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double threshold = 1e-14 * h.frobenius_norm();
  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= threshold) break;
    if (sweep == kMaxSweeps) {
      std::ostringstream msg;
      msg << "Jacobi did not converge in " << kMaxSweeps
          << " sweeps (dim " << n << ", off-diagonal norm " << off
          << ", threshold " << threshold << ")";
      throw NumericalError(msg.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- J^T A J, rotation in the (p, q) plane.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return from_columns(values, v);
}

// Householder tridiagonalization (tred2) and implicit-shift QL (tql2) after
// the EISPACK routines.
EigenSystem householder_ql(const SymmetricMatrix& h) {
  check_finite(h);
  const std::size_t n = h.dim();
  Work v{n, std::vector<double>(h.data().begin(), h.data().end())};
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  if (n == 0) return EigenSystem({}, {});

  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double hh = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        hh += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(hh);
      if (f > 0) g = -g;
      e[i] = scale * g;
      hh -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= hh;
        f += e[j] * d[j];
      }
      const double half = f / (hh + hh);
      for (std::size_t j = 0; j < i; ++j) e[j] -= half * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) {
          v(k, j) -= (f * e[k] + g * d[k]);
        }
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = hh;
  }

  // Accumulate the transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double hh = d[i + 1];
    if (hh != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / hh;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;

  // QL iterations on the tridiagonal (d, e).
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  constexpr int kMaxIterations = 60;
  const double eps = std::numeric_limits<double>::epsilon();
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxIterations) {
          std::ostringstream msg;
          msg << "implicit QL did not converge for eigenvalue " << l
              << " of " << n << " after " << kMaxIterations << " iterations";
          throw NumericalError(msg.str());
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double hh = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= hh;
        f += hh;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          hh = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = hh + s * (c * g + s * d[ii]);
          for (std::size_t k = 0; k < n; ++k) {
            hh = v(k, ii + 1);
            v(k, ii + 1) = s * v(k, ii) + c * hh;
            v(k, ii) = c * v(k, ii) - s * hh;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  return from_columns(d, v);
}

EigenSystem diagonalize(const SymmetricMatrix& h) {
  auto raw = h.dim() <= kJacobiMaxDim ? jacobi(h) : householder_ql(h);
  const std::size_t n = raw.dim();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return raw.eigenvalue(x) < raw.eigenvalue(y);
                   });

  RealVector values(n);
  std::vector<RealVector> vectors(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = raw.eigenvalue(order[i]);
    auto src = raw.eigenvector(order[i]);
    RealVector vec(src.begin(), src.end());
    // Near-ties (within 1e-12 relative) resolve to the lowest index.
    double largest = 0.0;
    for (double x : vec) largest = std::max(largest, std::abs(x));
    std::size_t big = 0;
    while (big + 1 < n && std::abs(vec[big]) < largest * (1.0 - 1e-12)) ++big;
    if (n > 0 && vec[big] < 0) {
      for (auto& x : vec) x = -x;
    }
    vectors[i] = std::move(vec);
  }
  return EigenSystem(std::move(values), std::move(vectors));
}

}  // namespace eigen
}  // namespace qwalk
