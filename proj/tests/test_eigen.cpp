#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "qwalk/eigen.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;
using Catch::Approx;

namespace {

SymmetricMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, dist(rng));
  }
  return m;
}

std::vector<double> sorted_values(const EigenSystem& sys) {
  std::vector<double> v(sys.eigenvalues().begin(), sys.eigenvalues().end());
  std::sort(v.begin(), v.end());
  return v;
}

void check_system(const SymmetricMatrix& h, const EigenSystem& sys) {
  REQUIRE(sys.dim() == h.dim());
  CHECK(sys.max_residual(h) <= 1e-10 * std::max(1.0, h.frobenius_norm()));
  CHECK(sys.orthogonality_error() <= 1e-12);
  double sum = 0.0;
  for (double e : sys.eigenvalues()) sum += e;
  CHECK(sum == Approx(h.trace()).margin(1e-10 * h.frobenius_norm()));
}

}  // namespace

TEST_CASE("2x2 closed form", "[eigen]") {
  SymmetricMatrix h(2);
  h.set(0, 0, 2.0);
  h.set(1, 1, -1.0);
  h.set(0, 1, 0.5);
  const double mid = 0.5;
  const double rad = std::sqrt(1.5 * 1.5 + 0.25);
  for (const auto& sys : {eigen::jacobi(h), eigen::householder_ql(h)}) {
    const auto v = sorted_values(sys);
    CHECK(v[0] == Approx(mid - rad));
    CHECK(v[1] == Approx(mid + rad));
  }
}

TEST_CASE("both solvers agree on random matrices", "[eigen][property]") {
  std::mt19937_64 rng(20261019);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 12u, 30u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto h = random_symmetric(n, rng);
      const auto j = eigen::jacobi(h);
      const auto q = eigen::householder_ql(h);
      const auto d = eigen::diagonalize(h);
      check_system(h, j);
      check_system(h, q);
      check_system(h, d);
      CHECK(std::is_sorted(d.eigenvalues().begin(), d.eigenvalues().end()));
      const auto jv = sorted_values(j);
      const auto qv = sorted_values(q);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(jv[i] == Approx(qv[i]).margin(1e-10));
        CHECK(d.eigenvalue(i) == Approx(qv[i]).margin(1e-10));
      }
    }
  }
}

TEST_CASE("diagonalize normalizes eigenvector signs", "[eigen]") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {4u, 20u}) {
    const auto sys = eigen::diagonalize(random_symmetric(n, rng));
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = sys.eigenvector(i);
      const auto big = std::max_element(v.begin(), v.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
      });
      CHECK(*big > 0.0);
    }
  }
}

TEST_CASE("degenerate spectra stay orthonormal", "[eigen]") {
  for (std::size_t n : {4u, 25u}) {
    SymmetricMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) h.set(i, j, 1.0);
    }
    const auto sys = eigen::diagonalize(h);
    check_system(h, sys);
    CHECK(sys.eigenvalue(n - 1) == Approx(static_cast<double>(n)));
    CHECK(std::abs(sys.eigenvalue(0)) < 1e-12);
  }
}

TEST_CASE("diagonal and empty inputs", "[eigen]") {
  const std::vector<double> d{3.0, -2.0, 1.0};
  const auto sys = eigen::diagonalize(SymmetricMatrix::diagonal(d));
  CHECK(sys.eigenvalue(0) == -2.0);
  CHECK(sys.eigenvalue(2) == 3.0);
  CHECK(sys.eigenvector(0)[1] == 1.0);
  CHECK(eigen::diagonalize(SymmetricMatrix(0)).dim() == 0);
}

TEST_CASE("non-finite entries are rejected", "[eigen]") {
  SymmetricMatrix h(3);
  h.set(0, 1, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(eigen::diagonalize(h), ParameterError);
}
