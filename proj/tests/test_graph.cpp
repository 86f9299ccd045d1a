#include <catch_amalgamated.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

using namespace qwalk;
using Catch::Approx;

TEST_CASE("instance validation names the violated invariant", "[graph]") {
  CHECK_NOTHROW(BipartiteInstance(512, 256, 3, 5));
  CHECK_NOTHROW(BipartiteInstance(4, 4, 0, 4));
  CHECK_THROWS_AS(BipartiteInstance(0, 4, 0, 1), InvalidInstance);
  CHECK_THROWS_AS(BipartiteInstance(4, 4, -1, 1), InvalidInstance);
  CHECK_THROWS_AS(BipartiteInstance(4, 4, 0, 0), InvalidInstance);
  CHECK_THROWS_WITH(BipartiteInstance(512, 256, 600, 5),
                    Catch::Matchers::ContainsSubstring("k1"));
  CHECK_THROWS_WITH(BipartiteInstance(4, 4, 1, 5),
                    Catch::Matchers::ContainsSubstring("k2"));
  CHECK(validate_instance(512, 256, 3, 5).empty());
  CHECK_FALSE(validate_instance(2, 2, 3, 0).empty());
}

TEST_CASE("walk kind and regime parsing", "[graph]") {
  CHECK(parse_walk_kind("laplacian") == WalkKind::laplacian);
  CHECK(parse_walk_kind(to_string(WalkKind::adjacency)) == WalkKind::adjacency);
  CHECK_THROWS_AS(parse_walk_kind("lazy"), ParameterError);
  for (auto r : {Regime::laplacian_a, Regime::laplacian_b, Regime::adjacency}) {
    CHECK(parse_regime(to_string(r)) == r);
  }
  CHECK(kind_of(Regime::laplacian_b) == WalkKind::laplacian);
  CHECK(kind_of(Regime::adjacency) == WalkKind::adjacency);
}

TEST_CASE("adjacency and laplacian of K(n1,n2)", "[graph]") {
  const BipartiteInstance inst(3, 2, 1, 1);
  const auto a = graph::build_adjacency(inst).matrix;
  REQUIRE(a.dim() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const bool cross = (i < 3) != (j < 3);
      CHECK(a(i, j) == (cross ? 1.0 : 0.0));
    }
  }
  const auto d = graph::build_degree(inst).matrix;
  CHECK(d(0, 0) == 2.0);
  CHECK(d(4, 4) == 3.0);

  const auto l = graph::build_laplacian(inst).matrix;
  CHECK(l.max_abs_difference(a - d) == 0.0);
  const std::vector<double> ones(5, 1.0);
  for (double x : l.apply(ones)) CHECK(std::abs(x) <= 1e-12);
}

TEST_CASE("L annihilates the uniform vector on larger graphs", "[graph][property]") {
  for (auto [n1, n2] : {std::pair{7, 13}, std::pair{30, 30}, std::pair{1, 40}}) {
    const BipartiteInstance inst(n1, n2, 1, 0);
    const auto l = graph::build_laplacian(inst).matrix;
    const std::vector<double> ones(static_cast<std::size_t>(n1 + n2), 1.0);
    for (double x : l.apply(ones)) CHECK(std::abs(x) <= 1e-12);
  }
}

TEST_CASE("marked sets", "[graph]") {
  const BipartiteInstance inst(4, 3, 2, 1);
  const auto canon = graph::MarkedSet::canonical(inst);
  CHECK(canon.v1() == std::vector<std::int64_t>{0, 1});
  CHECK(canon.v2() == std::vector<std::int64_t>{4});
  CHECK(std::count(canon.mask().begin(), canon.mask().end(), true) == 3);

  CHECK_NOTHROW(graph::MarkedSet(inst, {3, 1}, {6}));
  CHECK_THROWS_AS(graph::MarkedSet(inst, {0}, {4}), InvalidInstance);
  CHECK_THROWS_AS(graph::MarkedSet(inst, {0, 0}, {4}), InvalidInstance);
  CHECK_THROWS_AS(graph::MarkedSet(inst, {0, 1}, {2}), InvalidInstance);
  CHECK_THROWS_AS(graph::MarkedSet(inst, {0, 4}, {5}), InvalidInstance);

  const auto p = graph::oracle_projector(inst, canon).matrix;
  CHECK(p.trace() == 3.0);
  CHECK(p(4, 4) == 1.0);
  CHECK(p(2, 2) == 0.0);
}

TEST_CASE("full search hamiltonian", "[graph]") {
  const BipartiteInstance inst(3, 2, 1, 0);
  const auto marks = graph::MarkedSet::canonical(inst);
  const auto h = graph::search_hamiltonian(inst, marks, WalkKind::laplacian, 0.5);
  CHECK(h.basis == BasisTag::full);
  CHECK(h.matrix(0, 0) == Approx(-0.5 * -2.0 - 1.0));
  CHECK(h.matrix(0, 3) == Approx(-0.5));
  const auto ha = graph::search_hamiltonian(inst, marks, WalkKind::adjacency, 0.5);
  CHECK(ha.matrix(0, 0) == -1.0);
  CHECK(ha.matrix(1, 1) == 0.0);
  CHECK_THROWS_AS(graph::search_hamiltonian(inst, marks, WalkKind::adjacency, 0.0),
                  ParameterError);
}
