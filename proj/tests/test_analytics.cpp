#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "qwalk/analytics.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/reduced.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;
using namespace qwalk::analytics;
using Catch::Approx;

namespace {

const BipartiteInstance kCanonical(512, 256, 3, 5);
const BipartiteInstance kLarge(2048, 1024, 3, 5);

}  // namespace

TEST_CASE("closed-form critical rates and runtimes", "[analytics]") {
  const auto a = predict(kCanonical, Regime::laplacian_a);
  CHECK(a.gamma_crit == Approx(1.0 / 256));
  CHECK(a.runtime == Approx(8.0 * std::numbers::pi));
  CHECK(a.targets.only_a().a);
  CHECK(a.predicted_gap() == Approx(2.0 * std::sqrt(3.0 / 768.0)));

  const auto b = predict(kCanonical, Regime::laplacian_b);
  CHECK(b.gamma_crit == Approx(1.0 / 512));
  CHECK(b.runtime == Approx(19.4677).epsilon(1e-5));

  const auto adj = predict(kCanonical, Regime::adjacency);
  CHECK(adj.gamma_crit == Approx(1.0 / std::sqrt(512.0 * 256.0)));
  CHECK(adj.runtime == Approx(13.9411).epsilon(1e-5));
  CHECK(adj.final_state[Component::a] * adj.final_state[Component::a] ==
        Approx(768.0 / 3328.0));
  CHECK(adj.final_state[Component::b] * adj.final_state[Component::b] ==
        Approx(2560.0 / 3328.0));
  CHECK(adj.eigenpairs.size() == 3);

  const auto rt = runtimes(kCanonical);
  CHECK(rt.t_a == a.runtime);
  CHECK(rt.t_star == adj.runtime);
}

TEST_CASE("predictions for empty marked classes", "[analytics]") {
  const BipartiteInstance only_b(512, 256, 0, 5);
  CHECK_THROWS_AS(predict(only_b, Regime::laplacian_a), ParameterError);
  CHECK_NOTHROW(predict(only_b, Regime::laplacian_b));
  const auto adj = predict(only_b, Regime::adjacency);
  CHECK(adj.final_state[Component::b] == Approx(1.0));
  CHECK(adj.eigenpairs.size() == 2);
  CHECK(std::isinf(runtimes(only_b).t_a));
}

TEST_CASE("eigenpair residuals shrink with graph size", "[analytics]") {
  for (auto regime : {Regime::laplacian_a, Regime::laplacian_b, Regime::adjacency}) {
    const auto small = verify_eigenpairs(kCanonical, predict(kCanonical, regime), 0.05);
    const auto large = verify_eigenpairs(kLarge, predict(kLarge, regime), 0.05);
    CAPTURE(to_string(regime));
    CHECK(large.max_residual < small.max_residual);
    // Leading corrections scale like 1/sqrt(N).
    CHECK(large.max_residual == Approx(0.5 * small.max_residual).epsilon(0.1));
    for (const auto& p : small.pairs) CHECK(p.backward_error <= p.residual);
    CHECK(small.pass == (small.max_residual < 0.05));
  }
}

TEST_CASE("predicted energies approach the exact spectrum", "[analytics]") {
  const auto p = predict(kLarge, Regime::adjacency);
  const auto sys = spectral::diagonalize(
      reduced::search_hamiltonian(kLarge, WalkKind::adjacency, p.gamma_crit));
  // psi_{-1} sits between psi- and psi+.
  CHECK(sys.eigenvalue(0) == Approx(p.eigenpairs[0].energy).epsilon(1e-3));
  CHECK(sys.eigenvalue(1) == Approx(-1.0).epsilon(2e-3));
  CHECK(sys.eigenvalue(2) == Approx(p.eigenpairs[1].energy).epsilon(1e-3));
  const double gap = sys.eigenvalue(2) - sys.eigenvalue(0);
  CHECK(gap == Approx(p.predicted_gap()).epsilon(0.01));
}

TEST_CASE("table crossovers", "[analytics]") {
  const auto lo = faster_walk(BipartiteInstance(512, 256, 29, 5));
  CHECK(lo.threshold == Approx(30.0));
  CHECK(lo.varied == "k1");
  CHECK(lo.verdict == Verdict::adjacency_faster);
  CHECK(faster_walk(BipartiteInstance(512, 256, 30, 5)).verdict == Verdict::tie);
  CHECK(faster_walk(BipartiteInstance(512, 256, 31, 5)).verdict ==
        Verdict::laplacian_faster);

  const auto hi = faster_walk(BipartiteInstance(512, 1024, 3, 17));
  CHECK(hi.threshold == Approx(18.0));
  CHECK(hi.varied == "k2");
  CHECK(hi.verdict == Verdict::adjacency_faster);
  CHECK(faster_walk(BipartiteInstance(512, 1024, 3, 18)).verdict == Verdict::tie);

  const auto eq = faster_walk(BipartiteInstance(512, 530, 3, 5));
  CHECK(eq.verdict == Verdict::regimes_equivalent);
  CHECK(std::isnan(eq.threshold));
  CHECK(faster_walk(BipartiteInstance(512, 530, 3, 5), 0.5).verdict !=
        Verdict::regimes_equivalent);
}

TEST_CASE("verdict agrees with direct runtime comparison", "[analytics][property]") {
  std::mt19937_64 rng(1019);
  std::uniform_int_distribution<std::int64_t> size(2, 5000);
  int checked = 0;
  while (checked < 1000) {
    const std::int64_t n1 = size(rng);
    const std::int64_t n2 = size(rng);
    std::uniform_int_distribution<std::int64_t> m1(0, std::min<std::int64_t>(n1, 80));
    std::uniform_int_distribution<std::int64_t> m2(0, std::min<std::int64_t>(n2, 80));
    const std::int64_t k1 = m1(rng);
    const std::int64_t k2 = m2(rng);
    if (!validate_instance(n1, n2, k1, k2).empty()) continue;
    const BipartiteInstance inst(n1, n2, k1, k2);
    const auto v = faster_walk(inst);
    if (v.verdict == Verdict::regimes_equivalent) continue;
    const auto rt = runtimes(inst);
    const double lap = n1 > n2 ? rt.t_a : rt.t_b;
    CAPTURE(inst.describe(), rt.t_star, lap, v.threshold);
    if (v.verdict == Verdict::adjacency_faster) CHECK(rt.t_star < lap);
    if (v.verdict == Verdict::laplacian_faster) CHECK(rt.t_star > lap);
    ++checked;
  }
}

TEST_CASE("harmonic numbers and uniform coupon collector", "[analytics]") {
  CHECK(harmonic_number(1) == Rational{1, 1});
  CHECK(harmonic_number(4) == Rational{25, 12});
  CHECK(harmonic_number(0) == Rational{0, 1});
  CHECK(harmonic_number_value(10) == Approx(7381.0 / 2520.0));
  CHECK(expected_repetitions_laplacian(3, 5) == Rational{203, 12});
  CHECK(expected_repetitions_laplacian(0, 1) == Rational{1, 1});
  CHECK(expected_repetitions_laplacian_value(3, 5) == Approx(203.0 / 12.0));
  CHECK_THROWS_AS(harmonic_number(200), ParameterError);
  CHECK(expected_repetitions_laplacian_value(200, 0) ==
        Approx(200.0 * (std::log(200.0) + 0.5772156649 + 1.0 / 400)).epsilon(1e-6));
}

TEST_CASE("non-uniform coupon integral", "[analytics]") {
  // Frozen adaptive-quadrature reference values.
  CHECK(expected_repetitions_adjacency(kCanonical) ==
        Approx(26.36800144300145).epsilon(1e-8));
  CHECK(expected_repetitions_adjacency(BipartiteInstance(512, 1024, 3, 7)) ==
        Approx(34.220526695526694).epsilon(1e-8));
  CHECK(expected_repetitions_adjacency(BipartiteInstance(100, 400, 1, 0)) ==
        Approx(1.0).epsilon(1e-8));
}

TEST_CASE("equal parts reduce to the uniform collector", "[analytics][property]") {
  for (std::int64_t k : {1, 2, 5, 9, 16}) {
    const BipartiteInstance inst(300, 300, k, k);
    const double uniform = static_cast<double>(2 * k) * harmonic_number_value(2 * k);
    CHECK(expected_repetitions_adjacency(inst) == Approx(uniform).epsilon(1e-8));
  }
}

TEST_CASE("success from the uniform state", "[analytics]") {
  CHECK(success_bound_from_s(kCanonical) ==
        Approx(0.5 + std::sqrt(512.0 * 256.0) / 768.0));
  const auto p = predict(kCanonical, Regime::adjacency);
  const double observed = spectral::success_probability(
      kCanonical,
      reduced::search_hamiltonian(kCanonical, WalkKind::adjacency, p.gamma_crit),
      reduced::state_s(kCanonical).to_complex(), p.runtime, Targets::both());
  // Frozen matrix-exponential reference.
  CHECK(observed == Approx(0.9751888091435222).epsilon(1e-9));
  CHECK(std::abs(observed - success_bound_from_s(kCanonical)) <= 0.03);
}

TEST_CASE("uniform-state success bound over random instances", "[analytics][property]") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> size(1, 100000);
  for (int i = 0; i < 50; ++i) {
    const BipartiteInstance inst(size(rng), size(rng), 1, 1);
    CHECK(success_bound_from_s(inst) >= 0.5);
    CHECK(success_bound_from_s(inst) <= 1.0);
  }
}

TEST_CASE("delta is approximately stationary", "[analytics]") {
  const auto small = delta_phase_invariance_check(kCanonical);
  const auto large = delta_phase_invariance_check(kLarge);
  CHECK(std::abs(small.overlap_with_sigma) < 1e-14);
  CHECK(large.residual < small.residual);
  CHECK(large.residual == Approx(0.5 * small.residual).epsilon(0.1));
  CHECK(large.leading_order_residual < small.leading_order_residual);
}
