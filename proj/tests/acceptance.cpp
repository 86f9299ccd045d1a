// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracle_instances.hpp"
#include "qwalk/analytics.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/reduced.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

namespace {

namespace tol {
constexpr double peak_time_rel = 0.02;
constexpr double peak_prob_laplacian = 0.95;
constexpr double peak_prob_adjacency = 0.98;
constexpr double component_prob = 0.03;
constexpr double gamma_rel = 0.05;
constexpr double coupon_integral = 0.01;
constexpr double success_from_s = 0.03;
constexpr double random_success_floor = 0.5;
constexpr double oracle_prob = 1e-9;
constexpr double oracle_leakage = 1e-9;
constexpr double unitarity = 1e-10;
constexpr double composition = 1e-9;
constexpr double energy = 1e-9;
constexpr double eig_residual_rel = 1e-10;
constexpr double completeness = 1e-9;
constexpr double sigma_eigvec = 1e-10;
constexpr double laplacian_kernel = 1e-12;
constexpr double eigenpair_residual = 0.05;
constexpr double detune_inside = 0.05;
constexpr double detune_outside_fraction = 0.5;
}  // namespace tol

const BipartiteInstance kCanonical(512, 256, 3, 5);
const BipartiteInstance kLarge(2048, 1024, 3, 5);

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const char* fmt, auto... args) {
    std::string line = fmt;
    if constexpr (sizeof...(args) > 0) {
      char buf[320];
      std::snprintf(buf, sizeof buf, fmt, args...);
      line = buf;
    }
    details.push_back(std::string(ok ? "ok   " : "MISS ") + line);
    pass = pass && ok;
  }
};

bool near_rel(double observed, double expected, double rel) {
  return std::abs(observed - expected) <= rel * std::abs(expected);
}

experiments::PeakResult regime_peak(const BipartiteInstance& inst, Regime regime) {
  const auto p = analytics::predict(inst, regime);
  return experiments::find_peak(inst, p.kind, p.gamma_crit, p.initial_state,
                                p.targets, 2.0 * p.runtime);
}

Criterion laplacian_peak(int id, Regime regime, double t_expected) {
  Criterion c{id, "Laplacian peak in " +
                      std::string(regime == Regime::laplacian_a ? "|a>" : "|b>")};
  const auto peak = regime_peak(kCanonical, regime);
  c.expect(peak.found, "interior peak found");
  c.expect(near_rel(peak.t_peak, t_expected, tol::peak_time_rel),
           "t_peak = %.6f, expected %.4f +/- %.0f%%", peak.t_peak, t_expected,
           100 * tol::peak_time_rel);
  c.expect(peak.p_peak >= tol::peak_prob_laplacian, "p_peak = %.6f >= %.2f",
           peak.p_peak, tol::peak_prob_laplacian);
  return c;
}

Criterion adjacency_peak() {
  Criterion c{3, "adjacency peak from |sigma>"};
  const auto p = analytics::predict(kCanonical, Regime::adjacency);
  const auto peak = regime_peak(kCanonical, Regime::adjacency);
  c.expect(near_rel(peak.t_peak, 13.94, tol::peak_time_rel),
           "t_peak = %.6f, expected 13.94 +/- 2%%", peak.t_peak);
  c.expect(peak.p_peak >= tol::peak_prob_adjacency, "p_total = %.6f >= %.2f",
           peak.p_peak, tol::peak_prob_adjacency);
  const ReducedBasis basis(kCanonical);
  const spectral::Propagator prop(
      reduced::search_hamiltonian(kCanonical, p.kind, p.gamma_crit),
      p.initial_state.to_complex());
  const double pa =
      spectral::success_probability(basis, prop, peak.t_peak, Targets::only_a());
  const double pb =
      spectral::success_probability(basis, prop, peak.t_peak, Targets::only_b());
  c.expect(std::abs(pa - 0.231) <= tol::component_prob, "p_a = %.6f, expected 0.231",
           pa);
  c.expect(std::abs(pb - 0.769) <= tol::component_prob, "p_b = %.6f, expected 0.769",
           pb);
  return c;
}

Criterion critical_gammas() {
  Criterion c{4, "numerical critical gamma"};
  const struct {
    Regime regime;
    double expected;
  } cases[] = {{Regime::laplacian_a, 1.0 / 256},
               {Regime::laplacian_b, 1.0 / 512},
               {Regime::adjacency, 1.0 / std::sqrt(512.0 * 256.0)}};
  for (const auto& k : cases) {
    const auto r = experiments::critical_gamma_search(kCanonical, k.regime);
    c.expect(near_rel(r.gamma, k.expected, tol::gamma_rel),
             "%s: gamma = %.7f, expected %.7f", to_string(k.regime).data(), r.gamma,
             k.expected);
  }
  return c;
}

Criterion coupons() {
  Criterion c{5, "coupon collector"};
  const auto exact = analytics::expected_repetitions_laplacian(3, 5);
  c.expect(exact == analytics::Rational{203, 12}, "uniform = %lld/%lld",
           static_cast<long long>(exact.num), static_cast<long long>(exact.den));
  const double integral = analytics::expected_repetitions_adjacency(kCanonical);
  c.expect(std::abs(integral - 26.368) <= tol::coupon_integral,
           "non-uniform = %.6f, expected 26.368", integral);
  return c;
}

Criterion crossovers() {
  Criterion c{6, "runtime crossovers"};
  const struct {
    std::int64_t n1, n2, fixed;
    bool vary_k1;
    std::int64_t to, crossover;
  } sweeps[] = {{512, 256, 5, true, 60, 30}, {512, 1024, 3, false, 40, 18}};
  for (const auto& s : sweeps) {
    int disagreements = 0;
    std::int64_t first_not_faster = -1;
    for (std::int64_t k = 1; k <= s.to; ++k) {
      const BipartiteInstance inst(s.n1, s.n2, s.vary_k1 ? k : s.fixed,
                                   s.vary_k1 ? s.fixed : k);
      const auto v = analytics::faster_walk(inst);
      const auto rt = analytics::runtimes(inst);
      const double lap = s.vary_k1 ? rt.t_a : rt.t_b;
      const bool adjacency_faster = v.verdict == analytics::Verdict::adjacency_faster;
      if (adjacency_faster != (k < s.crossover)) ++disagreements;
      if (v.verdict != analytics::Verdict::tie && adjacency_faster != (rt.t_star < lap)) {
        ++disagreements;
      }
      if (!adjacency_faster && first_not_faster < 0) first_not_faster = k;
    }
    c.expect(disagreements == 0 && first_not_faster == s.crossover,
             "K(%lld,%lld): reversal at %lld (expected %lld), %d disagreements",
             static_cast<long long>(s.n1), static_cast<long long>(s.n2),
             static_cast<long long>(first_not_faster),
             static_cast<long long>(s.crossover), disagreements);
  }
  return c;
}

double success_from_s_at_t_star(const BipartiteInstance& inst) {
  const auto p = analytics::predict(inst, Regime::adjacency);
  return spectral::success_probability(
      inst, reduced::search_hamiltonian(inst, WalkKind::adjacency, p.gamma_crit),
      reduced::state_s(inst).to_complex(), p.runtime, p.targets);
}

Criterion start_from_s() {
  Criterion c{7, "adjacency walk started from |s>"};
  const double observed = success_from_s_at_t_star(kCanonical);
  const double bound = analytics::success_bound_from_s(kCanonical);
  c.expect(std::abs(observed - bound) <= tol::success_from_s,
           "p(t*) = %.6f, expected %.6f +/- %.2f", observed, bound,
           tol::success_from_s);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> size(256, 4096);
  std::uniform_int_distribution<std::int64_t> marks(0, 8);
  double worst = 1.0;
  std::string worst_name;
  for (int i = 0; i < 50;) {
    const auto n1 = size(rng), n2 = size(rng), k1 = marks(rng), k2 = marks(rng);
    if (!validate_instance(n1, n2, k1, k2).empty()) continue;
    ++i;
    const BipartiteInstance inst(n1, n2, k1, k2);
    const double p = success_from_s_at_t_star(inst);
    if (p < worst) {
      worst = p;
      worst_name = inst.describe();
    }
  }
  c.expect(worst >= tol::random_success_floor,
           "50 random instances (n_i in [256,4096], k_i <= 8): min p(t*) = %.4f at %s",
           worst, worst_name.c_str());
  return c;
}

Criterion oracle() {
  Criterion c{8, "full-space oracle equivalence"};
  const auto instances = oracle_instances();
  double worst_prob = 0.0;
  double worst_leak = 0.0;
  int samples = 0;
  for (const auto& inst : instances) {
    const auto marks = graph::MarkedSet::canonical(inst);
    const ReducedBasis basis(inst);
    const Targets targets{basis.has(Component::a), basis.has(Component::b)};
    for (auto kind : {WalkKind::laplacian, WalkKind::adjacency}) {
      const double gamma = 1.0 / static_cast<double>(inst.n2());
      const auto init = reduced::state_s(inst);
      const spectral::Propagator red(reduced::search_hamiltonian(inst, kind, gamma),
                                     init.to_complex());
      const spectral::Propagator full(
          graph::search_hamiltonian(inst, marks, kind, gamma),
          to_complex(reduced::lift(inst, marks, init)));
      for (double t : spectral::uniform_grid(60.0, 50)) {
        const auto psi = full.state(t);
        worst_prob = std::max(
            worst_prob,
            std::abs(spectral::vertex_success_probability(inst, marks, psi, targets) -
                     spectral::success_probability(basis, red, t, targets)));
        worst_leak = std::max(worst_leak, reduced::project(inst, marks, psi).residual);
        ++samples;
      }
    }
  }
  c.expect(instances.size() >= 10, "%zu instances with N <= 60", instances.size());
  c.expect(worst_prob <= tol::oracle_prob, "max |p_full - p_reduced| = %.3e over %d samples",
           worst_prob, samples);
  c.expect(worst_leak < tol::oracle_leakage, "max leakage = %.3e", worst_leak);
  return c;
}

Criterion properties() {
  Criterion c{9, "property suite"};
  const auto h = reduced::search_hamiltonian(kCanonical, WalkKind::laplacian, 1.0 / 256);
  const auto psi0 = reduced::state_s(kCanonical).to_complex();
  const spectral::Propagator prop(h, psi0);
  const double e0 = spectral::expectation(h, psi0);
  double unitarity = 0.0, composition = 0.0, energy = 0.0;
  for (double t : {0.5, 8.0, 25.13, 400.0}) {
    const auto psi = prop.state(t);
    unitarity = std::max(unitarity, std::abs(norm(psi) - 1.0));
    energy = std::max(energy, std::abs(spectral::expectation(h, psi) - e0));
    const auto split = spectral::evolve(h, spectral::evolve(h, psi0, 0.4 * t), 0.6 * t);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      composition = std::max(composition, std::abs(split[i] - psi[i]));
    }
  }
  c.expect(unitarity <= tol::unitarity, "unitarity error %.2e", unitarity);
  c.expect(composition <= tol::composition, "composition error %.2e", composition);
  c.expect(energy <= tol::energy, "energy drift %.2e", energy);

  double eig = 0.0;
  for (const auto& inst : oracle_instances()) {
    const auto full = graph::search_hamiltonian(inst, graph::MarkedSet::canonical(inst),
                                                WalkKind::adjacency, 0.2);
    eig = std::max(eig, spectral::diagonalize(full).max_residual(full.matrix) /
                            full.matrix.frobenius_norm());
  }
  eig = std::max(eig, spectral::diagonalize(h).max_residual(h.matrix) /
                          h.matrix.frobenius_norm());
  c.expect(eig <= tol::eig_residual_rel, "eigen residual / ||H|| = %.2e", eig);

  const auto curve = experiments::overlap_sweep(
      kCanonical, WalkKind::laplacian, experiments::log_grid(1e-4, 4e-2, 61),
      {{"s", reduced::state_s(kCanonical)},
       {"a", reduced::basis_state(kCanonical, Component::a)},
       {"b", reduced::basis_state(kCanonical, Component::b)}});
  double completeness = 0.0;
  for (const auto& per_gamma : curve.overlaps) {
    for (const auto& per_ref : per_gamma) {
      double sum = 0.0;
      for (double o : per_ref) sum += o;
      completeness = std::max(completeness, std::abs(sum - 1.0));
    }
  }
  c.expect(completeness <= tol::completeness, "overlap completeness error %.2e",
           completeness);

  const auto a = reduced::reduced_adjacency(kCanonical).matrix;
  const auto sigma = reduced::state_sigma(kCanonical);
  const auto as = a.apply(sigma.amps());
  double sig = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    sig = std::max(sig, std::abs(as[i] - std::sqrt(512.0 * 256.0) * sigma.amps()[i]));
  }
  c.expect(sig <= tol::sigma_eigvec, "A sigma - sqrt(n1 n2) sigma = %.2e", sig);

  const BipartiteInstance graph_only(40, 20, 1, 0);
  const auto lap = graph::build_laplacian(graph_only).matrix;
  double kernel = 0.0;
  for (double x : lap.apply(std::vector<double>(60, 1.0))) {
    kernel = std::max(kernel, std::abs(x));
  }
  c.expect(kernel <= tol::laplacian_kernel, "L * uniform = %.2e", kernel);
  return c;
}

Criterion perturbation() {
  Criterion c{10, "perturbative eigenpairs and detuning"};
  for (auto regime : {Regime::laplacian_a, Regime::laplacian_b, Regime::adjacency}) {
    const auto small =
        analytics::verify_eigenpairs(kCanonical, analytics::predict(kCanonical, regime),
                                     tol::eigenpair_residual);
    const auto large = analytics::verify_eigenpairs(
        kLarge, analytics::predict(kLarge, regime), tol::eigenpair_residual);
    for (std::size_t i = 0; i < small.pairs.size(); ++i) {
      const auto& s = small.pairs[i];
      const auto& l = large.pairs[i];
      c.expect(s.residual < tol::eigenpair_residual,
               "%s %s: residual %.4f at K(512,256) (< %.2f)", to_string(regime).data(),
               s.label.c_str(), s.residual, tol::eigenpair_residual);
      c.expect(l.residual < s.residual, "%s %s: residual %.4f at K(2048,1024)",
               to_string(regime).data(), l.label.c_str(), l.residual);
    }
  }

  const auto p = analytics::predict(kCanonical, Regime::laplacian_a);
  const double n = static_cast<double>(kCanonical.total());
  const auto sweep = experiments::detuning_sweep(
      kCanonical, Regime::laplacian_a, p.gamma_crit, {0.0, 1.0 / (n * n), 5.0 / n});
  const double base = sweep.peaks[0].p_peak;
  c.expect(std::abs(sweep.peaks[1].p_peak - base) <= tol::detune_inside,
           "eps = N^-2: p_peak %.4f vs %.4f undetuned", sweep.peaks[1].p_peak, base);
  c.expect(sweep.peaks[2].p_peak < tol::detune_outside_fraction * base,
           "eps = 5/N: p_peak %.4f < %.4f", sweep.peaks[2].p_peak,
           tol::detune_outside_fraction * base);
  return c;
}

}  // namespace

int main() {
  const std::vector<Criterion> results{
      laplacian_peak(1, Regime::laplacian_a, 8.0 * std::numbers::pi),
      laplacian_peak(2, Regime::laplacian_b, 19.47),
      adjacency_peak(),
      critical_gammas(),
      coupons(),
      crossovers(),
      start_from_s(),
      oracle(),
      properties(),
      perturbation(),
  };
  int failures = 0;
  for (const auto& c : results) {
    std::printf("%s criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str());
    for (const auto& d : c.details) std::printf("    %s\n", d.c_str());
    failures += c.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
  return failures == 0 ? 0 : 1;
}
