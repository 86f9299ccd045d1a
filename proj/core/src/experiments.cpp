#include "qwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "qwalk/analytics.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::experiments {
namespace {

constexpr double kInvGolden = 0.6180339887498949;

// Golden-section maximization of f on [lo, hi] until the bracket is narrower
// than width. Returns (argmax, max).
template <typename F>
std::pair<double, double> golden_maximize(const F& f, double lo, double hi,
                                          double width) {
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200; ++iter) {
    if (hi - lo <= width) break;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

ReducedState initial_state_for(const BipartiteInstance& inst, Regime regime) {
  return regime == Regime::adjacency ? reduced::state_sigma(inst)
                                     : reduced::state_s(inst);
}

double peak_probability(const BipartiteInstance& inst, Regime regime,
                        const ReducedState& initial, Targets targets,
                        double gamma, double t_max) {
  return find_peak(inst, kind_of(regime), gamma, initial, targets, t_max)
      .p_peak;
}

}  // namespace

OverlapCurve overlap_sweep(const BipartiteInstance& inst, WalkKind kind,
                           const std::vector<double>& gamma_grid,
                           const std::vector<ReferenceState>& references) {
  if (gamma_grid.empty()) throw ParameterError("gamma grid is empty");
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    if (!(gamma_grid[i] > 0.0) ||
        (i > 0 && !(gamma_grid[i] > gamma_grid[i - 1]))) {
      throw ParameterError("gamma grid must be positive and strictly increasing");
    }
  }
  const ReducedBasis basis(inst);
  for (const auto& ref : references) {
    if (!(ref.state.basis() == basis)) {
      throw ParameterError("reference state '" + ref.name +
                           "' is not in this instance's reduced basis");
    }
  }

  OverlapCurve curve;
  curve.gammas = gamma_grid;
  curve.dim = basis.dim();
  for (const auto& ref : references) curve.reference_names.push_back(ref.name);
  curve.overlaps.resize(gamma_grid.size());
  curve.energies.resize(gamma_grid.size());

  detail::parallel_for(gamma_grid.size(), [&](std::size_t g) {
    const auto sys = spectral::diagonalize(
        reduced::search_hamiltonian(inst, kind, gamma_grid[g]));
    auto& rows = curve.overlaps[g];
    rows.assign(references.size(), std::vector<double>(basis.dim()));
    for (std::size_t r = 0; r < references.size(); ++r) {
      for (std::size_t i = 0; i < basis.dim(); ++i) {
        const double o = dot(references[r].state.amps(), sys.eigenvector(i));
        rows[r][i] = o * o;
      }
    }
    curve.energies[g].assign(sys.eigenvalues().begin(), sys.eigenvalues().end());
  });
  return curve;
}

PeakResult find_peak(const ReducedBasis& basis, const spectral::Propagator& prop,
                     Targets targets, double t_max) {
  const auto times = spectral::uniform_grid(t_max, kPeakScanPoints);
  auto prob = [&](double t) {
    return spectral::success_probability(basis, prop, t, targets);
  };
  std::vector<double> p(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) p[i] = prob(times[i]);

  const auto best = std::max_element(p.begin(), p.end());
  const double global_max = *best;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i] > p[i - 1] && p[i] >= p[i + 1] && p[i] > 0.5 * global_max) {
      auto [t, value] = golden_maximize(prob, times[i - 1], times[i + 1],
                                        kPeakTimeTolerance * times[i]);
      if (value < p[i]) {
        t = times[i];
        value = p[i];
      }
      return {t, value, true};
    }
  }
  const auto at = static_cast<std::size_t>(best - p.begin());
  return {times[at], global_max, false};
}

PeakResult find_peak(const BipartiteInstance& inst, WalkKind kind, double gamma,
                     const ReducedState& initial, Targets targets,
                     double t_max) {
  const ReducedBasis basis(inst);
  if (!(initial.basis() == basis)) {
    throw ParameterError("initial state is not in this instance's basis");
  }
  const spectral::Propagator prop(
      reduced::search_hamiltonian(inst, kind, gamma), initial.to_complex());
  return find_peak(basis, prop, targets, t_max);
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw ParameterError("log grid needs 0 < lo < hi and n >= 2");
  }
  std::vector<double> grid(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = lo * std::exp(step * static_cast<double>(i));
  }
  grid.back() = hi;
  return grid;
}

GammaSearchResult critical_gamma_search(const BipartiteInstance& inst,
                                        Regime regime) {
  const auto prediction = analytics::predict(inst, regime);
  const double n1 = static_cast<double>(inst.n1());
  const double n2 = static_cast<double>(inst.n2());
  const double t_max = 2.0 * prediction.runtime;
  const auto initial = initial_state_for(inst, regime);
  const auto targets = prediction.targets;

  auto grid = log_grid(0.1 / std::max(n1, n2), 10.0 / std::sqrt(n1 * n2),
                       kGammaGridPoints);
  if (regime != Regime::adjacency) {
    // The two Laplacian resonances sit at 1/n2 and 1/n1; search half the
    // log-distance between them around the requested one.
    const double half_width = std::max(0.5 * std::abs(std::log(n1 / n2)), 0.15);
    const double center = prediction.gamma_crit;
    std::erase_if(grid, [&](double g) {
      return std::abs(std::log(g / center)) > half_width;
    });
    if (grid.size() < 3) {
      throw NumericalError("too few grid points near the analytic candidate");
    }
  }

  std::vector<double> landscape(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    landscape[i] =
        peak_probability(inst, regime, initial, targets, grid[i], t_max);
  });

  const auto [lo_it, hi_it] =
      std::minmax_element(landscape.begin(), landscape.end());
  if (*hi_it - *lo_it < kFlatLandscape) {
    std::ostringstream msg;
    msg << "degenerate regime: peak probability varies only from " << *lo_it
        << " to " << *hi_it << " over the gamma grid";
    throw NumericalError(msg.str());
  }

  const auto j = static_cast<std::size_t>(hi_it - landscape.begin());
  const double lo = std::log(grid[j == 0 ? 0 : j - 1]);
  const double hi = std::log(grid[std::min(j + 1, grid.size() - 1)]);
  // Refining in log(gamma): an absolute width of 1e-4 there is a relative
  // width of 1e-4 in gamma.
  auto objective = [&](double log_gamma) {
    return peak_probability(inst, regime, initial, targets,
                            std::exp(log_gamma), t_max);
  };
  double gamma = grid[j];
  if (hi > lo) {
    const auto [log_gamma, value] =
        golden_maximize(objective, lo, hi, kGammaTolerance);
    if (value >= landscape[j]) gamma = std::exp(log_gamma);
  }

  GammaSearchResult result{regime, gamma, {}, *lo_it, *hi_it};
  result.peak = find_peak(inst, kind_of(regime), gamma, initial, targets, t_max);
  return result;
}

std::vector<GammaSearchResult> critical_gamma_search(
    const BipartiteInstance& inst, WalkKind kind) {
  std::vector<GammaSearchResult> out;
  if (kind == WalkKind::adjacency) {
    out.push_back(critical_gamma_search(inst, Regime::adjacency));
    return out;
  }
  if (inst.k1() > 0) out.push_back(critical_gamma_search(inst, Regime::laplacian_a));
  if (inst.k2() > 0) out.push_back(critical_gamma_search(inst, Regime::laplacian_b));
  return out;
}

DetuningSweep detuning_sweep(const BipartiteInstance& inst, Regime regime,
                             double critical_gamma,
                             const std::vector<double>& epsilons) {
  if (std::find(epsilons.begin(), epsilons.end(), 0.0) == epsilons.end()) {
    throw ParameterError("detuning offsets must include 0");
  }
  for (double eps : epsilons) {
    if (!(critical_gamma + eps > 0.0)) {
      throw ParameterError("detuned gamma must stay positive");
    }
  }
  const auto prediction = analytics::predict(inst, regime);
  const double t_max = 3.0 * prediction.runtime;
  const auto initial = initial_state_for(inst, regime);

  DetuningSweep sweep{epsilons, std::vector<PeakResult>(epsilons.size())};
  detail::parallel_for(epsilons.size(), [&](std::size_t i) {
    sweep.peaks[i] = find_peak(inst, kind_of(regime), critical_gamma + epsilons[i],
                               initial, prediction.targets, t_max);
  });
  return sweep;
}

}  // namespace qwalk::experiments
