#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qwalk/instance.hpp"
#include "qwalk/reduced.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::experiments {

struct ReferenceState {
  std::string name;
  ReducedState state;
};

/// |<ref|psi_i>|^2 for every gamma, reference and eigenstate (ascending
/// energy).
struct OverlapCurve {
  std::vector<double> gammas;
  std::vector<std::string> reference_names;
  std::size_t dim = 0;
  /// [gamma][reference][eigenstate]
  std::vector<std::vector<std::vector<double>>> overlaps;
  /// [gamma][eigenstate]
  std::vector<std::vector<double>> energies;
};

/// Throws ParameterError unless the grid is non-empty, positive and strictly
/// increasing.
OverlapCurve overlap_sweep(const BipartiteInstance& inst, WalkKind kind,
                           const std::vector<double>& gamma_grid,
                           const std::vector<ReferenceState>& references);

struct PeakResult {
  double t_peak = 0.0;
  double p_peak = 0.0;
  /// False when the scan had no interior local maximum; t_peak/p_peak then
  /// hold the best scanned point.
  bool found = false;
};

inline constexpr std::size_t kPeakScanPoints = 400;
inline constexpr double kPeakTimeTolerance = 1e-6;

/// First local maximum of the success probability whose value exceeds half
/// the global maximum of a 400-point scan over [0, t_max], refined by golden
/// section to relative 1e-6 in t.
PeakResult find_peak(const ReducedBasis& basis, const spectral::Propagator& prop,
                     Targets targets, double t_max);
PeakResult find_peak(const BipartiteInstance& inst, WalkKind kind,
                     double gamma, const ReducedState& initial,
                     Targets targets, double t_max);

struct GammaSearchResult {
  Regime regime;
  double gamma;
  PeakResult peak;
  /// p_peak range over the scanned grid.
  double landscape_min;
  double landscape_max;
};

inline constexpr std::size_t kGammaGridPoints = 120;
inline constexpr double kGammaTolerance = 1e-4;
inline constexpr double kFlatLandscape = 0.05;

/// Numerical critical jumping rate: maximizes p_peak over a 120-point log
/// grid on [0.1/max(n1,n2), 10/sqrt(n1 n2)] (restricted to the neighbourhood
/// of the analytic candidate for the Laplacian regimes), then golden-section
/// refinement to relative 1e-4. Throws NumericalError when the landscape is
/// flat (max - min < 0.05).
GammaSearchResult critical_gamma_search(const BipartiteInstance& inst,
                                        Regime regime);
/// One result per regime of the walk: (a, b) for laplacian, one for adjacency.
std::vector<GammaSearchResult> critical_gamma_search(
    const BipartiteInstance& inst, WalkKind kind);

std::vector<double> log_grid(double lo, double hi, std::size_t n);

struct DetuningSweep {
  std::vector<double> epsilons;
  std::vector<PeakResult> peaks;
};

/// p_peak at gamma = critical_gamma + eps for each eps, searched within
/// [0, 3 * analytic runtime]. epsilons must contain 0 and keep gamma > 0.
DetuningSweep detuning_sweep(const BipartiteInstance& inst, Regime regime,
                             double critical_gamma,
                             const std::vector<double>& epsilons);

}  // namespace qwalk::experiments
