#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/instance.hpp"
#include "qwalk/reduced.hpp"

namespace qwalk::analytics {

struct PredictedEigenpair {
  std::string label;
  /// Normalized.
  ReducedState vector;
  double energy;
};

/// Closed-form description of one search regime at its critical jumping rate.
struct WalkPrediction {
  WalkKind kind;
  Regime regime;
  double gamma_crit;
  double runtime;
  ReducedState initial_state;
  Targets targets;
  ReducedState final_state;
  /// The two eigenpairs whose gap sets the runtime come first (lower energy
  /// first); the adjacency regime adds psi_{-1} when k1, k2 >= 1.
  std::vector<PredictedEigenpair> eigenpairs;
  /// Scale n^{-3/2} of the tolerated detuning of gamma_crit.
  double precision_scale;

  double predicted_gap() const noexcept {
    return eigenpairs[1].energy - eigenpairs[0].energy;
  }
};

/// Throws ParameterError when the regime needs a marked class that is empty
/// (k1 = 0 for laplacian_a, k2 = 0 for laplacian_b).
WalkPrediction predict(const BipartiteInstance& inst, Regime regime);

/// Closed-form runtimes; +inf when the regime has nothing to find.
struct Runtimes {
  double t_a;
  double t_b;
  double t_star;
};
Runtimes runtimes(const BipartiteInstance& inst);

struct EigenpairResidual {
  std::string label;
  double energy;
  /// ||H v - E v|| / ||v||.
  double residual;
  /// residual / ||H||_2.
  double backward_error;
};

struct EigenpairReport {
  std::vector<EigenpairResidual> pairs;
  /// Same check for the leading-order vectors (|r>, |u> in place of |s>,
  /// |sigma>).
  std::vector<EigenpairResidual> leading_order;
  double max_residual;
  double tolerance;
  bool pass;
};

/// Residuals of the predicted eigenpairs against the exact reduced search
/// Hamiltonian at gamma_crit.
EigenpairReport verify_eigenpairs(const BipartiteInstance& inst,
                                  const WalkPrediction& prediction,
                                  double tolerance);

enum class Verdict { adjacency_faster, laplacian_faster, tie, regimes_equivalent };
std::string_view to_string(Verdict v) noexcept;

struct SpeedVerdict {
  Verdict verdict;
  /// Boundary value of k1 (n1 > n2) or k2 (n1 < n2); NaN when equivalent.
  double threshold;
  /// "k1", "k2" or "" when the regimes are equivalent.
  std::string varied;
};

/// Tie tolerance on the threshold comparison (relative).
inline constexpr double kVerdictTieTolerance = 1e-12;

/// |n1 - n2| <= equivalence_scale * sqrt(n1 + n2) counts as n1 ~ n2.
SpeedVerdict faster_walk(const BipartiteInstance& inst,
                         double equivalence_scale = 1.0);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// n-th harmonic number as an exact fraction. Throws ParameterError on
/// 64-bit overflow (n beyond ~40).
Rational harmonic_number(std::int64_t n);
double harmonic_number_value(std::int64_t n);

/// k1 H_{k1} + k2 H_{k2}, exact.
Rational expected_repetitions_laplacian(std::int64_t k1, std::int64_t k2);
double expected_repetitions_laplacian_value(std::int64_t k1, std::int64_t k2);

/// Non-uniform coupon collector for the adjacency final state:
/// integral over [0, inf) of 1 - (1-e^{-n2 t/W})^{k1} (1-e^{-n1 t/W})^{k2},
/// W = k2 n1 + k1 n2. Throws NumericalError if quadrature does not converge.
double expected_repetitions_adjacency(const BipartiteInstance& inst);

/// ((sqrt n1 + sqrt n2)^2 / 2N) = 1/2 + sqrt(n1 n2)/N.
double success_bound_from_s(const BipartiteInstance& inst);

struct DeltaReport {
  /// ||H delta - <delta|H|delta> delta|| at gamma_*.
  double residual;
  /// Same for the leading-order |v> = (-|c> + |d>)/sqrt 2.
  double leading_order_residual;
  double energy;
  double overlap_with_sigma;
};
DeltaReport delta_phase_invariance_check(const BipartiteInstance& inst);

}  // namespace qwalk::analytics
