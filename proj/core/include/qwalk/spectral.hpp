#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/eigen.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/instance.hpp"
#include "qwalk/matrix.hpp"
#include "qwalk/operator.hpp"
#include "qwalk/reduced.hpp"

namespace qwalk::spectral {

EigenSystem diagonalize(const HermitianOperator& h);

/// Solution of i d/dt psi = H psi for a fixed initial state, evaluated through
/// the spectral decomposition psi(t) = sum_i exp(-i E_i t) <v_i|psi0> v_i.
/// Immutable after construction; state() may be called concurrently.
class Propagator {
 public:
  Propagator(EigenSystem system, std::span<const Complex> psi0);
  Propagator(const HermitianOperator& h, std::span<const Complex> psi0);

  const EigenSystem& system() const noexcept { return system_; }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// Throws ParameterError for negative or non-finite t.
  ComplexVector state(double t) const;
  /// Amplitude of the state at time t along basis index i.
  Complex amplitude(std::size_t i, double t) const;
  double energy() const;

 private:
  EigenSystem system_;
  ComplexVector coeffs_;
};

/// Throws ParameterError on dimension mismatch or t < 0.
ComplexVector evolve(const HermitianOperator& h, std::span<const Complex> psi0,
                     double t);

/// <psi|H|psi>.
double expectation(const HermitianOperator& h, std::span<const Complex> psi);

/// Sum over target classes of |<target|psi(t)>|^2 for a reduced H.
/// Throws ParameterError if targets is empty or names an absent class.
double success_probability(const BipartiteInstance& inst,
                           const HermitianOperator& h,
                           std::span<const Complex> psi0, double t,
                           Targets targets);
double success_probability(const ReducedBasis& basis, const Propagator& prop,
                           double t, Targets targets);

/// Probability mass on the marked vertices named by targets, for a full-space
/// state (sum of |psi_i|^2 over the vertices themselves).
double vertex_success_probability(const BipartiteInstance& inst,
                                  const graph::MarkedSet& marks,
                                  std::span<const Complex> full,
                                  Targets targets);

struct EvolutionSeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Uniform grid of n_points over [0, t_max], both ends included.
/// Throws ParameterError unless t_max > 0 and n_points >= 2.
EvolutionSeries probability_series(const BipartiteInstance& inst,
                                   const HermitianOperator& h,
                                   std::span<const Complex> psi0, double t_max,
                                   std::size_t n_points, Targets targets);

std::vector<double> uniform_grid(double t_max, std::size_t n_points);

}  // namespace qwalk::spectral
