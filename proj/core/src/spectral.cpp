#include "qwalk/spectral.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk::spectral {

EigenSystem diagonalize(const HermitianOperator& h) {
  return eigen::diagonalize(h.matrix);
}

Propagator::Propagator(EigenSystem system, std::span<const Complex> psi0)
    : system_(std::move(system)), coeffs_(system_.dim()) {
  if (psi0.size() != system_.dim()) {
    throw ParameterError("initial state length does not match the operator");
  }
  for (std::size_t i = 0; i < system_.dim(); ++i) {
    auto v = system_.eigenvector(i);
    Complex acc = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) acc += v[k] * psi0[k];
    coeffs_[i] = acc;
  }
}

Propagator::Propagator(const HermitianOperator& h,
                       std::span<const Complex> psi0)
    : Propagator(diagonalize(h), psi0) {}

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ParameterError("evolution time must be finite and non-negative");
  }
}

Complex phase(double energy, double t) {
  return std::polar(1.0, -energy * t);
}

}  // namespace

ComplexVector Propagator::state(double t) const {
  check_time(t);
  const std::size_t n = system_.dim();
  ComplexVector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex w = phase(system_.eigenvalue(i), t) * coeffs_[i];
    auto v = system_.eigenvector(i);
    for (std::size_t k = 0; k < n; ++k) out[k] += w * v[k];
  }
  return out;
}

Complex Propagator::amplitude(std::size_t index, double t) const {
  check_time(t);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < system_.dim(); ++i) {
    acc += phase(system_.eigenvalue(i), t) * coeffs_[i] *
           system_.eigenvector(i)[index];
  }
  return acc;
}

double Propagator::energy() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < system_.dim(); ++i) {
    acc += system_.eigenvalue(i) * std::norm(coeffs_[i]);
  }
  return acc;
}

ComplexVector evolve(const HermitianOperator& h, std::span<const Complex> psi0,
                     double t) {
  check_time(t);
  return Propagator(h, psi0).state(t);
}

double expectation(const HermitianOperator& h, std::span<const Complex> psi) {
  auto hpsi = h.matrix.apply(psi);
  return dot(psi, std::span<const Complex>(hpsi)).real();
}

double success_probability(const ReducedBasis& basis, const Propagator& prop,
                           double t, Targets targets) {
  if (targets.empty()) throw ParameterError("target set is empty");
  if (prop.system().dim() != basis.dim()) {
    throw ParameterError("propagator does not act on this reduced basis");
  }
  double p = 0.0;
  if (targets.a) p += std::norm(prop.amplitude(basis.require(Component::a), t));
  if (targets.b) p += std::norm(prop.amplitude(basis.require(Component::b), t));
  return p;
}

double success_probability(const BipartiteInstance& inst,
                           const HermitianOperator& h,
                           std::span<const Complex> psi0, double t,
                           Targets targets) {
  const ReducedBasis basis(inst);
  if (h.basis == BasisTag::full || h.dim() != basis.dim()) {
    throw ParameterError("success_probability expects a reduced operator");
  }
  return success_probability(basis, Propagator(h, psi0), t, targets);
}

double vertex_success_probability(const BipartiteInstance& inst,
                                  const graph::MarkedSet& marks,
                                  std::span<const Complex> full,
                                  Targets targets) {
  if (targets.empty()) throw ParameterError("target set is empty");
  if (static_cast<std::int64_t>(full.size()) != inst.total()) {
    throw ParameterError("full-space state must have length n1 + n2");
  }
  double p = 0.0;
  if (targets.a) {
    for (auto v : marks.v1()) p += std::norm(full[static_cast<std::size_t>(v)]);
  }
  if (targets.b) {
    for (auto v : marks.v2()) p += std::norm(full[static_cast<std::size_t>(v)]);
  }
  return p;
}

std::vector<double> uniform_grid(double t_max, std::size_t n_points) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw ParameterError("t_max must be positive");
  }
  if (n_points < 2) throw ParameterError("need at least two time points");
  std::vector<double> times(n_points);
  const double step = t_max / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    times[i] = static_cast<double>(i) * step;
  }
  times.back() = t_max;
  return times;
}

EvolutionSeries probability_series(const BipartiteInstance& inst,
                                   const HermitianOperator& h,
                                   std::span<const Complex> psi0, double t_max,
                                   std::size_t n_points, Targets targets) {
  const ReducedBasis basis(inst);
  if (h.basis == BasisTag::full || h.dim() != basis.dim()) {
    throw ParameterError("probability_series expects a reduced operator");
  }
  EvolutionSeries series;
  series.times = uniform_grid(t_max, n_points);
  const Propagator prop(h, psi0);
  series.values.reserve(n_points);
  for (double t : series.times) {
    series.values.push_back(success_probability(basis, prop, t, targets));
  }
  return series;
}

}  // namespace qwalk::spectral
