#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "qwalk/graph.hpp"
#include "qwalk/instance.hpp"
#include "qwalk/matrix.hpp"
#include "qwalk/operator.hpp"

namespace qwalk {

/// Vertex classes of the invariant subspace: marked V1 (a), marked V2 (b),
/// unmarked V1 (c), unmarked V2 (d). Each basis ket is the uniform
/// superposition over its class.
enum class Component : std::size_t { a = 0, b = 1, c = 2, d = 3 };

inline constexpr std::array<Component, 4> kAllComponents{
    Component::a, Component::b, Component::c, Component::d};

std::string_view to_string(Component c) noexcept;

/// Ordered basis of the invariant subspace with empty classes dropped.
class ReducedBasis {
 public:
  explicit ReducedBasis(const BipartiteInstance& inst);

  std::size_t dim() const noexcept { return dim_; }
  bool has(Component c) const noexcept {
    return index_[static_cast<std::size_t>(c)].has_value();
  }
  /// Position of c in the reduced vector, or nullopt if the class is empty.
  std::optional<std::size_t> index_of(Component c) const noexcept {
    return index_[static_cast<std::size_t>(c)];
  }
  /// Throws ParameterError if c is absent.
  std::size_t require(Component c) const;
  Component component_at(std::size_t i) const noexcept { return order_[i]; }
  /// Number of vertices in class c.
  std::int64_t class_size(Component c) const noexcept {
    return sizes_[static_cast<std::size_t>(c)];
  }

  friend bool operator==(const ReducedBasis&, const ReducedBasis&) = default;

 private:
  std::array<std::optional<std::size_t>, 4> index_{};
  std::array<Component, 4> order_{};
  std::array<std::int64_t, 4> sizes_{};
  std::size_t dim_ = 0;
};

/// Real amplitudes over a ReducedBasis.
class ReducedState {
 public:
  /// amplitudes are given in the fixed (a, b, c, d) order; entries for absent
  /// classes must be zero and are dropped.
  ReducedState(const ReducedBasis& basis, const std::array<double, 4>& abcd);
  ReducedState(const ReducedBasis& basis, RealVector amps);

  const ReducedBasis& basis() const noexcept { return basis_; }
  std::span<const double> amps() const noexcept { return amps_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  /// Amplitude on class c; 0 for absent classes.
  double operator[](Component c) const noexcept;

  double norm() const noexcept;
  ReducedState normalized() const;
  ComplexVector to_complex() const;

 private:
  ReducedBasis basis_;
  RealVector amps_;
};

double dot(const ReducedState& x, const ReducedState& y);

/// Marked target classes for success-probability measurements.
struct Targets {
  bool a = false;
  bool b = false;

  bool empty() const noexcept { return !a && !b; }
  static constexpr Targets only_a() { return {true, false}; }
  static constexpr Targets only_b() { return {false, true}; }
  static constexpr Targets both() { return {true, true}; }
};

namespace reduced {

/// Equal superposition over all vertices.
ReducedState state_s(const BipartiteInstance& inst);
/// Set-weighted superposition, amplitude 1/sqrt(2 n_i) per vertex of V_i.
ReducedState state_sigma(const BipartiteInstance& inst);
/// Orthogonal complement of sigma inside span{sigma, s}.
ReducedState state_delta(const BipartiteInstance& inst);
/// Unit vector on class c. Throws ParameterError if c is absent.
ReducedState basis_state(const BipartiteInstance& inst, Component c);

HermitianOperator reduced_adjacency(const BipartiteInstance& inst);
HermitianOperator reduced_degree(const BipartiteInstance& inst);
/// Reduced -gamma*L - P or -gamma*A - P. Throws ParameterError unless
/// gamma > 0 and finite.
HermitianOperator search_hamiltonian(const BipartiteInstance& inst,
                                     WalkKind kind, double gamma);

RealVector lift(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                const ReducedState& state);
ComplexVector lift(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                   std::span<const Complex> amps);

struct Projection {
  ReducedState state;
  /// Norm of the component orthogonal to the invariant subspace.
  double residual;
};

struct ComplexProjection {
  ComplexVector amps;
  double residual;
};

Projection project(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                   std::span<const double> full);
ComplexProjection project(const BipartiteInstance& inst,
                          const graph::MarkedSet& marks,
                          std::span<const Complex> full);

}  // namespace reduced
}  // namespace qwalk
