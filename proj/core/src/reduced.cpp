#include "qwalk/reduced.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string_view to_string(Component c) noexcept {
  switch (c) {
    case Component::a:
      return "a";
    case Component::b:
      return "b";
    case Component::c:
      return "c";
    case Component::d:
      return "d";
  }
  return "?";
}

ReducedBasis::ReducedBasis(const BipartiteInstance& inst)
    : sizes_{inst.k1(), inst.k2(), inst.unmarked1(), inst.unmarked2()} {
  for (auto c : kAllComponents) {
    const auto slot = static_cast<std::size_t>(c);
    if (sizes_[slot] > 0) {
      index_[slot] = dim_;
      order_[dim_] = c;
      ++dim_;
    }
  }
}

std::size_t ReducedBasis::require(Component c) const {
  auto idx = index_of(c);
  if (!idx) {
    throw ParameterError("class |" + std::string(to_string(c)) +
                         "> is empty for this instance");
  }
  return *idx;
}

ReducedState::ReducedState(const ReducedBasis& basis,
                           const std::array<double, 4>& abcd)
    : basis_(basis), amps_(basis.dim(), 0.0) {
  for (auto c : kAllComponents) {
    const double value = abcd[static_cast<std::size_t>(c)];
    if (auto idx = basis_.index_of(c)) {
      amps_[*idx] = value;
    } else if (value != 0.0) {
      throw ParameterError("nonzero amplitude on empty class |" +
                           std::string(to_string(c)) + ">");
    }
  }
}

ReducedState::ReducedState(const ReducedBasis& basis, RealVector amps)
    : basis_(basis), amps_(std::move(amps)) {
  if (amps_.size() != basis_.dim()) {
    throw ParameterError("reduced state length does not match its basis");
  }
}

double ReducedState::operator[](Component c) const noexcept {
  auto idx = basis_.index_of(c);
  return idx ? amps_[*idx] : 0.0;
}

double ReducedState::norm() const noexcept { return qwalk::norm(amps_); }

ReducedState ReducedState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ParameterError("cannot normalize the zero state");
  RealVector out(amps_);
  for (auto& x : out) x /= n;
  return ReducedState(basis_, std::move(out));
}

ComplexVector ReducedState::to_complex() const {
  return qwalk::to_complex(amps_);
}

double dot(const ReducedState& x, const ReducedState& y) {
  if (!(x.basis() == y.basis())) {
    throw ParameterError("reduced states live in different bases");
  }
  return dot(x.amps(), y.amps());
}

namespace reduced {
namespace {

double root(std::int64_t x) { return std::sqrt(static_cast<double>(x)); }

// Restricts a 4x4 (a, b, c, d) matrix to the classes present in basis.
SymmetricMatrix restrict(const ReducedBasis& basis,
                         const std::array<std::array<double, 4>, 4>& full) {
  SymmetricMatrix m(basis.dim());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto ci = static_cast<std::size_t>(basis.component_at(i));
    for (std::size_t j = i; j < basis.dim(); ++j) {
      const auto cj = static_cast<std::size_t>(basis.component_at(j));
      m.set(i, j, full[ci][cj]);
    }
  }
  return m;
}

std::array<std::array<double, 4>, 4> adjacency_entries(
    const BipartiteInstance& inst) {
  const double k1 = static_cast<double>(inst.k1());
  const double k2 = static_cast<double>(inst.k2());
  const double nk1 = static_cast<double>(inst.unmarked1());
  const double nk2 = static_cast<double>(inst.unmarked2());
  const double ab = std::sqrt(k1 * k2);
  const double ad = std::sqrt(k1 * nk2);
  const double bc = std::sqrt(k2 * nk1);
  const double cd = std::sqrt(nk1 * nk2);
  return {{{0.0, ab, 0.0, ad},
           {ab, 0.0, bc, 0.0},
           {0.0, bc, 0.0, cd},
           {ad, 0.0, cd, 0.0}}};
}

Component class_of(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                   std::size_t vertex) {
  const bool in_v1 = static_cast<std::int64_t>(vertex) < inst.n1();
  if (marks.mask()[vertex]) return in_v1 ? Component::a : Component::b;
  return in_v1 ? Component::c : Component::d;
}

void check_marks(const BipartiteInstance& inst, const graph::MarkedSet& marks) {
  if (static_cast<std::int64_t>(marks.mask().size()) != inst.total() ||
      static_cast<std::int64_t>(marks.v1().size()) != inst.k1()) {
    throw ParameterError("marked set belongs to a different instance");
  }
}

template <typename T>
std::vector<T> lift_impl(const BipartiteInstance& inst,
                         const graph::MarkedSet& marks,
                         const ReducedBasis& basis, std::span<const T> amps) {
  check_marks(inst, marks);
  if (amps.size() != basis.dim()) {
    throw ParameterError("reduced vector length does not match the basis");
  }
  std::array<T, 4> per_vertex{};
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto c = basis.component_at(i);
    per_vertex[static_cast<std::size_t>(c)] =
        amps[i] / root(basis.class_size(c));
  }
  const auto n = static_cast<std::size_t>(inst.total());
  std::vector<T> full(n);
  for (std::size_t v = 0; v < n; ++v) {
    full[v] = per_vertex[static_cast<std::size_t>(class_of(inst, marks, v))];
  }
  return full;
}

template <typename T>
std::pair<std::vector<T>, double> project_impl(const BipartiteInstance& inst,
                                               const graph::MarkedSet& marks,
                                               std::span<const T> full) {
  check_marks(inst, marks);
  if (static_cast<std::int64_t>(full.size()) != inst.total()) {
    throw ParameterError("full-space vector must have length n1 + n2");
  }
  const ReducedBasis basis(inst);
  std::array<T, 4> sums{};
  for (std::size_t v = 0; v < full.size(); ++v) {
    sums[static_cast<std::size_t>(class_of(inst, marks, v))] += full[v];
  }
  std::vector<T> amps(basis.dim());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto c = basis.component_at(i);
    amps[i] = sums[static_cast<std::size_t>(c)] / root(basis.class_size(c));
  }
  const auto back = lift_impl<T>(inst, marks, basis, amps);
  double leak = 0.0;
  for (std::size_t v = 0; v < full.size(); ++v) {
    leak += std::norm(full[v] - back[v]);
  }
  return {std::move(amps), std::sqrt(leak)};
}

}  // namespace

ReducedState state_s(const BipartiteInstance& inst) {
  const double scale = 1.0 / root(inst.total());
  return ReducedState(ReducedBasis(inst),
                      std::array<double, 4>{root(inst.k1()) * scale, root(inst.k2()) * scale,
                       root(inst.unmarked1()) * scale,
                       root(inst.unmarked2()) * scale});
}

ReducedState state_sigma(const BipartiteInstance& inst) {
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(inst.n1()) *
                                        static_cast<double>(inst.n2()));
  return ReducedState(ReducedBasis(inst),
                      std::array<double, 4>{root(inst.k1() * inst.n2()) * scale,
                       root(inst.k2() * inst.n1()) * scale,
                       root(inst.n2() * inst.unmarked1()) * scale,
                       root(inst.n1() * inst.unmarked2()) * scale});
}

ReducedState state_delta(const BipartiteInstance& inst) {
  const auto sigma = state_sigma(inst);
  return ReducedState(sigma.basis(),
                      std::array<double, 4>{-sigma[Component::a], sigma[Component::b],
                       -sigma[Component::c], sigma[Component::d]});
}

ReducedState basis_state(const BipartiteInstance& inst, Component c) {
  const ReducedBasis basis(inst);
  RealVector amps(basis.dim(), 0.0);
  amps[basis.require(c)] = 1.0;
  return ReducedState(basis, std::move(amps));
}

HermitianOperator reduced_adjacency(const BipartiteInstance& inst) {
  const ReducedBasis basis(inst);
  return {restrict(basis, adjacency_entries(inst)), reduced_tag(basis.dim())};
}

HermitianOperator reduced_degree(const BipartiteInstance& inst) {
  const ReducedBasis basis(inst);
  const double n1 = static_cast<double>(inst.n1());
  const double n2 = static_cast<double>(inst.n2());
  std::array<std::array<double, 4>, 4> d{};
  d[0][0] = n2;
  d[1][1] = n1;
  d[2][2] = n2;
  d[3][3] = n1;
  return {restrict(basis, d), reduced_tag(basis.dim())};
}

HermitianOperator search_hamiltonian(const BipartiteInstance& inst,
                                     WalkKind kind, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma must be positive and finite");
  }
  const ReducedBasis basis(inst);
  auto entries = adjacency_entries(inst);
  if (kind == WalkKind::laplacian) {
    entries[0][0] -= static_cast<double>(inst.n2());
    entries[1][1] -= static_cast<double>(inst.n1());
    entries[2][2] -= static_cast<double>(inst.n2());
    entries[3][3] -= static_cast<double>(inst.n1());
  }
  for (auto& row : entries) {
    for (auto& x : row) x *= -gamma;
  }
  entries[0][0] -= 1.0;
  entries[1][1] -= 1.0;
  return {restrict(basis, entries), reduced_tag(basis.dim())};
}

RealVector lift(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                const ReducedState& state) {
  return lift_impl<double>(inst, marks, state.basis(), state.amps());
}

ComplexVector lift(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                   std::span<const Complex> amps) {
  return lift_impl<Complex>(inst, marks, ReducedBasis(inst), amps);
}

Projection project(const BipartiteInstance& inst, const graph::MarkedSet& marks,
                   std::span<const double> full) {
  auto [amps, residual] = project_impl<double>(inst, marks, full);
  return {ReducedState(ReducedBasis(inst), std::move(amps)), residual};
}

ComplexProjection project(const BipartiteInstance& inst,
                          const graph::MarkedSet& marks,
                          std::span<const Complex> full) {
  auto [amps, residual] = project_impl<Complex>(inst, marks, full);
  return {std::move(amps), residual};
}

}  // namespace reduced
}  // namespace qwalk
