#include "qwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk::graph {

MarkedSet::MarkedSet(const BipartiteInstance& inst,
                     std::vector<std::int64_t> v1_marked,
                     std::vector<std::int64_t> v2_marked)
    : v1_(std::move(v1_marked)),
      v2_(std::move(v2_marked)),
      mask_(static_cast<std::size_t>(inst.total()), false) {
  if (static_cast<std::int64_t>(v1_.size()) != inst.k1() ||
      static_cast<std::int64_t>(v2_.size()) != inst.k2()) {
    throw InvalidInstance("marked set sizes must equal k1 and k2");
  }
  for (auto i : v1_) {
    if (i < 0 || i >= inst.n1()) {
      throw InvalidInstance("V1 marked index " + std::to_string(i) +
                            " out of range");
    }
  }
  for (auto i : v2_) {
    if (i < inst.n1() || i >= inst.total()) {
      throw InvalidInstance("V2 marked index " + std::to_string(i) +
                            " out of range");
    }
  }
  for (auto i : v1_) mask_[static_cast<std::size_t>(i)] = true;
  for (auto i : v2_) mask_[static_cast<std::size_t>(i)] = true;
  auto count = std::count(mask_.begin(), mask_.end(), true);
  if (count != inst.marked()) throw InvalidInstance("marked indices repeat");
}

MarkedSet MarkedSet::canonical(const BipartiteInstance& inst) {
  std::vector<std::int64_t> v1(static_cast<std::size_t>(inst.k1()));
  std::vector<std::int64_t> v2(static_cast<std::size_t>(inst.k2()));
  for (std::int64_t i = 0; i < inst.k1(); ++i) v1[i] = i;
  for (std::int64_t i = 0; i < inst.k2(); ++i) v2[i] = inst.n1() + i;
  return MarkedSet(inst, std::move(v1), std::move(v2));
}

HermitianOperator build_adjacency(const BipartiteInstance& inst) {
  const auto n1 = static_cast<std::size_t>(inst.n1());
  const auto n = static_cast<std::size_t>(inst.total());
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = n1; j < n; ++j) a.set(i, j, 1.0);
  }
  return {std::move(a), BasisTag::full};
}

HermitianOperator build_degree(const BipartiteInstance& inst) {
  const auto n1 = static_cast<std::size_t>(inst.n1());
  const auto n = static_cast<std::size_t>(inst.total());
  SymmetricMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.set(i, i, static_cast<double>(i < n1 ? inst.n2() : inst.n1()));
  }
  return {std::move(d), BasisTag::full};
}

HermitianOperator build_laplacian(const BipartiteInstance& inst) {
  return {build_adjacency(inst).matrix - build_degree(inst).matrix,
          BasisTag::full};
}

HermitianOperator oracle_projector(const BipartiteInstance& inst,
                                   const MarkedSet& marks) {
  const auto n = static_cast<std::size_t>(inst.total());
  if (marks.mask().size() != n) {
    throw ParameterError("marked set belongs to a different instance");
  }
  SymmetricMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (marks.mask()[i]) p.set(i, i, 1.0);
  }
  return {std::move(p), BasisTag::full};
}

HermitianOperator search_hamiltonian(const BipartiteInstance& inst,
                                     const MarkedSet& marks, WalkKind kind,
                                     double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma must be positive and finite");
  }
  auto walk = kind == WalkKind::laplacian ? build_laplacian(inst).matrix
                                          : build_adjacency(inst).matrix;
  auto h = -gamma * std::move(walk);
  h -= oracle_projector(inst, marks).matrix;
  return {std::move(h), BasisTag::full};
}

}  // namespace qwalk::graph
