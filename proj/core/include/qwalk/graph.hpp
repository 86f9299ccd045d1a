#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/instance.hpp"
#include "qwalk/operator.hpp"

/// Full vertex-space matrices of K_{n1,n2}. V1 occupies indices [0, n1) and
/// V2 occupies [n1, n1+n2).
namespace qwalk::graph {

/// Marked vertex indices. The canonical placement uses the lowest indices of
/// each set; every placement evolves identically by symmetry.
class MarkedSet {
 public:
  /// Throws InvalidInstance if sizes disagree with inst or indices are out of
  /// range / duplicated.
  MarkedSet(const BipartiteInstance& inst, std::vector<std::int64_t> v1_marked,
            std::vector<std::int64_t> v2_marked);

  static MarkedSet canonical(const BipartiteInstance& inst);

  const std::vector<std::int64_t>& v1() const noexcept { return v1_; }
  /// Global vertex indices (offset by n1).
  const std::vector<std::int64_t>& v2() const noexcept { return v2_; }

  /// Per-vertex flag, length n1+n2.
  const std::vector<bool>& mask() const noexcept { return mask_; }

 private:
  std::vector<std::int64_t> v1_;
  std::vector<std::int64_t> v2_;
  std::vector<bool> mask_;
};

HermitianOperator build_adjacency(const BipartiteInstance& inst);
HermitianOperator build_degree(const BipartiteInstance& inst);
/// L = A - D (note the sign).
HermitianOperator build_laplacian(const BipartiteInstance& inst);
HermitianOperator oracle_projector(const BipartiteInstance& inst,
                                   const MarkedSet& marks);

/// -gamma*L - P or -gamma*A - P in the full vertex space.
HermitianOperator search_hamiltonian(const BipartiteInstance& inst,
                                     const MarkedSet& marks, WalkKind kind,
                                     double gamma);

}  // namespace qwalk::graph
