#pragma once

#include <cstddef>
#include <string_view>

#include "qwalk/matrix.hpp"

namespace qwalk {

/// Which space a HermitianOperator acts on. Reduced operators have dimension
/// 4, or fewer when a vertex class is empty (see ReducedBasis).
enum class BasisTag { full, reduced4, reduced3, reduced2 };

std::string_view to_string(BasisTag tag) noexcept;
BasisTag reduced_tag(std::size_t dim);

struct HermitianOperator {
  SymmetricMatrix matrix;
  BasisTag basis = BasisTag::full;

  std::size_t dim() const noexcept { return matrix.dim(); }
};

}  // namespace qwalk
