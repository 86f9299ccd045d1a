#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qwalk {

/// Complete bipartite graph K_{n1,n2} with k1 marked vertices in V1 and k2
/// marked vertices in V2. Every closed form and every matrix is a function of
/// these four numbers.
class BipartiteInstance {
 public:
  /// Throws InvalidInstance naming the violated invariant.
  BipartiteInstance(std::int64_t n1, std::int64_t n2, std::int64_t k1,
                    std::int64_t k2);

  std::int64_t n1() const noexcept { return n1_; }
  std::int64_t n2() const noexcept { return n2_; }
  std::int64_t k1() const noexcept { return k1_; }
  std::int64_t k2() const noexcept { return k2_; }

  std::int64_t total() const noexcept { return n1_ + n2_; }
  std::int64_t unmarked1() const noexcept { return n1_ - k1_; }
  std::int64_t unmarked2() const noexcept { return n2_ - k2_; }
  std::int64_t marked() const noexcept { return k1_ + k2_; }

  bool regular() const noexcept { return n1_ == n2_; }

  std::string describe() const;

  friend bool operator==(const BipartiteInstance&,
                         const BipartiteInstance&) = default;

 private:
  std::int64_t n1_;
  std::int64_t n2_;
  std::int64_t k1_;
  std::int64_t k2_;
};

/// Returns an empty string when (n1, n2, k1, k2) is valid, otherwise a
/// message naming the first violated invariant.
std::string validate_instance(std::int64_t n1, std::int64_t n2, std::int64_t k1,
                              std::int64_t k2);

/// Generator of the walk term: -gamma*L or -gamma*A.
enum class WalkKind { laplacian, adjacency };

std::string_view to_string(WalkKind kind) noexcept;
/// Throws ParameterError for anything other than "laplacian" / "adjacency".
WalkKind parse_walk_kind(std::string_view text);

/// Search regime: which marked class the walk is tuned to reach.
/// laplacian_a / laplacian_b start from |s> and target |a> / |b>; adjacency
/// starts from |sigma> and targets |a> and |b> together.
enum class Regime { laplacian_a, laplacian_b, adjacency };

std::string_view to_string(Regime regime) noexcept;
Regime parse_regime(std::string_view text);
WalkKind kind_of(Regime regime) noexcept;

}  // namespace qwalk
