#include "qwalk/instance.hpp"

#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string validate_instance(std::int64_t n1, std::int64_t n2, std::int64_t k1,
                              std::int64_t k2) {
  std::ostringstream msg;
  if (n1 < 1) {
    msg << "n1 must be positive (got " << n1 << ")";
  } else if (n2 < 1) {
    msg << "n2 must be positive (got " << n2 << ")";
  } else if (k1 < 0 || k1 > n1) {
    msg << "k1 must satisfy 0 <= k1 <= n1 (got k1=" << k1 << ", n1=" << n1
        << ")";
  } else if (k2 < 0 || k2 > n2) {
    msg << "k2 must satisfy 0 <= k2 <= n2 (got k2=" << k2 << ", n2=" << n2
        << ")";
  } else if (k1 + k2 < 1) {
    msg << "at least one vertex must be marked (k1 + k2 >= 1)";
  }
  return msg.str();
}

BipartiteInstance::BipartiteInstance(std::int64_t n1, std::int64_t n2,
                                     std::int64_t k1, std::int64_t k2)
    : n1_(n1), n2_(n2), k1_(k1), k2_(k2) {
  if (auto err = validate_instance(n1, n2, k1, k2); !err.empty()) {
    throw InvalidInstance("invalid instance: " + err);
  }
}

std::string BipartiteInstance::describe() const {
  std::ostringstream out;
  out << "K(" << n1_ << "," << n2_ << ") k1=" << k1_ << " k2=" << k2_;
  return out.str();
}

std::string_view to_string(WalkKind kind) noexcept {
  return kind == WalkKind::laplacian ? "laplacian" : "adjacency";
}

WalkKind parse_walk_kind(std::string_view text) {
  if (text == "laplacian") return WalkKind::laplacian;
  if (text == "adjacency") return WalkKind::adjacency;
  throw ParameterError("unknown walk kind '" + std::string(text) +
                       "' (expected laplacian or adjacency)");
}

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::laplacian_a:
      return "laplacian_a";
    case Regime::laplacian_b:
      return "laplacian_b";
    case Regime::adjacency:
      return "adjacency";
  }
  return "unknown";
}

Regime parse_regime(std::string_view text) {
  if (text == "laplacian_a") return Regime::laplacian_a;
  if (text == "laplacian_b") return Regime::laplacian_b;
  if (text == "adjacency") return Regime::adjacency;
  throw ParameterError("unknown regime '" + std::string(text) + "'");
}

WalkKind kind_of(Regime regime) noexcept {
  return regime == Regime::adjacency ? WalkKind::adjacency
                                     : WalkKind::laplacian;
}

}  // namespace qwalk
