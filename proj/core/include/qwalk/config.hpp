#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qwalk/instance.hpp"

namespace qwalk::io {

/// Which reduced state a walk starts from.
enum class InitialState { s, sigma };

/// One run's parameters. Defaults reproduce the canonical K(512,256) instance
/// with k1 = 3, k2 = 5.
struct InstanceConfig {
  std::int64_t n1 = 512;
  std::int64_t n2 = 256;
  std::int64_t k1 = 3;
  std::int64_t k2 = 5;
  std::optional<double> gamma;
  std::optional<WalkKind> walk;
  std::optional<Regime> regime;
  std::optional<InitialState> initial;
  std::optional<double> t_max;
  std::optional<std::size_t> points;

  /// Throws InvalidInstance / ParameterError naming the violated invariant.
  void validate() const;
  BipartiteInstance instance() const;

  WalkKind effective_walk() const;
  /// Explicit regime, else laplacian_a for the Laplacian (laplacian_b when
  /// k1 = 0) and adjacency for the adjacency walk.
  Regime effective_regime() const;
  InitialState effective_initial() const;
};

/// Parses flat "key = value" text (# starts a comment) or a JSON object;
/// the format is detected from the first non-blank character. Unknown keys
/// and malformed values throw ParameterError. The result is validated.
InstanceConfig parse_config(std::string_view text);
InstanceConfig load_config(const std::filesystem::path& path);

std::string_view to_string(InitialState s) noexcept;
InitialState parse_initial_state(std::string_view text);

}  // namespace qwalk::io
