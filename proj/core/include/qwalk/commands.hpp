#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/config.hpp"
#include "qwalk/dataset.hpp"

namespace qwalk::io {

inline constexpr const char* kToolVersion = "0.1.0";

/// Overlap sweep: log-spaced gammas on [gamma_min, gamma_max]. Unset bounds
/// default to [0.1/max(n1,n2), 10/sqrt(n1 n2)].
struct GridSpec {
  std::optional<double> gamma_min;
  std::optional<double> gamma_max;
  std::size_t points = 241;
};

/// Columns: gamma, then overlap2_<ref>_psi<i> for ref in (initial, a, b).
Dataset cmd_overlap(const InstanceConfig& config, const GridSpec& grid);

/// Columns: t, p_a, p_b, p_total.
Dataset cmd_evolve(const InstanceConfig& config);

/// Runtime comparison with one marked count varying over [from, to].
struct CompareSpec {
  std::int64_t n1 = 512;
  std::int64_t n2 = 256;
  /// "k1" or "k2".
  std::string vary = "k1";
  /// Value of the marked count that stays fixed.
  std::int64_t fixed = 5;
  std::int64_t from = 1;
  std::int64_t to = 60;
};
/// Columns: k, t_a, t_b, t_star, threshold, verdict.
Dataset cmd_compare(const CompareSpec& spec);

/// Columns: regime, gamma_numeric, gamma_analytic, relative_error, p_peak,
/// t_peak.
Dataset cmd_critical_gamma(const InstanceConfig& config);

/// Columns: epsilon, gamma, p_peak, t_peak, found. Empty epsilons select a
/// default ladder of offsets scaled by powers of 1/N.
Dataset cmd_detune(const InstanceConfig& config, std::vector<double> epsilons);

/// Columns: k1, k2, laplacian_num, laplacian_den, laplacian, adjacency.
Dataset cmd_coupon(const InstanceConfig& config);

/// One row of closed-form predictions per regime: regime, gamma_crit, runtime, gap,
/// final_p_a, final_p_b, max_residual, success_from_s.
Dataset cmd_predict(const InstanceConfig& config);

/// Entry of the reproduction summary.
struct Check {
  std::string name;
  double expected;
  double observed;
  double tolerance;
  bool pass;
};

struct ReproduceResult {
  std::vector<std::filesystem::path> files;
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Writes every reproduction dataset plus summary.json into out_dir.
ReproduceResult cmd_reproduce_all(const std::filesystem::path& out_dir);

std::string checks_to_json(const std::vector<Check>& checks);

}  // namespace qwalk::io
