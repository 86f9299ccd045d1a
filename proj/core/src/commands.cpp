#include "qwalk/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "qwalk/analytics.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/reduced.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::io {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(Dataset& data, std::string_view command, const std::string& what) {
  data.set_meta("command", std::string(command));
  data.set_meta("instance", what);
  data.set_meta("tool_version", kToolVersion);
  data.set_meta("timestamp", utc_timestamp());
}

ReducedState initial_state(const BipartiteInstance& inst, InitialState which) {
  return which == InitialState::s ? reduced::state_s(inst)
                                  : reduced::state_sigma(inst);
}

double class_probability(const ReducedBasis& basis,
                         const spectral::Propagator& prop, double t,
                         Component c) {
  const auto idx = basis.index_of(c);
  return idx ? std::norm(prop.amplitude(*idx, t)) : 0.0;
}

Check within(std::string name, double expected, double observed,
             double tolerance) {
  const bool pass = std::abs(observed - expected) <= tolerance;
  return {std::move(name), expected, observed, tolerance, pass};
}

Check at_least(std::string name, double bound, double observed) {
  return {std::move(name), bound, observed, 0.0, observed >= bound};
}

Check below(std::string name, double bound, double observed) {
  return {std::move(name), bound, observed, 0.0, observed < bound};
}

// First varied k whose verdict is no longer adjacency_faster.
std::int64_t first_reversal(const Dataset& compare) {
  const auto k_idx = compare.column_index("k");
  const auto v_idx = compare.column_index("verdict");
  for (const auto& row : compare.rows()) {
    if (std::get<std::string>(row[v_idx]) != "adjacency_faster") {
      return std::get<std::int64_t>(row[k_idx]);
    }
  }
  return -1;
}

}  // namespace

Dataset cmd_overlap(const InstanceConfig& config, const GridSpec& grid) {
  config.validate();
  const auto inst = config.instance();
  const auto kind = config.effective_walk();
  const double n1 = static_cast<double>(inst.n1());
  const double n2 = static_cast<double>(inst.n2());
  const double lo = grid.gamma_min.value_or(0.1 / std::max(n1, n2));
  const double hi = grid.gamma_max.value_or(10.0 / std::sqrt(n1 * n2));
  const auto gammas = experiments::log_grid(lo, hi, grid.points);

  const auto init = config.effective_initial();
  std::vector<experiments::ReferenceState> refs{
      {std::string(to_string(init)), initial_state(inst, init)}};
  const ReducedBasis basis(inst);
  if (basis.has(Component::a)) {
    refs.push_back({"a", reduced::basis_state(inst, Component::a)});
  }
  if (basis.has(Component::b)) {
    refs.push_back({"b", reduced::basis_state(inst, Component::b)});
  }
  const auto curve = experiments::overlap_sweep(inst, kind, gammas, refs);

  std::vector<Column> columns{{"gamma", ColumnType::real}};
  for (const auto& ref : refs) {
    for (std::size_t i = 0; i < curve.dim; ++i) {
      columns.push_back(
          {"overlap2_" + ref.name + "_psi" + std::to_string(i), ColumnType::real});
    }
  }
  Dataset data(std::move(columns));
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    std::vector<Cell> row{gammas[g]};
    for (const auto& per_ref : curve.overlaps[g]) {
      for (double o : per_ref) row.emplace_back(o);
    }
    data.add_row(std::move(row));
  }
  stamp(data, "overlap", inst.describe());
  data.set_meta("walk", std::string(to_string(kind)));
  return data;
}

Dataset cmd_evolve(const InstanceConfig& config) {
  config.validate();
  const auto inst = config.instance();
  const auto regime = config.effective_regime();
  const auto kind = config.effective_walk();

  double gamma = 0.0;
  double t_max = 0.0;
  if (config.gamma && config.t_max) {
    gamma = *config.gamma;
    t_max = *config.t_max;
  } else {
    const auto prediction = analytics::predict(inst, regime);
    gamma = config.gamma.value_or(prediction.gamma_crit);
    t_max = config.t_max.value_or(2.0 * prediction.runtime);
  }
  const std::size_t points = config.points.value_or(401);

  const ReducedBasis basis(inst);
  const auto init = config.effective_initial();
  const spectral::Propagator prop(reduced::search_hamiltonian(inst, kind, gamma),
                                  initial_state(inst, init).to_complex());

  Dataset data({{"t", ColumnType::real},
                {"p_a", ColumnType::real},
                {"p_b", ColumnType::real},
                {"p_total", ColumnType::real}});
  for (double t : spectral::uniform_grid(t_max, points)) {
    const double pa = class_probability(basis, prop, t, Component::a);
    const double pb = class_probability(basis, prop, t, Component::b);
    data.add_row({t, pa, pb, pa + pb});
  }
  stamp(data, "evolve", inst.describe());
  data.set_meta("walk", std::string(to_string(kind)));
  data.set_meta("gamma", format_real(gamma));
  data.set_meta("initial", std::string(to_string(init)));
  return data;
}

Dataset cmd_compare(const CompareSpec& spec) {
  if (spec.vary != "k1" && spec.vary != "k2") {
    throw ParameterError("compare: vary must be k1 or k2");
  }
  if (spec.from > spec.to) throw ParameterError("compare: empty k range");
  const bool vary_k1 = spec.vary == "k1";
  // Validate the whole range before producing anything.
  for (std::int64_t k : {spec.from, spec.to}) {
    (void)BipartiteInstance(spec.n1, spec.n2, vary_k1 ? k : spec.fixed,
                            vary_k1 ? spec.fixed : k);
  }

  Dataset data({{"k", ColumnType::integer},
                {"t_a", ColumnType::real},
                {"t_b", ColumnType::real},
                {"t_star", ColumnType::real},
                {"threshold", ColumnType::real},
                {"verdict", ColumnType::text}});
  for (std::int64_t k = spec.from; k <= spec.to; ++k) {
    const BipartiteInstance inst(spec.n1, spec.n2, vary_k1 ? k : spec.fixed,
                                 vary_k1 ? spec.fixed : k);
    const auto rt = analytics::runtimes(inst);
    const auto verdict = analytics::faster_walk(inst);
    data.add_row({k, rt.t_a, rt.t_b, rt.t_star, verdict.threshold,
                  std::string(analytics::to_string(verdict.verdict))});
  }
  std::ostringstream what;
  what << "K(" << spec.n1 << "," << spec.n2 << ") "
       << (vary_k1 ? "k2=" : "k1=") << spec.fixed << " " << spec.vary << "="
       << spec.from << ".." << spec.to;
  stamp(data, "compare", what.str());
  data.set_meta("varied", spec.vary);
  return data;
}

Dataset cmd_critical_gamma(const InstanceConfig& config) {
  config.validate();
  const auto inst = config.instance();
  std::vector<experiments::GammaSearchResult> results;
  if (config.regime) {
    results.push_back(experiments::critical_gamma_search(inst, *config.regime));
  } else {
    results = experiments::critical_gamma_search(inst, config.effective_walk());
  }
  Dataset data({{"regime", ColumnType::text},
                {"gamma_numeric", ColumnType::real},
                {"gamma_analytic", ColumnType::real},
                {"relative_error", ColumnType::real},
                {"p_peak", ColumnType::real},
                {"t_peak", ColumnType::real}});
  for (const auto& r : results) {
    const double analytic = analytics::predict(inst, r.regime).gamma_crit;
    data.add_row({std::string(to_string(r.regime)), r.gamma, analytic,
                  std::abs(r.gamma - analytic) / analytic, r.peak.p_peak,
                  r.peak.t_peak});
  }
  stamp(data, "critical-gamma", inst.describe());
  return data;
}

Dataset cmd_detune(const InstanceConfig& config, std::vector<double> epsilons) {
  config.validate();
  const auto inst = config.instance();
  const auto regime = config.effective_regime();
  const double gamma = config.gamma.value_or(
      analytics::predict(inst, regime).gamma_crit);
  if (epsilons.empty()) {
    const double n = static_cast<double>(inst.total());
    for (double scale : {std::pow(n, -2.0), std::pow(n, -1.5), 0.5 / n, 1.0 / n}) {
      epsilons.push_back(-scale);
      epsilons.push_back(scale);
    }
    epsilons.push_back(0.0);
    epsilons.push_back(5.0 / n);
    std::erase_if(epsilons, [&](double e) { return gamma + e <= 0.0; });
    std::sort(epsilons.begin(), epsilons.end());
  }
  const auto sweep = experiments::detuning_sweep(inst, regime, gamma, epsilons);
  Dataset data({{"epsilon", ColumnType::real},
                {"gamma", ColumnType::real},
                {"p_peak", ColumnType::real},
                {"t_peak", ColumnType::real},
                {"found", ColumnType::integer}});
  for (std::size_t i = 0; i < sweep.epsilons.size(); ++i) {
    const auto& p = sweep.peaks[i];
    data.add_row({sweep.epsilons[i], gamma + sweep.epsilons[i], p.p_peak,
                  p.t_peak, std::int64_t{p.found ? 1 : 0}});
  }
  stamp(data, "detune", inst.describe());
  data.set_meta("regime", std::string(to_string(regime)));
  return data;
}

Dataset cmd_coupon(const InstanceConfig& config) {
  config.validate();
  const auto inst = config.instance();
  Dataset data({{"k1", ColumnType::integer},
                {"k2", ColumnType::integer},
                {"laplacian_num", ColumnType::integer},
                {"laplacian_den", ColumnType::integer},
                {"laplacian", ColumnType::real},
                {"adjacency", ColumnType::real}});
  // Exact fractions overflow beyond ~40 marked vertices; 0/0 marks that.
  analytics::Rational exact{0, 0};
  try {
    exact = analytics::expected_repetitions_laplacian(inst.k1(), inst.k2());
  } catch (const ParameterError&) {
  }
  data.add_row({inst.k1(), inst.k2(), exact.num, exact.den,
                analytics::expected_repetitions_laplacian_value(inst.k1(),
                                                                inst.k2()),
                analytics::expected_repetitions_adjacency(inst)});
  stamp(data, "coupon", inst.describe());
  return data;
}

Dataset cmd_predict(const InstanceConfig& config) {
  config.validate();
  const auto inst = config.instance();
  Dataset data({{"regime", ColumnType::text},
                {"gamma_crit", ColumnType::real},
                {"runtime", ColumnType::real},
                {"gap", ColumnType::real},
                {"final_p_a", ColumnType::real},
                {"final_p_b", ColumnType::real},
                {"max_residual", ColumnType::real},
                {"success_from_s", ColumnType::real}});
  std::vector<Regime> regimes;
  if (inst.k1() > 0) regimes.push_back(Regime::laplacian_a);
  if (inst.k2() > 0) regimes.push_back(Regime::laplacian_b);
  regimes.push_back(Regime::adjacency);
  for (auto regime : regimes) {
    const auto p = analytics::predict(inst, regime);
    const auto report = analytics::verify_eigenpairs(inst, p, 0.05);
    const double pa = p.final_state[Component::a];
    const double pb = p.final_state[Component::b];
    data.add_row({std::string(to_string(regime)), p.gamma_crit, p.runtime,
                  p.predicted_gap(), pa * pa, pb * pb, report.max_residual,
                  regime == Regime::adjacency
                      ? analytics::success_bound_from_s(inst)
                      : kNaN});
  }
  stamp(data, "predict", inst.describe());
  return data;
}

bool ReproduceResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string checks_to_json(const std::vector<Check>& checks) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    doc.push_back({{"check_name", c.name},
                   {"expected", c.expected},
                   {"observed", c.observed},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  }
  return doc.dump(2) + "\n";
}

ReproduceResult cmd_reproduce_all(const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  ReproduceResult result;
  auto emit = [&](const Dataset& data, const std::string& name) {
    const auto path = out_dir / name;
    write_csv(data, path);
    result.files.push_back(path);
  };
  auto& checks = result.checks;

  const InstanceConfig base;  // K(512,256), k1 = 3, k2 = 5
  const auto inst = base.instance();
  const double n = static_cast<double>(inst.total());

  InstanceConfig lap = base;
  lap.walk = WalkKind::laplacian;
  InstanceConfig adj = base;
  adj.walk = WalkKind::adjacency;

  emit(cmd_overlap(lap, {}), "fig2_overlap_laplacian.csv");
  emit(cmd_overlap(adj, {}), "fig4_overlap_adjacency.csv");

  // Evolution curves at each critical rate and the peak they reach.
  struct EvolutionRun {
    std::string file;
    Regime regime;
  };
  for (const auto& run : {EvolutionRun{"fig3a_evolution_laplacian_a.csv",
                                          Regime::laplacian_a},
                          EvolutionRun{"fig3b_evolution_laplacian_b.csv",
                                          Regime::laplacian_b},
                          EvolutionRun{"fig5_evolution_adjacency.csv",
                                          Regime::adjacency}}) {
    InstanceConfig cfg = base;
    cfg.regime = run.regime;
    emit(cmd_evolve(cfg), run.file);

    const auto p = analytics::predict(inst, run.regime);
    const auto peak = experiments::find_peak(inst, p.kind, p.gamma_crit,
                                             p.initial_state, p.targets,
                                             2.0 * p.runtime);
    const std::string tag(to_string(run.regime));
    checks.push_back(
        within(tag + "_peak_time", p.runtime, peak.t_peak, 0.02 * p.runtime));
    if (run.regime == Regime::adjacency) {
      checks.push_back(at_least(tag + "_peak_probability", 0.98, peak.p_peak));
      const ReducedBasis basis(inst);
      const spectral::Propagator prop(
          reduced::search_hamiltonian(inst, p.kind, p.gamma_crit),
          p.initial_state.to_complex());
      const double w = 5.0 * 512 + 3.0 * 256;
      checks.push_back(within(tag + "_p_a_at_peak", 3.0 * 256 / w,
                              class_probability(basis, prop, peak.t_peak,
                                                Component::a),
                              0.03));
      checks.push_back(within(tag + "_p_b_at_peak", 5.0 * 512 / w,
                              class_probability(basis, prop, peak.t_peak,
                                                Component::b),
                              0.03));
    } else {
      checks.push_back(at_least(tag + "_peak_probability", 0.95, peak.p_peak));
    }
  }

  // Critical gammas.
  for (auto regime :
       {Regime::laplacian_a, Regime::laplacian_b, Regime::adjacency}) {
    const double analytic = analytics::predict(inst, regime).gamma_crit;
    const auto found = experiments::critical_gamma_search(inst, regime);
    checks.push_back(within("critical_gamma_" + std::string(to_string(regime)),
                            analytic, found.gamma, 0.05 * analytic));
  }
  {
    InstanceConfig cfg = base;
    emit(cmd_critical_gamma(cfg), "critical_gamma_laplacian.csv");
    cfg.walk = WalkKind::adjacency;
    emit(cmd_critical_gamma(cfg), "critical_gamma_adjacency.csv");
  }

  // Runtime sweeps over one marked count and their crossovers.
  const auto fig6a = cmd_compare({512, 256, "k1", 5, 1, 60});
  const auto fig6b = cmd_compare({512, 1024, "k2", 3, 1, 40});
  emit(fig6a, "fig6a_compare_k1.csv");
  emit(fig6b, "fig6b_compare_k2.csv");
  checks.push_back(within("crossover_k1", 30.0,
                          static_cast<double>(first_reversal(fig6a)), 0.0));
  checks.push_back(within("crossover_k2", 18.0,
                          static_cast<double>(first_reversal(fig6b)), 0.0));

  {
    Dataset grid({{"n1", ColumnType::integer},
                  {"n2", ColumnType::integer},
                  {"k1", ColumnType::integer},
                  {"k2", ColumnType::integer},
                  {"threshold", ColumnType::real},
                  {"verdict", ColumnType::text}});
    for (auto [n1, n2] : {std::pair<std::int64_t, std::int64_t>{512, 256},
                          {512, 1024},
                          {512, 512},
                          {512, 520}}) {
      for (std::int64_t k1 = 1; k1 <= 8; ++k1) {
        for (std::int64_t k2 = 1; k2 <= 8; ++k2) {
          const auto v = analytics::faster_walk(BipartiteInstance(n1, n2, k1, k2));
          grid.add_row({n1, n2, k1, k2, v.threshold,
                        std::string(analytics::to_string(v.verdict))});
        }
      }
    }
    stamp(grid, "reproduce-all", "verdict grid");
    emit(grid, "table2_verdicts.csv");
  }

  // Closed-form predictions per regime.
  emit(cmd_predict(base), "table1_summary.csv");

  // Coupon collector.
  {
    emit(cmd_coupon(base), "coupon.csv");
    const auto exact = analytics::expected_repetitions_laplacian(3, 5);
    checks.push_back({"coupon_laplacian_exact", 203.0 / 12.0, exact.value(), 0.0,
                      exact == analytics::Rational{203, 12}});
    checks.push_back(within("coupon_adjacency_integral", 26.368,
                            analytics::expected_repetitions_adjacency(inst),
                            0.01));
  }

  // Starting the adjacency walk from |s>.
  {
    const auto p = analytics::predict(inst, Regime::adjacency);
    const auto prob = spectral::success_probability(
        inst, reduced::search_hamiltonian(inst, WalkKind::adjacency, p.gamma_crit),
        reduced::state_s(inst).to_complex(), p.runtime, Targets::both());
    checks.push_back(within("adjacency_from_s_success",
                            analytics::success_bound_from_s(inst), prob, 0.03));
  }

  // Perturbative eigenpairs.
  {
    const BipartiteInstance large(2048, 1024, 3, 5);
    for (auto regime : {Regime::laplacian_a, Regime::laplacian_b,
                        Regime::adjacency}) {
      const auto small_report = analytics::verify_eigenpairs(
          inst, analytics::predict(inst, regime), 0.05);
      const auto large_report = analytics::verify_eigenpairs(
          large, analytics::predict(large, regime), 0.05);
      const std::string tag(to_string(regime));
      checks.push_back(
          below("eigenpair_residual_" + tag, 0.05, small_report.max_residual));
      checks.push_back(below("eigenpair_residual_shrinks_" + tag,
                             small_report.max_residual,
                             large_report.max_residual));
    }
  }

  // Detuning dichotomy.
  {
    const auto p = analytics::predict(inst, Regime::laplacian_a);
    const auto sweep = experiments::detuning_sweep(
        inst, Regime::laplacian_a, p.gamma_crit, {0.0, 1.0 / (n * n), 5.0 / n});
    const double base_p = sweep.peaks[0].p_peak;
    checks.push_back(
        within("detuning_inside_tolerance", base_p, sweep.peaks[1].p_peak, 0.05));
    checks.push_back(below("detuning_outside_tolerance", 0.5 * base_p,
                           sweep.peaks[2].p_peak));
    InstanceConfig cfg = base;
    cfg.regime = Regime::laplacian_a;
    emit(cmd_detune(cfg, {}), "detuning_laplacian_a.csv");
  }

  const auto summary = out_dir / "summary.json";
  write_atomic(summary, checks_to_json(checks));
  result.files.push_back(summary);
  return result;
}

}  // namespace qwalk::io
