#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/commands.hpp"
#include "qwalk/errors.hpp"

namespace {

using namespace qwalk;
using namespace qwalk::io;

struct CommonFlags {
  std::string config_path;
  std::optional<std::int64_t> n1, n2, k1, k2;
  std::optional<std::string> walk, regime, initial;
  std::optional<double> gamma, t_max;
  std::optional<std::size_t> points;
  std::string out;
};

void add_instance_flags(CLI::App* app, CommonFlags& f) {
  app->add_option("--config", f.config_path, "key=value or JSON config file");
  app->add_option("--n1", f.n1, "size of the first part");
  app->add_option("--n2", f.n2, "size of the second part");
  app->add_option("--k1", f.k1, "marked vertices in the first part");
  app->add_option("--k2", f.k2, "marked vertices in the second part");
  app->add_option("--walk", f.walk, "laplacian or adjacency")
      ->check(CLI::IsMember({"laplacian", "adjacency"}));
  app->add_option("--regime", f.regime, "laplacian_a, laplacian_b or adjacency");
  app->add_option("--initial", f.initial, "s or sigma");
  app->add_option("--gamma", f.gamma, "hopping rate");
  app->add_option("--tmax", f.t_max, "end of the time grid");
  app->add_option("--points", f.points, "number of grid points");
  app->add_option("--out", f.out, "output file (stdout when omitted)");
}

InstanceConfig resolve(const CommonFlags& f) {
  InstanceConfig c = f.config_path.empty() ? InstanceConfig{}
                                           : load_config(f.config_path);
  if (f.n1) c.n1 = *f.n1;
  if (f.n2) c.n2 = *f.n2;
  if (f.k1) c.k1 = *f.k1;
  if (f.k2) c.k2 = *f.k2;
  if (f.walk) c.walk = parse_walk_kind(*f.walk);
  if (f.regime) c.regime = parse_regime(*f.regime);
  if (f.initial) c.initial = parse_initial_state(*f.initial);
  if (f.gamma) c.gamma = *f.gamma;
  if (f.t_max) c.t_max = *f.t_max;
  if (f.points) c.points = *f.points;
  c.validate();
  return c;
}

void emit(const Dataset& data, const std::string& out) {
  if (out.empty()) {
    std::cout << to_csv(data);
  } else {
    write_csv(data, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum walk search on complete bipartite graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonFlags f;
  GridSpec grid;
  CompareSpec cmp;
  std::vector<double> eps;
  std::string out_dir = "results";

  auto* overlap = app.add_subcommand("overlap", "eigenvector overlaps versus gamma");
  add_instance_flags(overlap, f);
  overlap->add_option("--gamma-min", grid.gamma_min, "lower end of the gamma grid");
  overlap->add_option("--gamma-max", grid.gamma_max, "upper end of the gamma grid");
  overlap->add_option("--gamma-points", grid.points, "gamma grid size");

  auto* evolve = app.add_subcommand("evolve", "success probability versus time");
  add_instance_flags(evolve, f);

  auto* compare = app.add_subcommand("compare", "runtime comparison over a k range");
  compare->add_option("--n1", cmp.n1, "size of the first part");
  compare->add_option("--n2", cmp.n2, "size of the second part");
  compare->add_option("--vary", cmp.vary, "k1 or k2")
      ->check(CLI::IsMember({"k1", "k2"}));
  compare->add_option("--fixed", cmp.fixed, "value of the other marked count");
  compare->add_option("--from", cmp.from, "first k");
  compare->add_option("--to", cmp.to, "last k");
  compare->add_option("--out", f.out, "output file (stdout when omitted)");

  auto* critical = app.add_subcommand("critical-gamma", "numerical critical hopping rate");
  add_instance_flags(critical, f);

  auto* detune = app.add_subcommand("detune", "peak probability under detuned gamma");
  add_instance_flags(detune, f);
  detune->add_option("--eps", eps, "detuning offsets")->delimiter(',');

  auto* coupon = app.add_subcommand("coupon", "expected repetitions to find every mark");
  add_instance_flags(coupon, f);

  auto* predict = app.add_subcommand("predict", "analytic predictions per regime");
  add_instance_flags(predict, f);

  auto* reproduce = app.add_subcommand("reproduce-all", "write every dataset and run all checks");
  reproduce->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*overlap) {
      emit(cmd_overlap(resolve(f), grid), f.out);
    } else if (*evolve) {
      emit(cmd_evolve(resolve(f)), f.out);
    } else if (*compare) {
      emit(cmd_compare(cmp), f.out);
    } else if (*critical) {
      emit(cmd_critical_gamma(resolve(f)), f.out);
    } else if (*detune) {
      emit(cmd_detune(resolve(f), eps), f.out);
    } else if (*coupon) {
      emit(cmd_coupon(resolve(f)), f.out);
    } else if (*predict) {
      emit(cmd_predict(resolve(f)), f.out);
    } else if (*reproduce) {
      const auto result = cmd_reproduce_all(out_dir);
      for (const auto& c : result.checks) {
        std::printf("%s %s observed=%.6g expected=%.6g\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.observed,
                    c.expected);
      }
      return result.all_pass() ? 0 : 1;
    }
  } catch (const qwalk::Error& e) {
    std::cerr << "qwalk: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
