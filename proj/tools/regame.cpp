#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regame/analysis.hpp"
#include "regame/bargain.hpp"
#include "regame/config.hpp"
#include "regame/io.hpp"
#include "regame/oracle.hpp"
#include "regame/sampling.hpp"
#include "regame/solver.hpp"
#include "regame/svg.hpp"
#include "regame/sweep.hpp"

namespace {

using namespace regame;

constexpr int kOk = 0, kCheckFail = 1, kUsage = 2, kIoError = 3;

RunConfig config_or_default(const std::string& path) {
  return path.empty() ? RunConfig{} : load_config(path);
}

std::string params_to_json(const GameParams& p, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto cost = [&](const CostMatrix& c) {
    return "{\"c_aa\": " + format_number(c.c_aa) + ", \"c_bb\": " + format_number(c.c_bb) +
           ", \"c_ab\": " + format_number(c.c_ab) + "}";
  };
  std::string s = pad + "{\n";
  s += pad + "  \"c0\": " + cost(p.c0) + ",\n";
  s += pad + "  \"c1\": " + cost(p.c1) + ",\n";
  s += pad + "  \"r_a\": " + format_number(p.r_a) + ",\n";
  s += pad + "  \"r_b\": " + format_number(p.r_b) + ",\n";
  s += pad + "  \"delta\": " + format_number(p.delta) + "\n";
  s += pad + "}";
  return s;
}

int cmd_solve(const RunConfig& cfg, double theta_g, double theta_d) {
  const EquilibriumOutcome out = solve_spe(cfg.game, {theta_g, theta_d});
  std::printf("%s\n", outcome_to_json(out).c_str());
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, const std::string& out_path, int threads) {
  const std::vector<SweepRecord> records =
      run_sweep(cfg.game, cfg.grid, cfg.effective_sweep_deltas(), threads);
  if (records.empty()) {
    std::fprintf(stderr, "warning: empty grid, writing header only\n");
  }
  const std::string csv = sweep_to_csv(records);
  if (out_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

int cmd_bargain(const RunConfig& cfg, const std::string& criterion, double theta_g,
                double theta_d) {
  BargainSpec spec = cfg.bargain;
  if (!criterion.empty() && !criterion_from_string(criterion, spec.criterion)) {
    std::fprintf(stderr, "unknown criterion '%s'\n", criterion.c_str());
    return kUsage;
  }
  const BargainResult result = bargain(cfg.game, {theta_g, theta_d}, spec);
  std::printf("%s\n", bargain_to_json(result).c_str());
  return kOk;
}

int cmd_probe(const RunConfig& cfg, int theorem, double epsilon, int trials,
              std::uint64_t seed) {
  GameSampler sampler(seed);
  std::string detail;
  int passes = 0, hypothesis_met = 0;
  for (int t = 0; t < trials; ++t) {
    const GameParams game =
        theorem == 1 ? sampler.sample_interior() : sampler.sample_two_sided();
    // epsilon <= 0 selects the per-game relative default 1e-3 * beta1.
    double eps = epsilon;
    if (eps <= 0.0) {
      const EquilibriumOutcome un = solve_unregulated(game);
      eps = 1e-3 * (un.abstained ? 1.0 : un.gamma1.beta);
      if (eps <= 0.0) eps = 1e-3;
    }
    const ProbeReport rep =
        theorem == 1 ? theorem1_probe(game, eps) : theorem2_probe(game, eps);
    if (rep.hypothesis_met) ++hypothesis_met;
    if (rep.pass) ++passes;
    if (!detail.empty()) detail += ",\n";
    detail += "    {\n      \"params\":\n" + params_to_json(game, 6) +
              ",\n      \"epsilon\": " + format_number(eps) + ",\n      \"report\":\n" +
              probe_to_json(rep, 6) + "\n    }";
  }
  const bool all_pass = passes == hypothesis_met && hypothesis_met == trials;
  std::string s = "{\n";
  s += "  \"theorem\": " + std::to_string(theorem) + ",\n";
  s += "  \"trials\": " + std::to_string(trials) + ",\n";
  s += "  \"seed\": " + std::to_string(seed) + ",\n";
  s += "  \"hypothesis_met\": " + std::to_string(hypothesis_met) + ",\n";
  s += "  \"passes\": " + std::to_string(passes) + ",\n";
  s += "  \"all_pass\": " + std::string(all_pass ? "true" : "false") + ",\n";
  s += "  \"trials_detail\": [\n" + detail + "\n  ]\n}";
  std::printf("%s\n", s.c_str());
  return all_pass ? kOk : kCheckFail;
}

int cmd_oracle_check(const RunConfig& cfg, int trials, std::uint64_t seed) {
  GameSampler sampler(seed);
  std::string detail;
  int passes = 0, total = 0;
  for (int t = 0; t < trials; ++t) {
    const GameParams game = sampler.sample_valid();
    const EquilibriumOutcome un = solve_unregulated(game);
    const double top =
        std::max({un.gamma0.alpha, un.gamma0.beta, un.gamma1.alpha, un.gamma1.beta});
    const Regulation regs[3] = {{0.0, 0.0},
                                {0.0, 0.8 * un.gamma1.beta},
                                {0.6 * un.gamma0.beta + 0.05, 1.2 * un.gamma1.beta + 0.1}};
    for (const Regulation& reg : regs) {
      GridSpec grid = cfg.oracle;
      if (grid.gamma_max <= 0.0) {
        grid.gamma_max = 2.0 * top + 3.0 * std::max(reg.theta_g, reg.theta_d) + 0.5;
      }
      const EquilibriumOutcome analytic = solve_spe(game, reg);
      const EquilibriumOutcome grid_out = oracle_spe(game, reg, grid);
      const CompareReport rep = compare(analytic, grid_out, game, grid);
      ++total;
      if (rep.pass) ++passes;
      if (!detail.empty()) detail += ",\n";
      detail += "    {\"trial\": " + std::to_string(t) +
                ", \"theta_g\": " + format_number(reg.theta_g) +
                ", \"theta_d\": " + format_number(reg.theta_d) + ",\n     \"report\": " +
                compare_to_json(rep) + "}";
    }
  }
  std::string s = "{\n";
  s += "  \"trials\": " + std::to_string(trials) + ",\n";
  s += "  \"seed\": " + std::to_string(seed) + ",\n";
  s += "  \"comparisons\": " + std::to_string(total) + ",\n";
  s += "  \"passes\": " + std::to_string(passes) + ",\n";
  s += "  \"reports\": [\n" + detail + "\n  ]\n}";
  std::printf("%s\n", s.c_str());
  return passes == total ? kOk : kCheckFail;
}

int cmd_pareto(const std::string& in_path, const std::string& out_path) {
  const std::vector<CsvRow> rows = read_sweep_csv(in_path);
  if (rows.empty()) {
    std::fprintf(stderr, "no data rows in %s\n", in_path.c_str());
    return kUsage;
  }
  // Rebuild minimal records for regime partitioning; classification fields
  // are irrelevant for the hulls.
  std::vector<SweepRecord> records(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    records[i].regulation = {rows[i].theta_g, rows[i].theta_d};
    records[i].delta = rows[i].delta;
    records[i].outcome.u_g = rows[i].u_g;
    records[i].outcome.u_d = rows[i].u_d;
  }
  const RegimeHulls hulls = regime_hulls(records);

  std::string csv = "regime,u_g,u_d,theta_g,theta_d,delta\n";
  auto emit = [&](const char* name, const std::vector<UtilityPoint>& hull) {
    for (const UtilityPoint& p : hull) {
      csv += std::string(name) + "," + format_number(p.u_g) + "," + format_number(p.u_d) +
             "," + format_number(p.theta_g) + "," + format_number(p.theta_d) + "," +
             format_number(p.delta) + "\n";
    }
  };
  emit("none", hulls.hull_none);
  emit("g_only", hulls.hull_g_only);
  emit("d_only", hulls.hull_d_only);
  emit("both", hulls.hull_both);
  if (out_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

int cmd_heatmap(const std::string& in_path, const std::string& metric,
                const std::string& out_path) {
  if (metric != "safety" && metric != "u_g" && metric != "u_d" && metric != "class") {
    throw std::invalid_argument("unknown metric: " + metric);
  }
  const std::vector<CsvRow> rows = read_sweep_csv(in_path);
  if (rows.empty()) {
    std::fprintf(stderr, "no data rows in %s\n", in_path.c_str());
    return kUsage;
  }
  const std::string svg = heatmap_svg(rows, metric);
  if (out_path.empty()) {
    std::fputs(svg.c_str(), stdout);
  } else {
    write_file(out_path, svg);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium solver and regulation-sweep analysis for a two-stage "
               "performance/safety investment game"};
  app.require_subcommand(1);

  std::string config_path, criterion, in_path, out_path, metric = "safety";
  double theta_g = 0.0, theta_d = 0.0, epsilon = 0.0;
  int theorem = 1, trials = -1, threads = -1;
  std::int64_t seed = -1;

  CLI::App* solve = app.add_subcommand("solve", "solve one regulated game, JSON to stdout");
  solve->add_option("--config", config_path);
  solve->add_option("--theta-g", theta_g);
  solve->add_option("--theta-d", theta_d);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep the regulation grid to CSV");
  sweep->add_option("--config", config_path);
  sweep->add_option("--out", out_path);
  sweep->add_option("--threads", threads);

  CLI::App* barg = app.add_subcommand("bargain", "select delta under a bargaining criterion");
  barg->add_option("--config", config_path);
  barg->add_option("--criterion", criterion);
  barg->add_option("--theta-g", theta_g);
  barg->add_option("--theta-d", theta_d);

  CLI::App* probe = app.add_subcommand("probe", "run a seeded random-game probe");
  probe->add_option("--config", config_path);
  probe->add_option("--theorem", theorem)->check(CLI::Range(1, 2));
  probe->add_option("--epsilon", epsilon);
  probe->add_option("--trials", trials);
  probe->add_option("--seed", seed);

  CLI::App* check = app.add_subcommand("oracle-check", "compare analytic vs grid solver");
  check->add_option("--config", config_path);
  check->add_option("--trials", trials);
  check->add_option("--seed", seed);

  CLI::App* pareto = app.add_subcommand("pareto", "hull vertices per regime from a sweep CSV");
  pareto->add_option("--in", in_path)->required();
  pareto->add_option("--out", out_path);

  CLI::App* heat = app.add_subcommand("heatmap", "SVG heatmap from a sweep CSV");
  heat->add_option("--in", in_path)->required();
  heat->add_option("--metric", metric);
  heat->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const RunConfig cfg = config_or_default(config_path);
    if (app.got_subcommand(solve)) return cmd_solve(cfg, theta_g, theta_d);
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(cfg, out_path, threads > 0 ? threads : cfg.threads);
    }
    if (app.got_subcommand(barg)) return cmd_bargain(cfg, criterion, theta_g, theta_d);
    if (app.got_subcommand(probe)) {
      return cmd_probe(cfg, theorem, epsilon, trials > 0 ? trials : 100,
                       seed >= 0 ? static_cast<std::uint64_t>(seed) : cfg.seed);
    }
    if (app.got_subcommand(check)) {
      return cmd_oracle_check(cfg, trials > 0 ? trials : 20,
                              seed >= 0 ? static_cast<std::uint64_t>(seed) : cfg.seed);
    }
    if (app.got_subcommand(pareto)) return cmd_pareto(in_path, out_path);
    if (app.got_subcommand(heat)) return cmd_heatmap(in_path, metric, out_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kIoError;
  }
  return kUsage;
}
