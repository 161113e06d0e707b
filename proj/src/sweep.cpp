#include "regame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "regame/parallel.hpp"
#include "regame/solver.hpp"

namespace regame {

const char* to_string(CellClass c) {
  switch (c) {
    case CellClass::Abstain: return "abstain";
    case CellClass::Backfire: return "backfire";
    case CellClass::Mutualism: return "mutualism";
    case CellClass::SafetyImproving: return "safety_improving";
    case CellClass::Neutral: return "neutral";
    case CellClass::Mixed: return "mixed";
  }
  return "unknown";
}

std::vector<double> enumerate_axis(double min, double max, double step) {
  if (step <= 0.0) throw std::invalid_argument("axis step must be > 0");
  std::vector<double> values;
  for (int i = 0;; ++i) {
    const double v = min + i * step;
    if (v > max + kFeasTol) break;
    values.push_back(v);
  }
  return values;
}

std::vector<Regulation> enumerate_grid(const SweepGrid& grid) {
  const std::vector<double> tg = enumerate_axis(grid.theta_g_min, grid.theta_g_max, grid.theta_g_step);
  const std::vector<double> td = enumerate_axis(grid.theta_d_min, grid.theta_d_max, grid.theta_d_step);
  std::vector<Regulation> cells;
  for (double g : tg) {
    for (double d : td) {
      if (grid.constrain_td_ge_tg && d < g - kFeasTol) continue;
      cells.push_back({g, d});
    }
  }
  return cells;
}

SweepRecord classify(const Regulation& reg, double delta, const EquilibriumOutcome& outcome,
                     const EquilibriumOutcome& baseline) {
  SweepRecord rec;
  rec.regulation = reg;
  rec.delta = delta;
  rec.outcome = outcome;
  rec.baseline = baseline;
  rec.d_safety = outcome.gamma1.beta - baseline.gamma1.beta;
  rec.d_ug = outcome.u_g - baseline.u_g;
  rec.d_ud = outcome.u_d - baseline.u_d;
  rec.backfire = !outcome.abstained && outcome.gamma1.beta < baseline.gamma1.beta - kClassTol;
  rec.mutualism = !outcome.abstained && outcome.u_g > baseline.u_g + kClassTol &&
                  outcome.u_d > baseline.u_d + kClassTol;
  if (outcome.abstained) {
    rec.classification = CellClass::Abstain;
  } else if (rec.backfire) {
    rec.classification = CellClass::Backfire;
  } else if (rec.mutualism) {
    rec.classification = CellClass::Mutualism;
  } else if (outcome.gamma1.beta > baseline.gamma1.beta + kClassTol) {
    rec.classification = CellClass::SafetyImproving;
  } else {
    rec.classification = CellClass::Neutral;
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const GameParams& params, const SweepGrid& grid,
                                   const std::vector<double>& deltas, int threads) {
  const std::vector<Regulation> cells = enumerate_grid(grid);
  std::vector<EquilibriumOutcome> baselines(deltas.size());
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    GameParams p = params;
    p.delta = deltas[k];
    baselines[k] = solve_spe(p, {0.0, 0.0});
  }

  std::vector<SweepRecord> records(deltas.size() * cells.size());
  parallel_for(records.size(), threads, [&](std::size_t idx) {
    const std::size_t k = idx / cells.size();
    const Regulation& reg = cells[idx % cells.size()];
    GameParams p = params;
    p.delta = deltas[k];
    try {
      records[idx] = classify(reg, deltas[k], solve_spe(p, reg), baselines[k]);
    } catch (const std::exception& e) {
      records[idx].regulation = reg;
      records[idx].delta = deltas[k];
      records[idx].baseline = baselines[k];
      records[idx].error = e.what();
    }
  });
  return records;
}

OnsetResult find_backfire_onset(const GameParams& params) {
  OnsetResult result;
  const EquilibriumOutcome base = solve_unregulated(params);
  if (base.abstained || base.gamma1.beta <= kFeasTol) {
    result.message = "no backfire onset in range: unregulated safety is zero";
    return result;
  }
  const double b1 = base.gamma1.beta;
  auto switched = [&](double theta_d) {
    return solve_spe(params, {0.0, theta_d}).g_candidate != base.g_candidate;
  };

  // Coarse scan for the first label switch, then bisect the bracket.
  constexpr int kScan = 512;
  double lo = 0.0, hi = -1.0;
  for (int i = 1; i <= kScan; ++i) {
    const double t = b1 * i / (kScan + 1);
    if (switched(t)) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi < 0.0) {
    result.message = "no backfire onset in range";
    return result;
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (switched(mid) ? hi : lo) = mid;
  }
  result.found = true;
  result.theta_d_star = 0.5 * (lo + hi);
  result.below = classify({0.0, lo}, params.delta, solve_spe(params, {0.0, lo}), base);
  result.above = classify({0.0, hi}, params.delta, solve_spe(params, {0.0, hi}), base);
  return result;
}

namespace {

bool probe_hypothesis(const GameParams& params, bool two_sided, ProbeReport& rep) {
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    rep.message = "hypothesis not met: delta must lie strictly in (0,1)";
    return false;
  }
  try {
    const bool ok = two_sided ? two_sided_condition(params)
                              : interior_condition(params, Player::G) &&
                                    interior_condition(params, Player::D);
    if (!ok) {
      rep.message = two_sided ? "hypothesis not met: two-sided cost condition fails"
                              : "hypothesis not met: interior condition fails";
      return false;
    }
  } catch (const std::invalid_argument& e) {
    rep.message = std::string("hypothesis not met: ") + e.what();
    return false;
  }
  rep.hypothesis_met = true;
  return true;
}

}  // namespace

ProbeReport theorem1_probe(const GameParams& params, double epsilon) {
  ProbeReport rep;
  if (!probe_hypothesis(params, /*two_sided=*/false, rep)) return rep;
  const EquilibriumOutcome base = solve_unregulated(params);
  rep.beta0_unreg = base.gamma0.beta;
  rep.beta1_unreg = base.gamma1.beta;

  auto backfires = [&](double theta_d) {
    if (theta_d <= 0.0) return false;
    const EquilibriumOutcome out = solve_spe(params, {0.0, theta_d});
    return !out.abstained && out.gamma1.beta < base.gamma1.beta - kClassTol;
  };

  rep.backfire_at_beta0_minus_eps = backfires(rep.beta0_unreg - epsilon);
  rep.backfire_at_beta1_minus_eps = backfires(rep.beta1_unreg - epsilon);
  if (rep.backfire_at_beta1_minus_eps) {
    rep.first_backfire_theta_d = rep.beta1_unreg - epsilon;
  } else if (rep.backfire_at_beta0_minus_eps) {
    rep.first_backfire_theta_d = rep.beta0_unreg - epsilon;
  } else if (epsilon > 0.0) {
    // Scan (0, beta1_unreg) descending; backfires concentrate near the top.
    for (double t = rep.beta1_unreg - epsilon; t > 0.0; t -= epsilon) {
      if (backfires(t)) {
        rep.first_backfire_theta_d = t;
        break;
      }
    }
  }
  rep.pass = rep.first_backfire_theta_d > 0.0;
  rep.message = rep.pass ? "backfiring regulation found below unregulated beta1"
                         : "no backfiring regulation found";
  return rep;
}

ProbeReport theorem2_probe(const GameParams& params, double epsilon) {
  ProbeReport rep;
  if (!probe_hypothesis(params, /*two_sided=*/true, rep)) return rep;
  const EquilibriumOutcome base = solve_unregulated(params);
  rep.beta0_unreg = base.gamma0.beta;
  rep.beta1_unreg = base.gamma1.beta;
  rep.regulation = {base.gamma0.beta + epsilon, base.gamma1.beta + 2.0 * epsilon};
  const EquilibriumOutcome out = solve_spe(params, rep.regulation);
  rep.d_ug = out.u_g - base.u_g;
  rep.d_ud = out.u_d - base.u_d;
  if (epsilon == 0.0) {
    rep.degenerate = true;
    rep.message = "degenerate: epsilon = 0 leaves the regulation at the unregulated optimum";
    return rep;
  }
  rep.pass = !out.abstained && rep.d_ug > kClassTol && rep.d_ud > kClassTol;
  rep.message = rep.pass ? "both utilities strictly improve" : "no mutual improvement";
  return rep;
}

}  // namespace regame
