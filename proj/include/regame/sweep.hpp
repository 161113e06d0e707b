#ifndef REGAME_SWEEP_HPP
#define REGAME_SWEEP_HPP

#include <string>
#include <vector>

#include "regame/game.hpp"

namespace regame {

/// Rectangular regulation grid, enumerated row-major: theta_g outer
/// ascending, theta_d inner ascending, inclusive endpoints.
struct SweepGrid {
  double theta_g_min = 0.0, theta_g_max = 0.0, theta_g_step = 1.0;
  double theta_d_min = 0.0, theta_d_max = 0.0, theta_d_step = 1.0;
  bool constrain_td_ge_tg = true;  // skip cells with theta_d < theta_g
};

enum class CellClass { Abstain, Backfire, Mutualism, SafetyImproving, Neutral, Mixed };

const char* to_string(CellClass c);

struct SweepRecord {
  Regulation regulation;
  double delta = 0.0;
  EquilibriumOutcome outcome;
  EquilibriumOutcome baseline;  // the (0,0) solution at the same delta
  CellClass classification = CellClass::Neutral;
  bool backfire = false;
  bool mutualism = false;
  double d_safety = 0.0;  // final beta1 minus baseline beta1
  double d_ug = 0.0;
  double d_ud = 0.0;
  std::string error;  // per-cell solver failure, never aborts a sweep
};

std::vector<Regulation> enumerate_grid(const SweepGrid& grid);

/// Inclusive endpoint count for one axis: values min + i*step, i = 0..count-1.
std::vector<double> enumerate_axis(double min, double max, double step);

/// Pure classification from outcome and baseline; flags use kClassTol, the
/// primary class applies priority abstain > backfire > mutualism >
/// safety-improving > neutral.
SweepRecord classify(const Regulation& reg, double delta, const EquilibriumOutcome& outcome,
                     const EquilibriumOutcome& baseline);

/// One record per (delta, cell); params.delta is ignored in favor of the
/// deltas list. Output order: delta ascending (list order), then grid order.
/// Deterministic for any thread count.
std::vector<SweepRecord> run_sweep(const GameParams& params, const SweepGrid& grid,
                                   const std::vector<double>& deltas, int threads = 1);

struct OnsetResult {
  bool found = false;
  double theta_d_star = 0.0;
  SweepRecord below;  // bracketing certificates
  SweepRecord above;
  std::string message;
};

/// Bisection on theta_d in (0, unregulated beta1) at theta_g = 0 over the
/// predicate "G's chosen candidate label differs from the unregulated one",
/// to absolute precision 1e-6.
OnsetResult find_backfire_onset(const GameParams& params);

struct ProbeReport {
  bool hypothesis_met = false;
  bool pass = false;
  bool degenerate = false;  // epsilon = 0 leaves the regulation at the baseline
  double beta0_unreg = 0.0;
  double beta1_unreg = 0.0;
  // Probe 1: the two named thresholds plus a scan below beta1_unreg.
  bool backfire_at_beta0_minus_eps = false;
  bool backfire_at_beta1_minus_eps = false;
  double first_backfire_theta_d = 0.0;  // 0 when none found
  // Probe 2: utility gains at the constructed mutual-improvement regulation.
  Regulation regulation;
  double d_ug = 0.0;
  double d_ud = 0.0;
  std::string message;
};

/// Backfiring probe: requires the interior condition for both players and
/// delta in (0,1); passes iff some theta_d below the unregulated beta1
/// backfires at theta_g = 0 (the two named thresholds are checked first,
/// then a descending scan at resolution epsilon).
ProbeReport theorem1_probe(const GameParams& params, double epsilon);

/// Mutual-improvement probe: requires the two-sided condition and delta in
/// (0,1); solves at exactly (beta0_unreg + eps, beta1_unreg + 2 eps) and
/// passes iff both utilities strictly exceed the baseline by kClassTol.
ProbeReport theorem2_probe(const GameParams& params, double epsilon);

}  // namespace regame

#endif
