#ifndef REGAME_ANALYSIS_HPP
#define REGAME_ANALYSIS_HPP

#include <map>
#include <vector>

#include "regame/sweep.hpp"

namespace regame {

struct UtilityPoint {
  double u_g = 0.0;
  double u_d = 0.0;
  double theta_g = 0.0;  // provenance
  double theta_d = 0.0;
  double delta = 0.0;
};

/// Northeastern faces of the convex hull of the input cloud: the vertex
/// chain from the max-u_d point to the max-u_g point, sorted by u_g
/// ascending. Collinear vertices merge at 1e-12 cross-product tolerance.
/// Throws std::invalid_argument on empty input.
std::vector<UtilityPoint> pareto_hull(const std::vector<UtilityPoint>& points);

enum class Regime { None, GOnly, DOnly, Both };

const char* to_string(Regime r);

/// none: theta_g = theta_d = 0; g_only: theta_g = theta_d > 0 (equal floors
/// constrain only the first mover on equilibrium paths); d_only: theta_g = 0,
/// theta_d > 0; both: theta_d > theta_g > 0.
Regime regime_of(const Regulation& reg);

struct RegimeHulls {
  std::vector<UtilityPoint> hull_none, hull_g_only, hull_d_only, hull_both;
  std::vector<Regime> empty_regimes;  // regimes with no input points
};

RegimeHulls regime_hulls(const std::vector<SweepRecord>& records);

struct BoundingBox {
  bool any = false;
  double theta_g_min = 0.0, theta_g_max = 0.0;
  double theta_d_min = 0.0, theta_d_max = 0.0;
};

struct SweepSummary {
  std::size_t total = 0;
  std::map<CellClass, std::size_t> class_counts;
  std::size_t backfire_flags = 0;   // boolean flags, independent of priority
  std::size_t mutualism_flags = 0;
  BoundingBox backfire_box;
  BoundingBox mutualism_box;
  double max_d_safety = 0.0, min_d_safety = 0.0;
};

/// Deterministic aggregation over sweep records. Throws on empty input.
SweepSummary summarize(const std::vector<SweepRecord>& records);

}  // namespace regame

#endif
