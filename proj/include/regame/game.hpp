#ifndef REGAME_GAME_HPP
#define REGAME_GAME_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace regame {

// Tolerances shared across the library. Sweep steps are >= 0.005, several
// orders of magnitude above every one of these.
inline constexpr double kFeasTol = 1e-9;   // constraint feasibility slack
inline constexpr double kTieTol = 1e-9;    // candidate utility ties
inline constexpr double kCurveTol = 1e-7;  // residual for zero-profit curve points
inline constexpr double kRootTol = 1e-10;  // polynomial root residual
inline constexpr double kClassTol = 1e-6;  // sweep cell classification strictness

/// Symmetric 2x2 cost matrix over (performance, safety).
struct CostMatrix {
  double c_aa = 0.0;  // own-cost of performance
  double c_bb = 0.0;  // own-cost of safety
  double c_ab = 0.0;  // cross term

  Eigen::Matrix2d mat() const {
    Eigen::Matrix2d m;
    m << c_aa, c_ab, c_ab, c_bb;
    return m;
  }
  double det() const { return c_aa * c_bb - c_ab * c_ab; }
  double max_abs_entry() const;
};

/// One full game instance: both cost matrices, revenue weights and the
/// generalist's revenue share.
struct GameParams {
  CostMatrix c0;  // generalist
  CostMatrix c1;  // specialist
  double r_a = 0.0;
  double r_b = 0.0;
  double delta = 0.0;

  Eigen::Vector2d revenue() const { return {r_a, r_b}; }
};

/// A point in nonnegative (performance, safety) space.
struct Strategy {
  double alpha = 0.0;
  double beta = 0.0;

  Eigen::Vector2d vec() const { return {alpha, beta}; }
};

/// Safety floors for the generalist (beta0 >= theta_g) and the specialist
/// (beta1 >= theta_d).
struct Regulation {
  double theta_g = 0.0;
  double theta_d = 0.0;
};

enum class Player { G, D };

/// Provenance of a best-response candidate, in fixed tie-breaking order.
enum class CandidateLabel {
  Unconstrained,
  BetaPinned,
  AlphaPinned,
  OriginPinned,
  MinimalCompliance,
  CurveIntersectAlpha0,
  CurveIntersectThetaG,
  CurveInterior,
  Abstain,
  Grid,  // produced by the grid oracle, not by candidate enumeration
};

const char* to_string(CandidateLabel label);

struct EquilibriumOutcome {
  bool abstained = false;
  Strategy gamma0;
  Strategy gamma1;
  double u_g = 0.0;
  double u_d = 0.0;
  CandidateLabel g_candidate = CandidateLabel::Abstain;
  CandidateLabel d_candidate = CandidateLabel::Abstain;
};

/// Validation never aborts; it reports every violated invariant.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const GameParams& params);

/// gamma0' C0 gamma0
double cost_g(const GameParams& params, const Strategy& g0);

/// (gamma1 - gamma0)' C1 (gamma1 - gamma0)
double cost_d(const GameParams& params, const Strategy& g1, const Strategy& g0);

struct Utilities {
  double u_g = 0.0;
  double u_d = 0.0;
};

Utilities utilities(const GameParams& params, const Strategy& g0, const Strategy& g1);

/// 2x2 spectral criterion: trace > 0 and det > 0.
bool is_positive_definite(const CostMatrix& c);

/// c_ab < min(sqrt(c_aa c_bb), c_aa r_b / r_a, c_bb r_a / r_b) for the given
/// player's matrix. A zero revenue weight sends the corresponding ratio to
/// +infinity; throws std::invalid_argument when both weights are zero.
bool interior_condition(const GameParams& params, Player player);

/// |c_ab| < the same bound, for both players.
bool two_sided_condition(const GameParams& params);

}  // namespace regame

#endif
