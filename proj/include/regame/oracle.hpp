#ifndef REGAME_ORACLE_HPP
#define REGAME_ORACLE_HPP

#include "regame/game.hpp"

namespace regame {

/// Search box for the brute-force solver: strategies live on the lattice
/// {0, h, 2h, ...} ∩ [0, gamma_max] per coordinate.
struct GridSpec {
  double gamma_max = 0.0;
  double step = 0.005;
  double cap = 4e6;  // maximum lattice points per player stage

  int points_per_axis() const;
};

/// 4x the largest coordinate the equilibrium could plausibly use: the
/// unregulated optimum plus the larger floor. Quadratic costs keep optima
/// well inside this box.
double default_gamma_max(const GameParams& params, const Regulation& reg);

struct OracleBestResponse {
  bool abstain = false;
  bool floor_exceeds_grid = false;  // no lattice point satisfies the floor
  Strategy strategy;
  double u_d = 0.0;
};

/// Exhaustive argmax of the specialist's utility over lattice points with
/// alpha1 >= alpha0 and beta1 >= max(beta0, theta_d). Ties prefer higher
/// beta, then higher alpha. Throws std::invalid_argument when the lattice
/// exceeds the cap.
OracleBestResponse oracle_best_response(const GameParams& params, const Strategy& g0,
                                        double theta_d, const GridSpec& grid);

/// Two-stage exhaustive equilibrium search on the lattice. Candidate labels
/// in the outcome are CandidateLabel::Grid.
EquilibriumOutcome oracle_spe(const GameParams& params, const Regulation& reg,
                              const GridSpec& grid);

struct CompareReport {
  double du_g = 0.0;          // analytic minus oracle
  double du_d = 0.0;
  double dist_gamma0 = 0.0;   // Euclidean strategy distances
  double dist_gamma1 = 0.0;
  double tol_u = 0.0;
  double tol_strategy = 0.0;
  bool pass = false;          // gated on utilities only
};

/// tol_u = K * h with K = 5 * (1 + max cost entry + max revenue weight);
/// pass requires |du| <= tol_u for both players (so the oracle also never
/// beats the analytic optimum by more than discretization noise).
CompareReport compare(const EquilibriumOutcome& analytic, const EquilibriumOutcome& oracle,
                      const GameParams& params, const GridSpec& grid);

}  // namespace regame

#endif
