#ifndef REGAME_SOLVER_HPP
#define REGAME_SOLVER_HPP

#include <string>
#include <vector>

#include "regame/game.hpp"

namespace regame {

/// One best-response candidate together with its provenance and feasibility.
struct Candidate {
  Strategy strategy;
  CandidateLabel label = CandidateLabel::Abstain;
  bool available = true;   // generating formula was well defined
  bool feasible = false;   // satisfies its constraint pattern within kFeasTol
  double utility = 0.0;    // deciding player's utility at this candidate
  std::string note;
};

struct CandidateSet {
  std::vector<Candidate> candidates;
};

/// Specialist candidates for a fixed generalist strategy and floor theta_d.
CandidateSet d_candidates(const GameParams& params, const Strategy& g0, double theta_d);

struct DBestResponse {
  bool abstain = false;
  Strategy strategy;
  CandidateLabel label = CandidateLabel::Abstain;
  double u_d = 0.0;
};

/// Feasible candidate maximizing U_D; abstains when every candidate is
/// infeasible (which includes U_D < -kFeasTol).
DBestResponse d_best_response(const GameParams& params, const Strategy& g0, double theta_d);

/// Generalist candidates under regulation, including the zero-profit curve
/// points of ud_zero_curve_candidates.
CandidateSet g_candidates(const GameParams& params, const Regulation& reg);

/// Points on the specialist's zero-utility frontier (U_D at the minimal
/// compliance response, as a function of gamma0): intersections with
/// alpha0 = 0 and beta0 = theta_g, plus the interior stationary point of
/// max U_G subject to U_D = 0. At most one point per label; every returned
/// point re-evaluates through d_best_response with |U_D| <= kCurveTol.
std::vector<Candidate> ud_zero_curve_candidates(const GameParams& params, const Regulation& reg);

/// Subgame-perfect equilibrium by candidate enumeration.
EquilibriumOutcome solve_spe(const GameParams& params, const Regulation& reg);

/// The unregulated game solved through the shorter no-regulation candidate
/// lists; an independent cross-check of solve_spe at zero thresholds.
EquilibriumOutcome solve_unregulated(const GameParams& params);

}  // namespace regame

#endif
