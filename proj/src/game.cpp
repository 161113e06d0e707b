#include "regame/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace regame {

const char* to_string(CandidateLabel label) {
  switch (label) {
    case CandidateLabel::Unconstrained: return "unconstrained";
    case CandidateLabel::BetaPinned: return "beta-pinned";
    case CandidateLabel::AlphaPinned: return "alpha-pinned";
    case CandidateLabel::OriginPinned: return "origin-pinned";
    case CandidateLabel::MinimalCompliance: return "minimal-compliance";
    case CandidateLabel::CurveIntersectAlpha0: return "curve-intersect-alpha0";
    case CandidateLabel::CurveIntersectThetaG: return "curve-intersect-thetaG";
    case CandidateLabel::CurveInterior: return "curve-interior";
    case CandidateLabel::Abstain: return "abstain";
    case CandidateLabel::Grid: return "grid";
  }
  return "unknown";
}

double CostMatrix::max_abs_entry() const {
  return std::max({std::abs(c_aa), std::abs(c_bb), std::abs(c_ab)});
}

namespace {

void check_cost_matrix(const CostMatrix& c, const char* name, ValidationReport& report) {
  if (!(c.c_aa >= 0.0)) {
    report.violations.push_back(std::string(name) + ".c_aa >= 0 violated");
  }
  if (!(c.c_bb >= 0.0)) {
    report.violations.push_back(std::string(name) + ".c_bb >= 0 violated");
  }
  if (!(c.c_ab > -std::sqrt(std::max(0.0, c.c_aa * c.c_bb)))) {
    report.violations.push_back(std::string(name) + ": c_ab > -sqrt(c_aa*c_bb) violated");
  }
  if (!std::isfinite(c.c_aa) || !std::isfinite(c.c_bb) || !std::isfinite(c.c_ab)) {
    report.violations.push_back(std::string(name) + ": entries must be finite");
  }
}

}  // namespace

ValidationReport validate(const GameParams& params) {
  ValidationReport report;
  check_cost_matrix(params.c0, "c0", report);
  check_cost_matrix(params.c1, "c1", report);
  if (!(params.r_a >= 0.0) || !std::isfinite(params.r_a)) {
    report.violations.push_back("r_a >= 0 violated");
  }
  if (!(params.r_b >= 0.0) || !std::isfinite(params.r_b)) {
    report.violations.push_back("r_b >= 0 violated");
  }
  if (!(params.delta >= 0.0 && params.delta <= 1.0)) {
    report.violations.push_back("delta in [0,1] violated");
  }
  if (params.r_a == 0.0 || params.r_b == 0.0) {
    report.warnings.push_back("zero revenue weight: interior conditions use limit semantics");
  }
  return report;
}

double cost_g(const GameParams& params, const Strategy& g0) {
  const Eigen::Vector2d v = g0.vec();
  return v.dot(params.c0.mat() * v);
}

double cost_d(const GameParams& params, const Strategy& g1, const Strategy& g0) {
  const Eigen::Vector2d d = g1.vec() - g0.vec();
  return d.dot(params.c1.mat() * d);
}

Utilities utilities(const GameParams& params, const Strategy& g0, const Strategy& g1) {
  const double revenue = params.revenue().dot(g1.vec());
  return {params.delta * revenue - cost_g(params, g0),
          (1.0 - params.delta) * revenue - cost_d(params, g1, g0)};
}

bool is_positive_definite(const CostMatrix& c) {
  return c.c_aa + c.c_bb > 0.0 && c.det() > 0.0;
}

namespace {

double interior_bound(const CostMatrix& c, double r_a, double r_b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (r_a == 0.0 && r_b == 0.0) {
    throw std::invalid_argument("interior condition undefined: r_a = r_b = 0");
  }
  const double geo = std::sqrt(std::max(0.0, c.c_aa * c.c_bb));
  const double ratio_a = r_a == 0.0 ? inf : c.c_aa * r_b / r_a;
  const double ratio_b = r_b == 0.0 ? inf : c.c_bb * r_a / r_b;
  return std::min({geo, ratio_a, ratio_b});
}

}  // namespace

bool interior_condition(const GameParams& params, Player player) {
  const CostMatrix& c = player == Player::G ? params.c0 : params.c1;
  return c.c_ab < interior_bound(c, params.r_a, params.r_b);
}

bool two_sided_condition(const GameParams& params) {
  return std::abs(params.c0.c_ab) < interior_bound(params.c0, params.r_a, params.r_b) &&
         std::abs(params.c1.c_ab) < interior_bound(params.c1, params.r_a, params.r_b);
}

}  // namespace regame
