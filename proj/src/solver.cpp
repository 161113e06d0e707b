#include "regame/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "regame/roots.hpp"

namespace regame {

namespace {

bool wins_tie(const Strategy& a, CandidateLabel la, const Strategy& b, CandidateLabel lb) {
  if (a.beta != b.beta) return a.beta > b.beta;
  if (a.alpha != b.alpha) return a.alpha > b.alpha;
  return static_cast<int>(la) < static_cast<int>(lb);
}

/// Deterministic argmax: higher utility, then higher beta, higher alpha,
/// earlier label in the taxonomy order.
bool better(double ua, const Strategy& sa, CandidateLabel la,
            double ub, const Strategy& sb, CandidateLabel lb) {
  if (ua > ub + kTieTol) return true;
  if (ub > ua + kTieTol) return false;
  return wins_tie(sa, la, sb, lb);
}

Candidate make_unavailable(CandidateLabel label, std::string note) {
  Candidate c;
  c.label = label;
  c.available = false;
  c.feasible = false;
  c.note = std::move(note);
  return c;
}

}  // namespace

CandidateSet d_candidates(const GameParams& params, const Strategy& g0, double theta_d) {
  const double kappa = std::max(g0.beta, theta_d);
  const CostMatrix& c1 = params.c1;
  const double share = 1.0 - params.delta;

  CandidateSet set;
  auto add = [&](Strategy s, CandidateLabel label, std::string note = {}) {
    Candidate cand;
    cand.strategy = s;
    cand.label = label;
    cand.note = std::move(note);
    cand.utility = utilities(params, g0, s).u_d;
    cand.feasible = s.alpha >= g0.alpha - kFeasTol && s.beta >= kappa - kFeasTol &&
                    cand.utility >= -kFeasTol;
    set.candidates.push_back(cand);
  };

  if (c1.det() > 0.0) {
    const Eigen::Vector2d inc = 0.5 * share * c1.mat().inverse() * params.revenue();
    add({g0.alpha + inc.x(), g0.beta + inc.y()}, CandidateLabel::Unconstrained);
  } else {
    set.candidates.push_back(
        make_unavailable(CandidateLabel::Unconstrained, "singular C1"));
  }

  if (c1.c_bb > 0.0) {
    add({g0.alpha, g0.beta + share * params.r_b / (2.0 * c1.c_bb)}, CandidateLabel::BetaPinned);
  } else {
    set.candidates.push_back(make_unavailable(CandidateLabel::BetaPinned, "c1.c_bb = 0"));
  }

  if (c1.c_aa > 0.0) {
    const double climb = std::max(0.0, theta_d - g0.beta);
    double alpha1 = g0.alpha + share * params.r_a / (2.0 * c1.c_aa) -
                    (c1.c_ab / c1.c_aa) * climb;
    std::string note;
    if (alpha1 < g0.alpha) {
      alpha1 = g0.alpha;  // alpha1 >= alpha0 is a hard constraint
      note = "alpha increment clamped";
    }
    add({alpha1, kappa}, CandidateLabel::MinimalCompliance, std::move(note));
  } else {
    set.candidates.push_back(
        make_unavailable(CandidateLabel::MinimalCompliance, "c1.c_aa = 0"));
  }

  add({g0.alpha, kappa}, CandidateLabel::OriginPinned);

  Candidate abst;
  abst.label = CandidateLabel::Abstain;
  abst.feasible = false;
  set.candidates.push_back(abst);
  return set;
}

DBestResponse d_best_response(const GameParams& params, const Strategy& g0, double theta_d) {
  const CandidateSet set = d_candidates(params, g0, theta_d);
  DBestResponse best;
  best.abstain = true;
  for (const Candidate& cand : set.candidates) {
    if (!cand.feasible) continue;
    if (best.abstain ||
        better(cand.utility, cand.strategy, cand.label, best.u_d, best.strategy, best.label)) {
      best = {false, cand.strategy, cand.label, cand.utility};
    }
  }
  return best;
}

namespace {

/// One piece of the specialist's zero-utility frontier. U_D composed with
/// D's floor-bound best response (beta1 = theta_d, alpha1 = alpha0 +
/// max(0, step - slope*(theta_d - beta0))) is piecewise quadratic in
/// gamma0 = (a, b):
///   f(a, b) = k_a * a + k_bb * b^2 + k_b * b + k_0,
/// with one piece where the alpha increment is interior and one where it
/// clamps to zero. lb0 is the constant term of dU_G/db on the matching
/// branch (the a and b coefficients are shared between pieces).
struct CurvePiece {
  double k_a = 0.0, k_b = 0.0, k_bb = 0.0, k_0 = 0.0;
  double lb0 = 0.0;
};

std::vector<CurvePiece> ud_zero_pieces(const GameParams& params, double theta_d) {
  std::vector<CurvePiece> pieces;
  const CostMatrix& c1 = params.c1;
  const double share = 1.0 - params.delta;
  const double k_a = share * params.r_a;

  if (c1.c_aa > 0.0) {
    const double step = share * params.r_a / (2.0 * c1.c_aa);
    const double slope = c1.c_ab / c1.c_aa;
    const double schur = c1.c_bb - c1.c_ab * c1.c_ab / c1.c_aa;
    CurvePiece interior;
    interior.k_a = k_a;
    interior.k_0 = share * params.r_a * step + share * params.r_b * theta_d -
                   c1.c_aa * step * step - share * params.r_a * slope * theta_d -
                   schur * theta_d * theta_d;
    interior.k_b = share * params.r_a * slope + 2.0 * schur * theta_d;
    interior.k_bb = -schur;
    interior.lb0 = params.delta * params.r_a * slope;
    pieces.push_back(interior);
  }

  // Clamped piece: D raises only safety, gamma1 = (a, theta_d), so
  // f = (1-delta)(r_a a + r_b theta_d) - c1_bb (theta_d - b)^2.
  CurvePiece clamped;
  clamped.k_a = k_a;
  clamped.k_0 = share * params.r_b * theta_d - c1.c_bb * theta_d * theta_d;
  clamped.k_b = 2.0 * c1.c_bb * theta_d;
  clamped.k_bb = -c1.c_bb;
  clamped.lb0 = 0.0;
  pieces.push_back(clamped);
  return pieces;
}

/// U_G at (g0, D's best response), or -inf when D abstains.
double ug_through_best_response(const GameParams& params, const Strategy& g0, double theta_d) {
  const DBestResponse br = d_best_response(params, g0, theta_d);
  if (br.abstain) return -std::numeric_limits<double>::infinity();
  return utilities(params, g0, br.strategy).u_g;
}

/// Fallback when the eliminated system is degenerate: sample the level set
/// over an alpha0 grid, solving the quadratic in beta0 per sample, then
/// refine the best sample by golden-section on alpha0. Utilities are scored
/// through the actual best response, so this works on either piece.
std::optional<Strategy> curve_dense_sample(const GameParams& params, const CurvePiece& f,
                                           const Regulation& reg) {
  const double a_hi = std::abs(params.delta * params.r_a) /
                          (2.0 * std::max(params.c0.c_aa, 1e-12)) * 4.0 +
                      reg.theta_g + reg.theta_d + 1.0;
  constexpr int kSamples = 10000;

  auto betas_at = [&](double a) {
    std::vector<double> out;
    Polynomial q{{f.k_0 + f.k_a * a, f.k_b, f.k_bb}};
    try {
      for (const RealRoot& r : real_roots(q)) out.push_back(r.value);
    } catch (const std::invalid_argument&) {
    }
    return out;
  };
  auto best_beta_at = [&](double a) -> std::optional<std::pair<double, double>> {
    std::optional<std::pair<double, double>> best;  // (u_g, b)
    for (double b : betas_at(a)) {
      if (b < reg.theta_g - kFeasTol || b > reg.theta_d + kFeasTol) continue;
      const double u = ug_through_best_response(params, {a, b}, reg.theta_d);
      if (!best || u > best->first) best = {u, b};
    }
    return best;
  };

  double best_a = 0.0, best_u = 0.0;
  bool found = false;
  for (int i = 0; i <= kSamples; ++i) {
    const double a = a_hi * static_cast<double>(i) / kSamples;
    if (auto hit = best_beta_at(a)) {
      if (!found || hit->first > best_u) {
        found = true;
        best_u = hit->first;
        best_a = a;
      }
    }
  }
  if (!found) return std::nullopt;

  double lo = std::max(0.0, best_a - a_hi / kSamples);
  double hi = std::min(a_hi, best_a + a_hi / kSamples);
  constexpr double kInvPhi = 0.6180339887498949;
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    const double m1 = hi - kInvPhi * (hi - lo);
    const double m2 = lo + kInvPhi * (hi - lo);
    const auto u1 = best_beta_at(m1);
    const auto u2 = best_beta_at(m2);
    const double v1 = u1 ? u1->first : -1e300;
    const double v2 = u2 ? u2->first : -1e300;
    if (v1 >= v2) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double a = 0.5 * (lo + hi);
  if (auto hit = best_beta_at(a)) return Strategy{a, hit->second};
  return std::nullopt;
}

}  // namespace

std::vector<Candidate> ud_zero_curve_candidates(const GameParams& params, const Regulation& reg) {
  std::vector<Candidate> out;
  const std::vector<CurvePiece> pieces = ud_zero_pieces(params, reg.theta_d);

  struct Raw {
    Strategy point;
    CandidateLabel label;
  };
  std::vector<Raw> raw;
  const CostMatrix& c0 = params.c0;

  for (const CurvePiece& f : pieces) {
    // (a) intersection with alpha0 = 0.
    try {
      for (const RealRoot& r : real_roots(Polynomial{{f.k_0, f.k_b, f.k_bb}})) {
        raw.push_back({{0.0, r.value}, CandidateLabel::CurveIntersectAlpha0});
      }
    } catch (const std::invalid_argument&) {
    }

    const double scale = std::max({1.0, std::abs(f.k_0), std::abs(f.k_b), std::abs(f.k_bb)});
    if (std::abs(f.k_a) <= 1e-12 * scale) {
      if (auto point = curve_dense_sample(params, f, reg)) {
        raw.push_back({*point, CandidateLabel::CurveInterior});
      }
      continue;
    }

    // (b) intersection with beta0 = theta_g (f is linear in alpha0).
    const double a_at = -(f.k_0 + (f.k_bb * reg.theta_g + f.k_b) * reg.theta_g) / f.k_a;
    raw.push_back({{a_at, reg.theta_g}, CandidateLabel::CurveIntersectThetaG});

    // (c) interior stationary point of max U_G s.t. f = 0. The multiplier is
    // eliminated from the two stationarity equations (both linear in it),
    // and alpha0 is eliminated through f = 0, leaving one polynomial in
    // beta0 of degree <= 3.
    // alpha0 on the curve: a(b) = A0 + A1 b + A2 b^2.
    const double a0 = -f.k_0 / f.k_a, a1 = -f.k_b / f.k_a, a2 = -f.k_bb / f.k_a;
    // dU_G/da = la0 + la_a * a + la_b * b; dU_G/db likewise.
    const double la0 = params.delta * params.r_a, la_a = -2.0 * c0.c_aa, la_b = -2.0 * c0.c_ab;
    const double lb0 = f.lb0, lb_a = -2.0 * c0.c_ab, lb_b = -2.0 * c0.c_bb;
    // df/db = q0 + q1 * b; df/da = k_a.
    const double q0 = f.k_b, q1 = 2.0 * f.k_bb;

    // La(a(b), b) and Lb(a(b), b) as polynomials in b.
    const auto compose = [&](double c, double ca, double cb) {
      return Polynomial{{c + ca * a0, ca * a1 + cb, ca * a2}};
    };
    const Polynomial la = compose(la0, la_a, la_b);
    const Polynomial lb = compose(lb0, lb_a, lb_b);
    Polynomial elim{{0.0, 0.0, 0.0, 0.0}};
    for (int i = 0; i <= 2; ++i) {
      elim.coeffs[static_cast<std::size_t>(i)] -= f.k_a * lb.coeffs[static_cast<std::size_t>(i)];
      elim.coeffs[static_cast<std::size_t>(i)] += q0 * la.coeffs[static_cast<std::size_t>(i)];
      elim.coeffs[static_cast<std::size_t>(i) + 1] +=
          q1 * la.coeffs[static_cast<std::size_t>(i)];
    }
    bool degenerate = true;
    try {
      for (const RealRoot& r : real_roots(elim)) {
        const double b = r.value;
        raw.push_back({{a0 + (a2 * b + a1) * b, b}, CandidateLabel::CurveInterior});
      }
      degenerate = false;
    } catch (const std::invalid_argument&) {
    }
    if (degenerate) {
      if (auto point = curve_dense_sample(params, f, reg)) {
        raw.push_back({*point, CandidateLabel::CurveInterior});
      }
    }
  }

  // Seam between the two pieces (the alpha increment hits zero): the curve
  // is kinked there, so the constrained maximum can sit exactly on the seam.
  if (params.c1.c_aa > 0.0 && params.c1.c_ab > 0.0) {
    const double share = 1.0 - params.delta;
    const double b_seam =
        reg.theta_d - share * params.r_a / (2.0 * params.c1.c_ab);
    const CurvePiece& f = pieces.back();
    const double scale = std::max({1.0, std::abs(f.k_0), std::abs(f.k_b), std::abs(f.k_bb)});
    if (std::abs(f.k_a) > 1e-12 * scale && b_seam >= reg.theta_g - kFeasTol) {
      const double a_seam = -(f.k_0 + (f.k_bb * b_seam + f.k_b) * b_seam) / f.k_a;
      raw.push_back({{a_seam, b_seam}, CandidateLabel::CurveInterior});
    }
  }

  // Validate each point through the specialist's actual best response and
  // keep the best-U_G representative per label.
  std::optional<Candidate> best[3];
  for (const Raw& r : raw) {
    const Strategy& p = r.point;
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) continue;
    if (p.alpha < -kFeasTol || p.beta < reg.theta_g - kFeasTol) continue;
    const DBestResponse br = d_best_response(params, p, reg.theta_d);
    if (br.abstain || std::abs(br.u_d) > kCurveTol) continue;
    Candidate cand;
    cand.strategy = {std::max(0.0, p.alpha), std::max(reg.theta_g, p.beta)};
    cand.label = r.label;
    cand.feasible = true;
    cand.utility = utilities(params, cand.strategy, br.strategy).u_g;
    const int slot = static_cast<int>(r.label) - static_cast<int>(CandidateLabel::CurveIntersectAlpha0);
    if (!best[slot] || cand.utility > best[slot]->utility) best[slot] = cand;
  }
  for (const auto& cand : best) {
    if (cand) out.push_back(*cand);
  }
  return out;
}

CandidateSet g_candidates(const GameParams& params, const Regulation& reg) {
  const CostMatrix& c0 = params.c0;
  CandidateSet set;
  auto add = [&](Strategy s, CandidateLabel label) {
    Candidate cand;
    cand.strategy = s;
    cand.label = label;
    cand.feasible = s.alpha >= -kFeasTol && s.beta >= reg.theta_g - kFeasTol;
    set.candidates.push_back(cand);
  };

  if (c0.det() > 0.0) {
    const Eigen::Vector2d v = 0.5 * params.delta * c0.mat().inverse() * params.revenue();
    add({v.x(), v.y()}, CandidateLabel::Unconstrained);
  } else {
    set.candidates.push_back(
        make_unavailable(CandidateLabel::Unconstrained, "singular C0"));
  }
  if (c0.c_bb > 0.0) {
    add({0.0, params.delta * params.r_b / (2.0 * c0.c_bb)}, CandidateLabel::BetaPinned);
  } else {
    set.candidates.push_back(make_unavailable(CandidateLabel::BetaPinned, "c0.c_bb = 0"));
  }
  if (c0.c_aa > 0.0) {
    add({params.delta * params.r_a / (2.0 * c0.c_aa) - (c0.c_ab / c0.c_aa) * reg.theta_g,
         reg.theta_g},
        CandidateLabel::AlphaPinned);
  } else {
    set.candidates.push_back(make_unavailable(CandidateLabel::AlphaPinned, "c0.c_aa = 0"));
  }
  add({0.0, reg.theta_g}, CandidateLabel::OriginPinned);

  // Branch-interior refinements: stationary points of U_G composed with D's
  // minimal-compliance and stay-at responses, plus their edge clips. Every
  // candidate is scored through D's actual best response, so extra points
  // can only sharpen the argmax; these are the maximizers when a binding
  // floor pulls the optimum into the interior (interfering specialist costs).
  const double dra = params.delta * params.r_a;
  if (c0.det() > 0.0 && params.c1.c_aa > 0.0) {
    const double t = params.c1.c_ab / params.c1.c_aa;
    const Eigen::Vector2d v = 0.5 * dra * c0.mat().inverse() * Eigen::Vector2d(1.0, t);
    add({std::max(0.0, v.x()), std::max(reg.theta_g, v.y())},
        CandidateLabel::MinimalCompliance);
    if (c0.c_bb > 0.0) {
      add({0.0, std::max(reg.theta_g, 0.5 * dra * t / c0.c_bb)}, CandidateLabel::BetaPinned);
    }
  }
  if (c0.det() > 0.0) {
    const Eigen::Vector2d v = 0.5 * dra * c0.mat().inverse() * Eigen::Vector2d(1.0, 0.0);
    add({std::max(0.0, v.x()), std::max(reg.theta_g, v.y())},
        CandidateLabel::MinimalCompliance);
  }
  if (c0.c_aa > 0.0 && reg.theta_d >= reg.theta_g) {
    add({std::max(0.0, (dra - 2.0 * c0.c_ab * reg.theta_d) / (2.0 * c0.c_aa)), reg.theta_d},
        CandidateLabel::AlphaPinned);
  }

  for (const Candidate& cand : ud_zero_curve_candidates(params, reg)) {
    set.candidates.push_back(cand);
  }

  Candidate abst;
  abst.label = CandidateLabel::Abstain;
  abst.feasible = false;
  set.candidates.push_back(abst);
  return set;
}

namespace {

EquilibriumOutcome solve_over(const GameParams& params, double theta_d,
                              const CandidateSet& set) {
  struct Pick {
    double value = 0.0;
    Strategy g0, g1;
    double u_d = 0.0;
    CandidateLabel g_label = CandidateLabel::Abstain;
    CandidateLabel d_label = CandidateLabel::Abstain;
  };
  std::optional<Pick> best;

  for (const Candidate& cand : set.candidates) {
    if (!cand.feasible || cand.label == CandidateLabel::Abstain) continue;
    const DBestResponse br = d_best_response(params, cand.strategy, theta_d);
    if (br.abstain) continue;  // mutual zero; no better than abstaining
    const double value = utilities(params, cand.strategy, br.strategy).u_g;
    if (value < -kFeasTol) continue;  // dominated by abstaining
    if (!best || better(value, cand.strategy, cand.label, best->value, best->g0, best->g_label)) {
      best = Pick{value, cand.strategy, br.strategy, br.u_d, cand.label, br.label};
    }
  }

  EquilibriumOutcome out;
  if (!best) {
    out.abstained = true;
    return out;
  }
  out.abstained = false;
  out.gamma0 = best->g0;
  out.gamma1 = best->g1;
  out.u_g = best->value;
  out.u_d = best->u_d;
  out.g_candidate = best->g_label;
  out.d_candidate = best->d_label;
  return out;
}

}  // namespace

EquilibriumOutcome solve_spe(const GameParams& params, const Regulation& reg) {
  return solve_over(params, reg.theta_d, g_candidates(params, reg));
}

EquilibriumOutcome solve_unregulated(const GameParams& params) {
  // Same machinery, restricted to the shorter no-regulation candidate list.
  CandidateSet set = g_candidates(params, Regulation{0.0, 0.0});
  std::erase_if(set.candidates, [](const Candidate& c) {
    return c.label == CandidateLabel::CurveIntersectAlpha0 ||
           c.label == CandidateLabel::CurveIntersectThetaG ||
           c.label == CandidateLabel::CurveInterior;
  });
  return solve_over(params, 0.0, set);
}

}  // namespace regame
