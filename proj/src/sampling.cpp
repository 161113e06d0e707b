#include "regame/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "regame/solver.hpp"

namespace regame {

double GameSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

GameParams GameSampler::sample_interior() {
  GameParams p;
  p.r_a = uniform(0.5, 2.0);
  p.r_b = uniform(0.5, 2.0);
  p.delta = uniform(0.2, 0.8);
  for (CostMatrix* c : {&p.c0, &p.c1}) {
    c->c_aa = uniform(0.5, 2.0);
    c->c_bb = uniform(0.5, 2.0);
    const double geo = std::sqrt(c->c_aa * c->c_bb);
    const double bound =
        std::min({geo, c->c_aa * p.r_b / p.r_a, c->c_bb * p.r_a / p.r_b});
    c->c_ab = uniform(-0.9 * geo, 0.9 * bound);
  }
  return p;
}

GameParams GameSampler::sample_two_sided(double margin) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    GameParams p;
    p.r_a = uniform(0.5, 2.0);
    p.r_b = uniform(0.5, 2.0);
    p.delta = uniform(0.2, 0.8);
    for (CostMatrix* c : {&p.c0, &p.c1}) {
      c->c_aa = uniform(0.5, 2.0);
      c->c_bb = uniform(0.5, 2.0);
      const double bound = std::min({std::sqrt(c->c_aa * c->c_bb),
                                     c->c_aa * p.r_b / p.r_a, c->c_bb * p.r_a / p.r_b});
      c->c_ab = uniform(-margin * bound, margin * bound);
    }
    // Keep the unregulated scale away from zero: mutual-improvement margins
    // under regulations sized relative to beta1 shrink with beta1, and tiny
    // instances would drown in the classification tolerance.
    const EquilibriumOutcome un = solve_unregulated(p);
    if (!un.abstained && un.gamma1.beta >= 0.2) return p;
  }
  throw std::runtime_error("sample_two_sided: rejection sampling did not converge");
}

GameParams GameSampler::sample_valid(double coord_bound) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    GameParams p;
    p.r_a = uniform(0.5, 2.0);
    p.r_b = uniform(0.5, 2.0);
    p.delta = uniform(0.2, 0.8);
    for (CostMatrix* c : {&p.c0, &p.c1}) {
      c->c_aa = uniform(0.5, 2.0);
      c->c_bb = uniform(0.5, 2.0);
      const double geo = std::sqrt(c->c_aa * c->c_bb);
      c->c_ab = uniform(-0.7 * geo, 0.9 * geo);
    }
    if (!validate(p).ok()) continue;
    const EquilibriumOutcome un = solve_unregulated(p);
    if (un.abstained) continue;
    const double top =
        std::max({un.gamma0.alpha, un.gamma0.beta, un.gamma1.alpha, un.gamma1.beta});
    if (top <= coord_bound) return p;
  }
  throw std::runtime_error("sample_valid: rejection sampling did not converge");
}

}  // namespace regame
