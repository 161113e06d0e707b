#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "regame/oracle.hpp"
#include "regame/sampling.hpp"
#include "regame/solver.hpp"

using namespace regame;

namespace {

GameParams canonical() {
  GameParams p;
  p.c0 = {1.0, 1.0, 0.0};
  p.c1 = {1.0, 1.0, 0.0};
  p.r_a = 1.0;
  p.r_b = 1.0;
  p.delta = 0.5;
  return p;
}

}  // namespace

TEST_CASE("grid best response lands on the analytic optimum when on-grid") {
  const GameParams p = canonical();
  const GridSpec grid{2.0, 0.005, 4e6};
  OracleBestResponse br = oracle_best_response(p, {0.25, 0.25}, 0.0, grid);
  CHECK_FALSE(br.abstain);
  CHECK(br.strategy.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(br.strategy.beta == doctest::Approx(0.5).epsilon(1e-12));

  br = oracle_best_response(p, {0.25, 0.0}, 0.45, grid);
  CHECK(br.strategy.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(br.strategy.beta == doctest::Approx(0.45).epsilon(1e-12));
}

TEST_CASE("floor above the grid is flagged") {
  const GameParams p = canonical();
  const GridSpec grid{1.0, 0.005, 4e6};
  const OracleBestResponse br = oracle_best_response(p, {0.25, 0.25}, 5.0, grid);
  CHECK(br.floor_exceeds_grid);
  CHECK(br.abstain);
}

TEST_CASE("grid equilibrium search matches the closed form") {
  const GameParams p = canonical();
  const GridSpec grid{2.0, 0.005, 4e6};

  EquilibriumOutcome out = oracle_spe(p, {0.0, 0.0}, grid);
  CHECK(std::abs(out.u_g - 0.375) < 0.01);
  CHECK(std::abs(out.u_d - 0.375) < 0.01);

  out = oracle_spe(p, {0.0, 0.45}, grid);
  CHECK(out.gamma1.beta == doctest::Approx(0.45).epsilon(1e-12));  // backfire reproduced

  // degenerate 2-points-per-axis grid still runs
  const EquilibriumOutcome coarse = oracle_spe(p, {0.0, 0.0}, {2.0, 2.0, 4e6});
  CHECK(std::isfinite(coarse.u_g));
}

TEST_CASE("comparison report semantics") {
  const GameParams p = canonical();
  const GridSpec grid{2.0, 0.005, 4e6};
  const EquilibriumOutcome analytic = solve_spe(p, {0.0, 0.0});
  const EquilibriumOutcome grid_out = oracle_spe(p, {0.0, 0.0}, grid);

  CompareReport rep = compare(analytic, grid_out, p, grid);
  CHECK(rep.pass);
  rep = compare(analytic, analytic, p, grid);
  CHECK(rep.pass);
  CHECK(rep.du_g == 0.0);

  EquilibriumOutcome perturbed = analytic;
  perturbed.u_g += 10.0 * rep.tol_u;
  CHECK_FALSE(compare(perturbed, grid_out, p, grid).pass);
}

TEST_CASE("grid cap is enforced") {
  const GameParams p = canonical();
  CHECK_THROWS_AS(oracle_spe(p, {0.0, 0.0}, GridSpec{100.0, 0.001, 4e6}),
                  std::invalid_argument);
}

TEST_CASE("the oracle never beats the analytic solution beyond grid noise") {
  GameSampler sampler(20);
  for (int i = 0; i < 5; ++i) {
    const GameParams p = sampler.sample_valid();
    const EquilibriumOutcome base = solve_unregulated(p);
    const double top = std::max({base.gamma0.alpha, base.gamma0.beta, base.gamma1.alpha,
                                 base.gamma1.beta});
    const Regulation regs[] = {{0.0, 0.0},
                               {0.0, 0.8 * base.gamma1.beta},
                               {0.6 * base.gamma0.beta + 0.05, 1.2 * base.gamma1.beta + 0.1}};
    for (const Regulation& reg : regs) {
      const double theta_max = std::max(reg.theta_g, reg.theta_d);
      const GridSpec grid{2.0 * top + 3.0 * theta_max + 0.5, 0.005, 4e6};
      const CompareReport rep =
          compare(solve_spe(p, reg), oracle_spe(p, reg, grid), p, grid);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("halving the step never loses utility beyond tolerance") {
  const GameParams p = canonical();
  const GridSpec coarse{2.0, 0.02, 4e6};
  const GridSpec fine{2.0, 0.01, 4e6};
  const Regulation reg{0.0, 0.45};
  const EquilibriumOutcome a = oracle_spe(p, reg, coarse);
  const EquilibriumOutcome b = oracle_spe(p, reg, fine);
  const double tol_u = compare(a, a, p, coarse).tol_u;
  CHECK(b.u_g >= a.u_g - tol_u);
}
