#include <cmath>
#include <random>

#include "doctest.h"
#include "regame/game.hpp"

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

TEST_CASE("quadratic cost of the first mover") {
  GameParams p = canonical();
  CHECK(cost_g(p, {0.25, 0.25}) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(cost_g(p, {0.0, 0.0}) == 0.0);
  p.c0 = {2.0, 1.0, 0.5};
  CHECK(cost_g(p, {1.0, 1.0}) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("quadratic cost of the increment") {
  GameParams p = canonical();
  CHECK(cost_d(p, {0.5, 0.5}, {0.25, 0.25}) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(cost_d(p, {0.3, 0.7}, {0.3, 0.7}) == 0.0);
  CHECK(cost_d(p, {0.5, 0.45}, {0.25, 0.0}) == doctest::Approx(0.265).epsilon(1e-12));
}

TEST_CASE("utilities on hand-checked points") {
  const GameParams p = canonical();
  Utilities u = utilities(p, {0.25, 0.25}, {0.5, 0.5});
  CHECK(u.u_g == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(u.u_d == doctest::Approx(0.375).epsilon(1e-12));
  u = utilities(p, {0.0, 0.0}, {0.0, 0.0});
  CHECK(u.u_g == 0.0);
  CHECK(u.u_d == 0.0);
  u = utilities(p, {0.25, 0.0}, {0.5, 0.45});
  CHECK(u.u_g == doctest::Approx(0.4125).epsilon(1e-12));
  CHECK(u.u_d == doctest::Approx(0.21).epsilon(1e-12));
}

TEST_CASE("positive definiteness by the 2x2 criterion") {
  CHECK(is_positive_definite({1.0, 1.0, 0.0}));
  CHECK_FALSE(is_positive_definite({1.0, 1.0, 1.0}));  // singular boundary
  CHECK(is_positive_definite({2.0, 2.0, -1.0}));
}

TEST_CASE("interior condition") {
  GameParams p = canonical();
  CHECK(interior_condition(p, Player::G));
  CHECK(interior_condition(p, Player::D));
  p.c0.c_ab = 0.99;
  CHECK(interior_condition(p, Player::G));
  p.c0.c_ab = 2.0;
  CHECK_FALSE(interior_condition(p, Player::G));
}

TEST_CASE("two-sided condition") {
  GameParams p = canonical();
  CHECK(two_sided_condition(p));
  p.c1.c_ab = -0.5;
  CHECK(two_sided_condition(p));
  p = canonical();
  p.r_b = 0.5;
  p.c0.c_ab = -0.99;  // |c_ab| above min(1, 0.5, 2) = 0.5
  CHECK_FALSE(two_sided_condition(p));
}

TEST_CASE("zero revenue weights") {
  GameParams p = canonical();
  p.r_a = 0.0;  // one ratio limit goes to +inf, the other collapses to 0
  p.c0.c_ab = -0.5;
  CHECK(interior_condition(p, Player::G));
  p.c0.c_ab = 0.0;
  CHECK_FALSE(interior_condition(p, Player::G));
  p.r_b = 0.0;
  CHECK_THROWS_AS(interior_condition(p, Player::G), std::invalid_argument);
}

TEST_CASE("validation accepts the canonical game and rejects broken ones") {
  CHECK(validate(canonical()).ok());
  GameParams p = canonical();
  p.c0 = {1.0, 1.0, -1.5};  // cross-term below the -sqrt(c_aa c_bb) bound
  CHECK_FALSE(validate(p).ok());
  p = canonical();
  p.delta = 1.5;
  CHECK_FALSE(validate(p).ok());
}

TEST_CASE("accounting identity over random games and strategies") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> cost(0.5, 2.0), cross(-0.4, 0.4), coord(0.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    GameParams p;
    p.c0 = {cost(rng), cost(rng), cross(rng)};
    p.c1 = {cost(rng), cost(rng), cross(rng)};
    p.r_a = cost(rng);
    p.r_b = cost(rng);
    p.delta = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Strategy g0{coord(rng), coord(rng)};
    const Strategy g1{g0.alpha + coord(rng), g0.beta + coord(rng)};
    const Utilities u = utilities(p, g0, g1);
    const double revenue = p.r_a * g1.alpha + p.r_b * g1.beta;
    const double total = u.u_g + u.u_d + cost_g(p, g0) + cost_d(p, g1, g0);
    CHECK(total == doctest::Approx(revenue).epsilon(1e-12));
    CHECK(cost_g(p, g0) >= 0.0);
    CHECK(cost_d(p, g1, g0) >= 0.0);
  }
}

TEST_CASE("pd check agrees with eigenvalues of the characteristic polynomial") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const CostMatrix c{entry(rng), entry(rng), entry(rng)};
    // lambda^2 - tr*lambda + det = 0; both roots positive iff tr > 0, det > 0
    // and the discriminant is nonnegative (always true for symmetric 2x2).
    const double tr = c.c_aa + c.c_bb;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * c.det()));
    const double lo = 0.5 * (tr - disc);
    CHECK(is_positive_definite(c) == (lo > 0.0));
    // concavity of the quadratic utility in own variables is governed by -2C
    CHECK(is_positive_definite(c) == (-2.0 * c.c_aa < 0.0 && 4.0 * c.det() > 0.0));
  }
}
