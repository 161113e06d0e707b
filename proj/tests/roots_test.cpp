#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "regame/game.hpp"
#include "regame/roots.hpp"

using namespace regame;

TEST_CASE("quartic with two real roots") {
  const auto roots = real_roots(Polynomial{{-1.0, 0.0, 0.0, 0.0, 1.0}});  // x^4 - 1
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(roots[1].value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("double root with complex pair") {
  // (x - 0.25)^2 (x^2 + 1) = x^4 - 0.5 x^3 + 1.0625 x^2 - 0.5 x + 0.0625
  const auto roots = real_roots(Polynomial{{0.0625, -0.5, 1.0625, -0.5, 1.0}});
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].value == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(roots[0].multiplicity == 2);
}

TEST_CASE("linear and quadratic closed forms") {
  auto roots = real_roots(Polynomial{{-3.0, 1.5}});
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].value == doctest::Approx(2.0).epsilon(1e-12));
  roots = real_roots(Polynomial{{2.0, -3.0, 1.0}});  // (x-1)(x-2)
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(roots[1].value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(real_roots(Polynomial{{1.0, 0.0, 1.0}}).empty());  // x^2 + 1
}

TEST_CASE("construct-then-solve round trip on random quartics") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> draw(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    double r[4];
    for (double& x : r) x = draw(rng);
    std::sort(r, r + 4);
    bool separated = true;
    for (int i = 0; i + 1 < 4; ++i) separated = separated && (r[i + 1] - r[i] > 1e-3);
    if (!separated) continue;
    // expand (x-r0)(x-r1)(x-r2)(x-r3)
    Polynomial p{{1.0}};
    for (double root : r) {
      Polynomial q{std::vector<double>(p.coeffs.size() + 1, 0.0)};
      for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        q.coeffs[i] -= root * p.coeffs[i];
        q.coeffs[i + 1] += p.coeffs[i];
      }
      p = q;
    }
    const auto roots = real_roots(p);
    REQUIRE(roots.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(roots[static_cast<std::size_t>(i)].value ==
                                      doctest::Approx(r[i]).epsilon(1e-8));
  }
}

TEST_CASE("residual bound holds on every returned root") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> draw(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p{{draw(rng), draw(rng), draw(rng), draw(rng), draw(rng)}};
    if (trimmed(p).degree() < 1) continue;
    for (const RealRoot& root : real_roots(p)) {
      CHECK(std::abs(p.eval(root.value)) <= kRootTol * std::max(1.0, p.max_abs_coeff()));
    }
  }
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(real_roots(Polynomial{{0.0, 0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(real_roots(Polynomial{{1.0, 1.0, 1.0, 1.0, 1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("trimming drops tiny leading coefficients") {
  const Polynomial p = trimmed(Polynomial{{1.0, 2.0, 1e-15}});
  CHECK(p.degree() == 1);
}
