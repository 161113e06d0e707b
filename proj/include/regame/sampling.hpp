#ifndef REGAME_SAMPLING_HPP
#define REGAME_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "regame/game.hpp"

namespace regame {

/// Seeded generator of random game instances for probes and oracle checks.
/// Own-costs are uniform on [0.5, 2], revenue weights uniform on [0.5, 2],
/// delta uniform on [0.2, 0.8]; cross-terms are drawn to satisfy the
/// requested structural condition by construction.
class GameSampler {
 public:
  explicit GameSampler(std::uint64_t seed) : rng_(seed) {}

  /// Interior condition holds for both players (cross-terms drawn below the
  /// interior bound with a 0.9 margin).
  GameParams sample_interior();

  /// Two-sided condition holds with |c_ab| <= margin * bound; the margin
  /// keeps the sampled games away from the degenerate boundary where the
  /// guaranteed mutual improvement shrinks to zero.
  GameParams sample_two_sided(double margin = 0.9);

  /// Any valid game whose unregulated equilibrium coordinates stay below
  /// coord_bound, so a fine brute-force grid remains tractable (rejection
  /// sampled).
  GameParams sample_valid(double coord_bound = 1.2);

 private:
  double uniform(double lo, double hi);

  std::mt19937_64 rng_;
};

}  // namespace regame

#endif
