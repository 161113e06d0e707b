#ifndef REGAME_CONFIG_HPP
#define REGAME_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "regame/bargain.hpp"
#include "regame/game.hpp"
#include "regame/oracle.hpp"
#include "regame/sweep.hpp"

namespace regame {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One JSON document configuring every subcommand; all keys optional, with
/// the canonical game (identity costs, r = (1,1), delta = 0.5) as default.
/// Unknown keys are rejected with their path.
struct RunConfig {
  GameParams game{{1.0, 1.0, 0.0}, {1.0, 1.0, 0.0}, 1.0, 1.0, 0.5};
  SweepGrid grid{0.0, 1.2, 0.1, 0.0, 2.5, 0.05, true};
  GridSpec oracle{0.0, 0.005, 4e6};  // gamma_max 0 means auto-sized
  BargainSpec bargain;
  std::vector<double> sweep_deltas;  // empty means the singleton {game.delta}
  int threads = 1;
  std::uint64_t seed = 42;

  std::vector<double> effective_sweep_deltas() const {
    return sweep_deltas.empty() ? std::vector<double>{game.delta} : sweep_deltas;
  }
};

/// Throws ConfigError naming the offending key/path on any schema problem.
RunConfig parse_config(const std::string& json_text);

/// Reads and parses; throws ConfigError (parse) or std::runtime_error (I/O).
RunConfig load_config(const std::string& path);

}  // namespace regame

#endif
