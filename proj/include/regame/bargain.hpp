#ifndef REGAME_BARGAIN_HPP
#define REGAME_BARGAIN_HPP

#include <string>
#include <vector>

#include "regame/game.hpp"
#include "regame/sweep.hpp"

namespace regame {

enum class Criterion { Utilitarian, Nash, Egalitarian };

const char* to_string(Criterion c);
bool criterion_from_string(const std::string& name, Criterion& out);

struct BargainSpec {
  Criterion criterion = Criterion::Utilitarian;
  std::vector<double> delta_values;  // strictly increasing, all in (0,1)

  /// The 98-point grid 0.01, 0.02, ..., 0.98.
  static std::vector<double> default_deltas();
};

/// Criterion score of one outcome; abstained outcomes score 0 everywhere.
double bargain_score(Criterion c, const EquilibriumOutcome& outcome);

struct BargainResult {
  double delta_star = 0.0;
  EquilibriumOutcome outcome;
  double score = 0.0;
  bool viable = false;  // false when every delta leads to abstention
  std::vector<std::pair<double, double>> scores;  // (delta, score) per grid point
};

/// Grid search over delta. Exact score ties resolve toward delta closest to
/// 0.5, then the smaller delta.
BargainResult bargain(const GameParams& params_base, const Regulation& reg,
                      const BargainSpec& spec);

/// One record per grid cell: the cell's bargained outcome classified against
/// the bargained (0,0) baseline under the same criterion. record.delta holds
/// the cell's delta_star.
std::vector<SweepRecord> bargained_sweep(const GameParams& params_base, const SweepGrid& grid,
                                         const BargainSpec& spec, int threads = 1);

}  // namespace regame

#endif
