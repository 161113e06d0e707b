#include "regame/bargain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "regame/parallel.hpp"
#include "regame/solver.hpp"

namespace regame {

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Utilitarian: return "utilitarian";
    case Criterion::Nash: return "nash";
    case Criterion::Egalitarian: return "egalitarian";
  }
  return "unknown";
}

bool criterion_from_string(const std::string& name, Criterion& out) {
  if (name == "utilitarian") out = Criterion::Utilitarian;
  else if (name == "nash") out = Criterion::Nash;
  else if (name == "egalitarian") out = Criterion::Egalitarian;
  else return false;
  return true;
}

std::vector<double> BargainSpec::default_deltas() {
  std::vector<double> v;
  for (int i = 1; i <= 98; ++i) v.push_back(i / 100.0);
  return v;
}

double bargain_score(Criterion c, const EquilibriumOutcome& outcome) {
  if (outcome.abstained) return 0.0;
  switch (c) {
    case Criterion::Utilitarian: return outcome.u_g + outcome.u_d;
    case Criterion::Nash: return outcome.u_g * outcome.u_d;
    case Criterion::Egalitarian: return std::min(outcome.u_g, outcome.u_d);
  }
  return 0.0;
}

BargainResult bargain(const GameParams& params_base, const Regulation& reg,
                      const BargainSpec& spec) {
  const std::vector<double>& deltas =
      spec.delta_values.empty() ? BargainSpec::default_deltas() : spec.delta_values;
  if (deltas.empty()) throw std::invalid_argument("bargain: empty delta grid");

  BargainResult result;
  bool have = false;
  for (double d : deltas) {
    GameParams p = params_base;
    p.delta = d;
    const EquilibriumOutcome out = solve_spe(p, reg);
    const double score = bargain_score(spec.criterion, out);
    result.scores.emplace_back(d, score);
    bool take = !have;
    if (have && score == result.score) {
      const double cur = std::abs(result.delta_star - 0.5);
      const double cand = std::abs(d - 0.5);
      take = cand < cur || (cand == cur && d < result.delta_star);
    } else if (have && score > result.score) {
      take = true;
    }
    if (take) {
      have = true;
      result.delta_star = d;
      result.outcome = out;
      result.score = score;
    }
    if (!out.abstained) result.viable = true;
  }
  return result;
}

std::vector<SweepRecord> bargained_sweep(const GameParams& params_base, const SweepGrid& grid,
                                         const BargainSpec& spec, int threads) {
  const std::vector<Regulation> cells = enumerate_grid(grid);
  const BargainResult base = bargain(params_base, {0.0, 0.0}, spec);

  std::vector<SweepRecord> records(cells.size());
  parallel_for(records.size(), threads, [&](std::size_t idx) {
    const Regulation& reg = cells[idx];
    try {
      const BargainResult r = bargain(params_base, reg, spec);
      records[idx] = classify(reg, r.delta_star, r.outcome, base.outcome);
    } catch (const std::exception& e) {
      records[idx].regulation = reg;
      records[idx].baseline = base.outcome;
      records[idx].error = e.what();
    }
  });
  return records;
}

}  // namespace regame
