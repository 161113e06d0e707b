#ifndef REGAME_IO_HPP
#define REGAME_IO_HPP

#include <string>
#include <vector>

#include "regame/bargain.hpp"
#include "regame/game.hpp"
#include "regame/oracle.hpp"
#include "regame/sweep.hpp"

namespace regame {

/// Up to 12 significant digits, round-trip safe for every value we emit.
std::string format_number(double v);

inline constexpr const char* kSweepCsvHeader =
    "theta_g,theta_d,delta,abstain,alpha0,beta0,alpha1,beta1,u_g,u_d,class,backfire,mutualism";

/// Deterministic CSV for sweep records: exact header above, '\n' newlines,
/// no trailing separator, booleans as 0/1, class as a lowercase token.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

/// One parsed CSV row; mirrors the sweep columns.
struct CsvRow {
  double theta_g = 0.0, theta_d = 0.0, delta = 0.0;
  bool abstain = false;
  double alpha0 = 0.0, beta0 = 0.0, alpha1 = 0.0, beta1 = 0.0;
  double u_g = 0.0, u_d = 0.0;
  std::string cls;
  bool backfire = false, mutualism = false;
};

/// Throws std::invalid_argument naming the first missing column on schema
/// mismatch; malformed rows also throw.
std::vector<CsvRow> parse_sweep_csv(const std::string& text);
std::vector<CsvRow> read_sweep_csv(const std::string& path);

/// Throws std::runtime_error on failure to write.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Fixed key order, 12 significant digits.
std::string outcome_to_json(const EquilibriumOutcome& outcome, int indent = 0);
std::string bargain_to_json(const BargainResult& result);
std::string compare_to_json(const CompareReport& report);
std::string probe_to_json(const ProbeReport& report, int indent = 0);

}  // namespace regame

#endif
