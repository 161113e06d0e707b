#ifndef REGAME_SVG_HPP
#define REGAME_SVG_HPP

#include <string>
#include <vector>

#include "regame/io.hpp"

namespace regame {

/// Standalone SVG heatmap over the (theta_g, theta_d) lattice found in the
/// rows; metric is one of safety | u_g | u_d | class. Numeric metrics use a
/// red-yellow-green ramp with min/max in the legend; class is categorical.
/// When a cell appears in several rows (multi-delta sweeps) the last row
/// wins. Throws std::invalid_argument on an unknown metric or no rows.
std::string heatmap_svg(const std::vector<CsvRow>& rows, const std::string& metric);

}  // namespace regame

#endif
