#include "regame/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regame {

namespace {

double cross(const UtilityPoint& o, const UtilityPoint& a, const UtilityPoint& b) {
  return (a.u_g - o.u_g) * (b.u_d - o.u_d) - (a.u_d - o.u_d) * (b.u_g - o.u_g);
}

}  // namespace

std::vector<UtilityPoint> pareto_hull(const std::vector<UtilityPoint>& points) {
  if (points.empty()) throw std::invalid_argument("pareto_hull: empty input");

  std::vector<UtilityPoint> pts = points;
  std::sort(pts.begin(), pts.end(), [](const UtilityPoint& a, const UtilityPoint& b) {
    if (a.u_g != b.u_g) return a.u_g < b.u_g;
    return a.u_d < b.u_d;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const UtilityPoint& a, const UtilityPoint& b) {
                          return a.u_g == b.u_g && a.u_d == b.u_d;
                        }),
            pts.end());

  // Upper hull by monotone chain; a right turn or collinearity pops.
  std::vector<UtilityPoint> upper;
  for (const UtilityPoint& p : pts) {
    while (upper.size() >= 2 &&
           cross(upper[upper.size() - 2], upper.back(), p) >= -1e-12) {
      upper.pop_back();
    }
    upper.push_back(p);
  }

  // Keep only faces whose outward normal has both components >= 0, i.e. the
  // suffix starting at the maximum-u_d vertex.
  std::size_t start = 0;
  for (std::size_t i = 1; i < upper.size(); ++i) {
    if (upper[i].u_d > upper[start].u_d) start = i;
  }
  return {upper.begin() + static_cast<std::ptrdiff_t>(start), upper.end()};
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::None: return "none";
    case Regime::GOnly: return "g_only";
    case Regime::DOnly: return "d_only";
    case Regime::Both: return "both";
  }
  return "unknown";
}

Regime regime_of(const Regulation& reg) {
  const bool g_zero = reg.theta_g <= kFeasTol;
  const bool d_zero = reg.theta_d <= kFeasTol;
  if (g_zero && d_zero) return Regime::None;
  if (g_zero) return Regime::DOnly;
  if (std::abs(reg.theta_d - reg.theta_g) <= kFeasTol) return Regime::GOnly;
  return Regime::Both;
}

RegimeHulls regime_hulls(const std::vector<SweepRecord>& records) {
  std::vector<UtilityPoint> buckets[4];
  for (const SweepRecord& rec : records) {
    if (!rec.error.empty()) continue;
    const Regime r = regime_of(rec.regulation);
    buckets[static_cast<int>(r)].push_back({rec.outcome.u_g, rec.outcome.u_d,
                                            rec.regulation.theta_g, rec.regulation.theta_d,
                                            rec.delta});
  }
  RegimeHulls hulls;
  std::vector<UtilityPoint>* out[4] = {&hulls.hull_none, &hulls.hull_g_only,
                                       &hulls.hull_d_only, &hulls.hull_both};
  for (int r = 0; r < 4; ++r) {
    if (buckets[r].empty()) {
      hulls.empty_regimes.push_back(static_cast<Regime>(r));
    } else {
      *out[r] = pareto_hull(buckets[r]);
    }
  }
  return hulls;
}

namespace {

void grow(BoundingBox& box, const Regulation& reg) {
  if (!box.any) {
    box = {true, reg.theta_g, reg.theta_g, reg.theta_d, reg.theta_d};
    return;
  }
  box.theta_g_min = std::min(box.theta_g_min, reg.theta_g);
  box.theta_g_max = std::max(box.theta_g_max, reg.theta_g);
  box.theta_d_min = std::min(box.theta_d_min, reg.theta_d);
  box.theta_d_max = std::max(box.theta_d_max, reg.theta_d);
}

}  // namespace

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize: empty input");
  SweepSummary s;
  s.total = records.size();
  bool first = true;
  for (const SweepRecord& rec : records) {
    ++s.class_counts[rec.classification];
    if (rec.backfire) {
      ++s.backfire_flags;
      grow(s.backfire_box, rec.regulation);
    }
    if (rec.mutualism) {
      ++s.mutualism_flags;
      grow(s.mutualism_box, rec.regulation);
    }
    if (first) {
      s.max_d_safety = s.min_d_safety = rec.d_safety;
      first = false;
    } else {
      s.max_d_safety = std::max(s.max_d_safety, rec.d_safety);
      s.min_d_safety = std::min(s.min_d_safety, rec.d_safety);
    }
  }
  return s;
}

}  // namespace regame
