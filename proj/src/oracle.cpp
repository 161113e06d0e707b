#include "regame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "regame/solver.hpp"

namespace regame {

namespace {

int ceil_index(double value, double h) {
  const int k = static_cast<int>(std::ceil(value / h - 1e-9));
  return std::max(0, k);
}

void check_cap(const GridSpec& grid) {
  const double n = static_cast<double>(grid.points_per_axis());
  if (n * n > grid.cap) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "grid cap exceeded: %.0f points per stage, cap %.0f; raise cap to at least %.0f",
                  n * n, grid.cap, n * n);
    throw std::invalid_argument(msg);
  }
}

}  // namespace

int GridSpec::points_per_axis() const {
  if (step <= 0.0 || gamma_max < step) {
    throw std::invalid_argument("GridSpec: requires step > 0 and gamma_max >= step");
  }
  return static_cast<int>(std::floor(gamma_max / step + 1e-9)) + 1;
}

double default_gamma_max(const GameParams& params, const Regulation& reg) {
  const EquilibriumOutcome un = solve_unregulated(params);
  double coord = 0.0;
  if (!un.abstained) {
    coord = std::max({un.gamma0.alpha, un.gamma0.beta, un.gamma1.alpha, un.gamma1.beta});
  }
  const double theta = std::max(reg.theta_g, reg.theta_d);
  return std::max(4.0 * (coord + theta), 1.0);
}

OracleBestResponse oracle_best_response(const GameParams& params, const Strategy& g0,
                                        double theta_d, const GridSpec& grid) {
  check_cap(grid);
  const int n = grid.points_per_axis();
  const double h = grid.step;
  const double share = 1.0 - params.delta;
  const CostMatrix& c1 = params.c1;

  OracleBestResponse best;
  const int i_lo = ceil_index(g0.alpha - kFeasTol, h);
  const int j_lo = ceil_index(std::max(g0.beta, theta_d) - kFeasTol, h);
  if (ceil_index(theta_d - kFeasTol, h) >= n) best.floor_exceeds_grid = true;
  if (i_lo >= n || j_lo >= n) {
    best.abstain = true;
    return best;
  }

  double top = 0.0;
  int bi = -1, bj = -1;
  for (int j = j_lo; j < n; ++j) {
    const double db = j * h - g0.beta;
    for (int i = i_lo; i < n; ++i) {
      const double da = i * h - g0.alpha;
      const double u = share * (params.r_a * i * h + params.r_b * j * h) -
                       (c1.c_aa * da * da + 2.0 * c1.c_ab * da * db + c1.c_bb * db * db);
      if (bi < 0 || u >= top) {  // later wins ties: higher beta, then alpha
        top = u;
        bi = i;
        bj = j;
      }
    }
  }
  if (top < -kFeasTol) {
    best.abstain = true;
    return best;
  }
  best.strategy = {bi * h, bj * h};
  best.u_d = top;
  return best;
}

EquilibriumOutcome oracle_spe(const GameParams& params, const Regulation& reg,
                              const GridSpec& grid) {
  check_cap(grid);
  const int n = grid.points_per_axis();
  const double h = grid.step;
  const double share = 1.0 - params.delta;
  const CostMatrix& c0 = params.c0;
  const CostMatrix& c1 = params.c1;

  // The specialist's utility splits as U_D(g0, d) = (1-delta) r . g0 + g(d)
  // with d the investment increment, so the inner argmax over d depends on
  // g0 only through the floor index and the box clipping. Precompute, per
  // increment row d_beta = j h, the best g over d_alpha, then suffix-max
  // those rows so an unclipped inner solve is O(1).
  auto g_of = [&](double da, double db) {
    return share * (params.r_a * da + params.r_b * db) -
           (c1.c_aa * da * da + 2.0 * c1.c_ab * da * db + c1.c_bb * db * db);
  };
  std::vector<double> row_val(static_cast<std::size_t>(n));
  std::vector<int> row_arg(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double top = g_of(0.0, j * h);
    int arg = 0;
    for (int i = 1; i < n; ++i) {
      const double v = g_of(i * h, j * h);
      if (v >= top) {
        top = v;
        arg = i;
      }
    }
    row_val[static_cast<std::size_t>(j)] = top;
    row_arg[static_cast<std::size_t>(j)] = arg;
  }
  std::vector<double> suf_val(static_cast<std::size_t>(n));
  std::vector<int> suf_i(static_cast<std::size_t>(n)), suf_j(static_cast<std::size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    const auto ju = static_cast<std::size_t>(j);
    // On ties the higher row (higher beta increment) wins.
    if (j == n - 1 || row_val[ju] > suf_val[ju + 1]) {
      suf_val[ju] = row_val[ju];
      suf_i[ju] = row_arg[ju];
      suf_j[ju] = j;
    } else {
      suf_val[ju] = suf_val[ju + 1];
      suf_i[ju] = suf_i[ju + 1];
      suf_j[ju] = suf_j[ju + 1];
    }
  }

  const int j_g = ceil_index(reg.theta_g - kFeasTol, h);
  const double revenue_cap = params.delta * (params.r_a + params.r_b) * grid.gamma_max;

  bool found = false;
  double best_val = 0.0, best_ud = 0.0;
  int bi0 = 0, bj0 = 0, bdi = 0, bdj = 0;

  for (int j0 = j_g; j0 < n; ++j0) {
    const double b0 = j0 * h;
    const int j_min = ceil_index(reg.theta_d - b0 - kFeasTol, h);
    if (j_min > n - 1 - j0) continue;  // floor beyond the box: D out, cell scores 0
    for (int i0 = 0; i0 < n; ++i0) {
      const double a0 = i0 * h;
      const double phi0 =
          c0.c_aa * a0 * a0 + 2.0 * c0.c_ab * a0 * b0 + c0.c_bb * b0 * b0;
      if (revenue_cap - phi0 < -kFeasTol) continue;  // cannot beat abstaining

      double g_best;
      int di, dj;
      const auto jm = static_cast<std::size_t>(j_min);
      if (suf_i[jm] <= n - 1 - i0 && suf_j[jm] <= n - 1 - j0) {
        g_best = suf_val[jm];
        di = suf_i[jm];
        dj = suf_j[jm];
      } else {
        // Clipped near the box edge: rescan the feasible rectangle.
        g_best = 0.0;
        di = -1;
        dj = -1;
        for (int j = j_min; j <= n - 1 - j0; ++j) {
          for (int i = 0; i <= n - 1 - i0; ++i) {
            const double v = g_of(i * h, j * h);
            if (di < 0 || v >= g_best) {
              g_best = v;
              di = i;
              dj = j;
            }
          }
        }
      }

      const double u_d = share * (params.r_a * a0 + params.r_b * b0) + g_best;
      if (u_d < -kFeasTol) continue;  // D abstains, cell scores 0
      const double value =
          params.delta * (params.r_a * (a0 + di * h) + params.r_b * (b0 + dj * h)) - phi0;
      if (value < -kFeasTol) continue;
      if (!found || value >= best_val) {  // loop order breaks ties: higher b0, then a0
        found = true;
        best_val = value;
        best_ud = u_d;
        bi0 = i0;
        bj0 = j0;
        bdi = di;
        bdj = dj;
      }
    }
  }

  EquilibriumOutcome out;
  if (!found) {
    out.abstained = true;
    return out;
  }
  out.abstained = false;
  out.gamma0 = {bi0 * h, bj0 * h};
  out.gamma1 = {(bi0 + bdi) * h, (bj0 + bdj) * h};
  out.u_g = best_val;
  out.u_d = best_ud;
  out.g_candidate = CandidateLabel::Grid;
  out.d_candidate = CandidateLabel::Grid;
  return out;
}

CompareReport compare(const EquilibriumOutcome& analytic, const EquilibriumOutcome& oracle,
                      const GameParams& params, const GridSpec& grid) {
  CompareReport rep;
  const double k = 5.0 * (1.0 + std::max(params.c0.max_abs_entry(), params.c1.max_abs_entry()) +
                          std::max(params.r_a, params.r_b));
  rep.tol_u = k * grid.step;
  rep.tol_strategy = 2.0 * grid.step;
  rep.du_g = analytic.u_g - oracle.u_g;
  rep.du_d = analytic.u_d - oracle.u_d;
  rep.dist_gamma0 = (analytic.gamma0.vec() - oracle.gamma0.vec()).norm();
  rep.dist_gamma1 = (analytic.gamma1.vec() - oracle.gamma1.vec()).norm();
  rep.pass = std::abs(rep.du_g) <= rep.tol_u && std::abs(rep.du_d) <= rep.tol_u;
  return rep;
}

}  // namespace regame
