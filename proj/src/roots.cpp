#include "regame/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "regame/game.hpp"

namespace regame {

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

Polynomial trimmed(Polynomial p, double eps_coeff) {
  const double scale = p.max_abs_coeff();
  const double cutoff = eps_coeff * std::max(1.0, scale);
  while (!p.coeffs.empty() && std::abs(p.coeffs.back()) <= cutoff) {
    p.coeffs.pop_back();
  }
  return p;
}

namespace {

void quadratic_roots(double a, double b, double c, std::vector<double>& out) {
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  // Citardauq-style split avoids cancellation.
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  if (q != 0.0) {
    out.push_back(q / a);
    out.push_back(c / q);
  } else {
    out.push_back(0.0);
    out.push_back(-b / a);
  }
}

double newton_polish(const Polynomial& p, double x) {
  Polynomial dp;
  for (int k = 1; k <= p.degree(); ++k) {
    dp.coeffs.push_back(p.coeffs[static_cast<std::size_t>(k)] * k);
  }
  for (int it = 0; it < 30; ++it) {
    const double f = p.eval(x);
    const double g = dp.eval(x);
    if (g == 0.0) break;
    const double step = f / g;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

std::vector<RealRoot> real_roots(const Polynomial& p_in) {
  Polynomial p = trimmed(p_in);
  if (p.coeffs.empty()) {
    throw std::invalid_argument("real_roots: polynomial is identically zero");
  }
  const int deg = p.degree();
  if (deg > 4) {
    throw std::invalid_argument("real_roots: degree > 4 after trimming");
  }

  std::vector<double> raw;
  if (deg == 0) {
    return {};
  } else if (deg == 1) {
    raw.push_back(-p.coeffs[0] / p.coeffs[1]);
  } else if (deg == 2) {
    quadratic_roots(p.coeffs[2], p.coeffs[1], p.coeffs[0], raw);
  } else {
    // Companion matrix of the monic normalization.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = p.coeffs[static_cast<std::size_t>(deg)];
    for (int i = 0; i < deg; ++i) {
      companion(i, deg - 1) = -p.coeffs[static_cast<std::size_t>(i)] / lead;
      if (i + 1 < deg) companion(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    for (int i = 0; i < deg; ++i) {
      const std::complex<double> ev = solver.eigenvalues()[i];
      if (std::abs(ev.imag()) <= 1e-6 * std::max(1.0, std::abs(ev))) {
        raw.push_back(newton_polish(p, ev.real()));
      }
    }
  }

  const double residual_cap = kRootTol * std::max(1.0, p_in.max_abs_coeff());
  std::vector<double> accepted;
  for (double x : raw) {
    if (std::isfinite(x) && std::abs(p_in.eval(x)) <= residual_cap) {
      accepted.push_back(x);
    }
  }
  std::sort(accepted.begin(), accepted.end());

  std::vector<RealRoot> roots;
  std::size_t i = 0;
  while (i < accepted.size()) {
    std::size_t j = i + 1;
    double sum = accepted[i];
    while (j < accepted.size() &&
           accepted[j] - accepted[j - 1] <= 1e-7 * std::max(1.0, std::abs(accepted[j]))) {
      sum += accepted[j];
      ++j;
    }
    roots.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return roots;
}

}  // namespace regame
