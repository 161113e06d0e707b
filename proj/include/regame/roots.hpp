#ifndef REGAME_ROOTS_HPP
#define REGAME_ROOTS_HPP

#include <utility>
#include <vector>

namespace regame {

/// Dense univariate polynomial, coefficients in ascending degree order.
struct Polynomial {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double x) const;
  double max_abs_coeff() const;
};

/// Drops leading coefficients below eps_coeff relative to the largest one.
Polynomial trimmed(Polynomial p, double eps_coeff = 1e-12);

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

/// All real roots of a polynomial of (trimmed) degree <= 4, sorted ascending.
/// Each root satisfies |p(x)| <= kRootTol * max(1, max|coeff|). Throws
/// std::invalid_argument for the zero polynomial or degree > 4.
std::vector<RealRoot> real_roots(const Polynomial& p);

}  // namespace regame

#endif
