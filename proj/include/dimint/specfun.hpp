#pragma once

// Gamma-function machinery, the universal first-order coefficient f(D) and
// the Gauss hypergeometric family F(1/2, (3-D)/2; D/2; y).

#include <cmath>
#include <limits>

#include "dimint/errors.hpp"
#include "dimint/jet.hpp"

namespace dimint {

/// Spatial dimension D >= 1 together with delta = 1/D and beta = (D-1)/2.
class Dimension {
 public:
  explicit Dimension(double D);

  double D() const { return D_; }
  double delta() const { return 1.0 / D_; }
  double beta() const { return 0.5 * (D_ - 1.0); }

 private:
  double D_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// f(D) = Gamma(D/2+1/2) Gamma(D+1/2) / (Gamma(D/2) Gamma(D+1)), the
/// first-order 1/Z coefficient of the 1s^2 pair. Accepts D = +infinity.
double f_universal(double D);

/// Largest finite D for which gauss_2f1_family sums the series; above it the
/// D -> infinity limit (1+y)^{-1/2} is returned.
inline constexpr double kHypergeometricSeriesLimit = 1e9;

/// F(1/2, (3-D)/2; D/2; y) for y in [0, 1). Templated so that Jet arguments
/// carry derivatives with respect to the orbital exponents through y.
template <class T>
T gauss_2f1_family(double D, const T& y) {
  using std::pow;
  const double y0 = scalar_value(y);
  if (!(y0 >= 0.0 && y0 < 1.0)) throw DomainError("gauss_2f1_family: y must lie in [0, 1)");
  if (!(D >= 1.0)) throw DomainError("gauss_2f1_family: D must be >= 1");
  if (D > kHypergeometricSeriesLimit) return pow(1.0 + y, -0.5);

  const double a = 0.5;
  const double b = 0.5 * (3.0 - D);
  const double c = 0.5 * D;
  T sum(1.0);
  T term(1.0);
  int small_terms = 0;
  constexpr long kMaxTerms = 1'000'000;
  for (long n = 0; n < kMaxTerms; ++n) {
    const double factor = (a + n) * (b + n) / ((c + n) * (n + 1.0));
    if (factor == 0.0) return sum;  // terminating series: b is a non-positive integer
    term = term * y;
    term = term * factor;
    sum += term;
    if (magnitude(term) <= 1e-17 * magnitude(sum)) {
      if (++small_terms == 3) return sum;
    } else {
      small_terms = 0;
    }
  }
  throw NonConvergence("gauss_2f1_family: series did not converge");
}

}  // namespace dimint
