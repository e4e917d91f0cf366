#include "dimint/specfun.hpp"

#include <cmath>
#include <numbers>

namespace dimint {

Dimension::Dimension(double D) : D_(D) {
  if (!(D >= 1.0) || !std::isfinite(D)) throw DomainError("Dimension: D must be finite and >= 1");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be positive");
  return std::lgamma(x);
}

namespace {

// Past this point the four log-Gammas are large enough that their difference
// loses digits; the large-D expansion of f(D) sqrt(2) takes over.
constexpr double kAsymptoticSwitch = 1e4;

double f_asymptotic(double D) {
  const double x = 1.0 / D;
  return std::numbers::sqrt2 / 2.0 *
         (1.0 + x * (-3.0 / 8.0 + x * (9.0 / 128.0 + x * (39.0 / 1024.0))));
}

}  // namespace

double f_universal(double D) {
  if (!(D >= 1.0)) throw DomainError("f_universal: D must be >= 1");
  if (std::isinf(D)) return std::numbers::sqrt2 / 2.0;
  if (D > kAsymptoticSwitch) return f_asymptotic(D);
  const double log_ratio = log_gamma(0.5 * D + 0.5) + log_gamma(D + 0.5) - log_gamma(0.5 * D) -
                           log_gamma(D + 1.0);
  return std::exp(log_ratio);
}

}  // namespace dimint
