#pragma once

// First-order 1/Z coefficients eps_D^(1) at D = 1, 3 and infinity, assembled
// from electron-pair repulsions <1/r_ij>. D = 3 pairs are built from the
// derivative integrals K_3(i, j) of the parent integral G_3(a, b); a radial
// quadrature oracle checks them independently.

#include <cmath>
#include <numbers>
#include <vector>

#include "dimint/atom.hpp"
#include "dimint/errors.hpp"
#include "dimint/jet.hpp"
#include "dimint/specfun.hpp"

namespace dimint {

inline constexpr int kMaxDerivativeOrder = 4;

/// ln N_D for the parent-integral prefactor
///   N_D = (4 pi)^(D-1) Gamma(D-3/2) Gamma((D-1)/2)^3 / (Gamma(D-1) Gamma(D/2)).
double log_parent_prefactor(double D);

/// G_D(a, b) = int d^D r1 d^D r2 e^{-a r1}/r1 e^{-b r2}/r2 1/r12
///           = N_D F(1/2, (3-D)/2; D/2; y) / ((ab)^(D-2) (a+b)),
/// y = ((a-b)/(a+b))^2. At D = 3 this is (4 pi)^2 / (ab(a+b)).
template <class T>
T parent_integral(double D, const T& a, const T& b) {
  using std::pow;
  if (!(scalar_value(a) > 0.0 && scalar_value(b) > 0.0))
    throw DomainError("parent_integral_G: exponents must be positive");
  if (!(D >= 2.0)) throw DomainError("parent_integral_G: closed form needs D >= 2");
  if (D == 3.0) return std::pow(4.0 * std::numbers::pi, 2) / (a * b * (a + b));
  const T t = (a - b) / (a + b);
  const T y = t * t;
  return std::exp(log_parent_prefactor(D)) * gauss_2f1_family(D, y) / (pow(a * b, D - 2.0) * (a + b));
}

double parent_integral_G(double D, double a, double b);

/// K_D(i, j) = int d^D r1 d^D r2 e^{-a r1} e^{-b r2} r1^(i-1) r2^(j-1) / r12
///           = (-d/da)^i (-d/db)^j G_D(a, b), for 0 <= i, j <= 4, in scalar S.
template <class S>
S derivative_integral_K_as(double D, int i, int j, S a, S b) {
  if (i < 0 || j < 0 || i > kMaxDerivativeOrder || j > kMaxDerivativeOrder)
    throw DomainError("derivative_integral_K: derivative orders must lie in [0, 4]");
  using J = Jet<kMaxDerivativeOrder, kMaxDerivativeOrder, S>;
  const J g = parent_integral(D, J::variable_a(a), J::variable_b(b));
  S factorials = 1;
  for (int k = 2; k <= i; ++k) factorials *= k;
  for (int k = 2; k <= j; ++k) factorials *= k;
  return ((i + j) % 2 == 0 ? factorials : -factorials) * g.coeff(i, j);
}

double derivative_integral_K(double D, int i, int j, double a, double b);

/// Radial density poly(r) e^{-exponent r} of an orbital with angular
/// momentum l; poly holds ascending coefficients.
struct RadialDensity {
  std::vector<double> poly;
  double exponent;
  int l = 0;
};

/// D = 3 densities |psi|^2 up to normalization: 1s -> e^{-2r},
/// 2s -> (1 - r/2)^2 e^{-r} (hydrogenic, alpha = 3/(2D) = 1/2).
RadialDensity density_d3(Orbital o);

/// Normalized <1/r12> between two s densities at D = 3 through K_3 sums.
double repulsion_d3(const RadialDensity& first, const RadialDensity& second);

/// Independent check of repulsion_d3 by nested adaptive radial quadrature
/// with the s-wave kernel 1/r_>. Throws DomainError for l != 0.
double quadrature_oracle_D3(const RadialDensity& first, const RadialDensity& second);
double quadrature_oracle_D3(OrbitalPair pair);

enum class LimitDimension { One, Three, Infinity };

/// Density exponents (a, b) of a pair: 1s-1s (2, 2), 1s-2s (2, 1), 2s-2s (1, 1).
std::pair<double, double> pair_exponents(OrbitalPair pair);

/// f(D) F(1/2, (3-D)/2; D/2; y) ab/(a+b) for bare exponential densities.
double bare_pair_repulsion(double D, double a, double b);

/// <1/r_ij> of an orbital pair in the given dimensional limit.
double pair_coefficient(LimitDimension D, OrbitalPair pair);

struct PerturbCoeffs {
  double eps1_1;
  double eps3_1;
  double epsinf_1;
};

/// Sums pair coefficients over the occupancy's pair multiset.
PerturbCoeffs assemble_coefficients(const AtomSpec& atom);

}  // namespace dimint
