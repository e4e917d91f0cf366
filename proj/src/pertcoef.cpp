#include "dimint/pertcoef.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <limits>

#include "dimint/delta1d.hpp"

namespace dimint {

double log_parent_prefactor(double D) {
  if (!(D > 1.5)) throw DomainError("parent prefactor needs D > 3/2");
  return (D - 1.0) * std::log(4.0 * std::numbers::pi) + log_gamma(D - 1.5) +
         3.0 * log_gamma(0.5 * (D - 1.0)) - log_gamma(D - 1.0) - log_gamma(0.5 * D);
}

double parent_integral_G(double D, double a, double b) { return parent_integral(D, a, b); }

double derivative_integral_K(double D, int i, int j, double a, double b) {
  return derivative_integral_K_as(D, i, j, a, b);
}

RadialDensity density_d3(Orbital o) {
  if (o == Orbital::S1) return {{1.0}, 2.0};
  return {{1.0, -1.0, 0.25}, 1.0};
}

namespace {

// 4 pi int_0^inf poly(r) e^{-a r} r^2 dr
double norm_d3(const RadialDensity& d) {
  double n = 0.0;
  double factorial = 2.0;  // (k+2)!
  for (std::size_t k = 0; k < d.poly.size(); ++k) {
    if (k > 0) factorial *= static_cast<double>(k + 2);
    n += d.poly[k] * 4.0 * std::numbers::pi * factorial / std::pow(d.exponent, static_cast<double>(k + 3));
  }
  return n;
}

void require_s_wave(const RadialDensity& d) {
  if (d.l != 0) throw DomainError("only s-type densities are supported");
  if (!(d.exponent > 0.0)) throw DomainError("density exponent must be positive");
  if (d.poly.size() > kMaxDerivativeOrder) throw DomainError("density polynomial degree too high");
}

double eval_poly(const std::vector<double>& c, double r) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
  return v;
}

}  // namespace

double repulsion_d3(const RadialDensity& first, const RadialDensity& second) {
  require_s_wave(first);
  require_s_wave(second);
  // r^k e^{-a r} in the density is K_3(k+1, .) with the r^(i-1) convention.
  double sum = 0.0;
  for (std::size_t k = 0; k < first.poly.size(); ++k)
    for (std::size_t m = 0; m < second.poly.size(); ++m)
      sum += first.poly[k] * second.poly[m] *
             derivative_integral_K(3.0, static_cast<int>(k) + 1, static_cast<int>(m) + 1, first.exponent,
                                   second.exponent);
  return sum / (norm_d3(first) * norm_d3(second));
}

double quadrature_oracle_D3(const RadialDensity& first, const RadialDensity& second) {
  require_s_wave(first);
  require_s_wave(second);
  using boost::math::quadrature::gauss_kronrod;
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr double tol = 1e-11;
  constexpr unsigned depth = 12;

  auto rho1 = [&](double r) { return eval_poly(first.poly, r) * std::exp(-first.exponent * r); };
  auto rho2 = [&](double r) { return eval_poly(second.poly, r) * std::exp(-second.exponent * r); };

  const double n1 = gauss_kronrod<double, 61>::integrate([&](double r) { return rho1(r) * r * r; }, 0.0, inf,
                                                         depth, tol);
  const double n2 = gauss_kronrod<double, 61>::integrate([&](double r) { return rho2(r) * r * r; }, 0.0, inf,
                                                         depth, tol);
  // Angular average of 1/r12 for s waves is 1/max(r1, r2).
  auto inner = [&](double r1) {
    const double below =
        r1 > 0.0 ? gauss_kronrod<double, 61>::integrate([&](double r) { return rho2(r) * r * r; }, 0.0, r1, depth,
                                                        tol) /
                       r1
                 : 0.0;
    const double above =
        gauss_kronrod<double, 61>::integrate([&](double r) { return rho2(r) * r; }, r1, inf, depth, tol);
    return below + above;
  };
  const double v =
      gauss_kronrod<double, 61>::integrate([&](double r1) { return rho1(r1) * r1 * r1 * inner(r1); }, 0.0, inf,
                                           depth, tol);
  return v / (n1 * n2);
}

namespace {

std::pair<Orbital, Orbital> orbitals_of(OrbitalPair pair) {
  switch (pair) {
    case OrbitalPair::S1S1: return {Orbital::S1, Orbital::S1};
    case OrbitalPair::S1S2: return {Orbital::S1, Orbital::S2};
    case OrbitalPair::S2S2: return {Orbital::S2, Orbital::S2};
  }
  throw DomainError("unknown orbital pair");
}

}  // namespace

double quadrature_oracle_D3(OrbitalPair pair) {
  const auto [p, q] = orbitals_of(pair);
  return quadrature_oracle_D3(density_d3(p), density_d3(q));
}

std::pair<double, double> pair_exponents(OrbitalPair pair) {
  const auto [p, q] = orbitals_of(pair);
  return {density_d3(p).exponent, density_d3(q).exponent};
}

double bare_pair_repulsion(double D, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("bare_pair_repulsion: exponents must be positive");
  const double t = (a - b) / (a + b);
  return f_universal(D) * gauss_2f1_family(D, t * t) * (a * b / (a + b));
}

double pair_coefficient(LimitDimension D, OrbitalPair pair) {
  switch (D) {
    case LimitDimension::One: return boost::rational_cast<double>(delta_pair_coefficient(pair));
    case LimitDimension::Three: {
      const auto [p, q] = orbitals_of(pair);
      return repulsion_d3(density_d3(p), density_d3(q));
    }
    case LimitDimension::Infinity: {
      const auto [a, b] = pair_exponents(pair);
      return bare_pair_repulsion(std::numeric_limits<double>::infinity(), a, b);
    }
  }
  throw DomainError("pair_coefficient: unknown dimension");
}

PerturbCoeffs assemble_coefficients(const AtomSpec& atom) {
  const auto mult = pair_multiplicities(atom);
  PerturbCoeffs c{0.0, 0.0, 0.0};
  for (OrbitalPair p : kAllOrbitalPairs) {
    const double m = mult[static_cast<int>(p)];
    if (m == 0) continue;
    c.eps1_1 += m * pair_coefficient(LimitDimension::One, p);
    c.eps3_1 += m * pair_coefficient(LimitDimension::Three, p);
    c.epsinf_1 += m * pair_coefficient(LimitDimension::Infinity, p);
  }
  return c;
}

}  // namespace dimint
