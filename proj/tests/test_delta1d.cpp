#include <doctest.h>

#include <cmath>

#include "dimint/delta1d.hpp"
#include "dimint/errors.hpp"
#include "oracles.hpp"

using namespace dimint;
using doctest::Approx;

namespace {

// Orbitals at xi = 1 and their derivatives.
double phi1(double x) { return std::exp(-std::abs(x)); }
double dphi1(double x) { return -(x > 0 ? 1.0 : -1.0) * phi1(x); }
double phi2(double x) { return (2.0 / 3.0 - std::abs(x)) * std::exp(-std::abs(x) / 2); }
double dphi2(double x) {
  const double s = x > 0 ? 1.0 : -1.0;
  return s * (-1.0 - 0.5 * (2.0 / 3.0 - std::abs(x))) * std::exp(-std::abs(x) / 2);
}

double norm2(double (*f)(double)) {
  return oracle::line_integral([&](double x) { return f(x) * f(x); }, {0.0});
}

}  // namespace

TEST_CASE("energy_quadratic at trial points") {
  CHECK(energy_quadratic(AtomSpec::helium(), 1.0) == Approx(-0.75).epsilon(1e-15));
  CHECK(energy_quadratic(AtomSpec::helium(), 0.875) == Approx(-0.765625).epsilon(1e-15));
  CHECK(energy_quadratic(AtomSpec::lithium(), 0.697856) == Approx(-0.693979).epsilon(1e-6));
  CHECK_THROWS_AS(energy_quadratic(AtomSpec::helium(), 0.0), DomainError);
  CHECK_THROWS_AS(energy_quadratic(AtomSpec::helium(), -1.0), DomainError);
}

TEST_CASE("variational optimum per atom") {
  const auto he = optimize_xi_exact(AtomSpec::helium());
  CHECK(he.xi0 == Rational(7, 8));
  CHECK(he.epsilon1 == Rational(-49, 64));
  const auto li = optimize_xi(AtomSpec::lithium());
  CHECK(li.xi0 == Approx(0.697856).epsilon(1e-6));
  CHECK(li.epsilon1 == Approx(-0.693979).epsilon(1e-6));
  const auto be = optimize_xi(AtomSpec::beryllium());
  CHECK(be.xi0 == Approx(0.590850).epsilon(1e-6));
  CHECK(be.epsilon1 == Approx(-0.645842).epsilon(1e-6));
}

TEST_CASE("stationarity and the -A xi0^2 identity") {
  for (const auto& a : {AtomSpec::helium(), AtomSpec::lithium(), AtomSpec::beryllium()}) {
    const auto r = optimize_xi(a);
    const double h = 1e-5;
    const double d = (energy_quadratic(a, r.xi0 + h) - energy_quadratic(a, r.xi0 - h)) / (2 * h);
    CHECK(std::abs(d) <= 1e-10);
    const double A = boost::rational_cast<double>(quadratic_model(a.element).kinetic);
    CHECK(r.epsilon1 == Approx(-A * r.xi0 * r.xi0).epsilon(1e-14));
  }
}

TEST_CASE("eps1 rises with lambda; lambda = 0 is hydrogenic") {
  for (const auto& a : {AtomSpec::helium(), AtomSpec::lithium(), AtomSpec::beryllium()}) {
    double prev = optimize_xi(a.with_lambda(0.0)).epsilon1;
    const auto m = quadratic_model(a.element);
    const double B0 = boost::rational_cast<double>(m.attraction);
    const double A = boost::rational_cast<double>(m.kinetic);
    CHECK(prev == Approx(-B0 * B0 / (4 * A)).epsilon(1e-15));
    for (int k = 1; k <= 50; ++k) {
      const double e = optimize_xi(a.with_lambda(k / 50.0)).epsilon1;
      CHECK(e > prev);
      prev = e;
    }
  }
  CHECK(optimize_xi(AtomSpec::helium().with_lambda(0.0)).epsilon1 == -1.0);
}

TEST_CASE("delta pair coefficients and sums") {
  CHECK(delta_pair_coefficient(OrbitalPair::S1S1) == Rational(1, 2));
  CHECK(delta_pair_coefficient(OrbitalPair::S1S2) == Rational(1, 15));
  CHECK(delta_pair_coefficient(OrbitalPair::S2S2) == Rational(71, 800));
  auto sum = [](const AtomSpec& a) {
    double s = 0.0;
    for (const auto& [pair, v] : delta_pair_values(a)) s += v;
    return s;
  };
  const auto he = delta_pair_values(AtomSpec::helium());
  CHECK(he.size() == 1);
  CHECK(he.at({0, 1}) == 0.5);
  CHECK(sum(AtomSpec::lithium()) == Approx(0.633333).epsilon(1e-6));
  CHECK(sum(AtomSpec::beryllium()) == Approx(0.855417).epsilon(1e-6));
}

TEST_CASE("orbital integrals behind the quadratic models match 1D quadrature") {
  const double n1 = norm2(phi1), n2 = norm2(phi2);
  // <delta(r1 - r2)> for a product of orbitals = int phi_a^2 phi_b^2 / norms
  auto pair = [&](double (*f)(double), double nf, double (*g)(double), double ng) {
    return oracle::line_integral([&](double x) { return f(x) * f(x) * g(x) * g(x); }, {0.0}) / (nf * ng);
  };
  CHECK(pair(phi1, n1, phi1, n1) == Approx(0.5).epsilon(1e-10));
  CHECK(pair(phi1, n1, phi2, n2) == Approx(1.0 / 15.0).epsilon(1e-10));
  CHECK(pair(phi2, n2, phi2, n2) == Approx(71.0 / 800.0).epsilon(1e-10));
  // 2s kinetic (1/2) int phi'^2 and attraction phi(0)^2, per unit norm
  const double t2 = 0.5 * oracle::line_integral([](double x) { return dphi2(x) * dphi2(x); }, {0.0}) / n2;
  CHECK(t2 == Approx(17.0 / 40.0).epsilon(1e-10));
  CHECK(phi2(0.0) * phi2(0.0) / n2 == Approx(1.0 / 5.0).epsilon(1e-12));
  const double t1 = 0.5 * oracle::line_integral([](double x) { return dphi1(x) * dphi1(x); }, {0.0}) / n1;
  CHECK(t1 == Approx(0.5).epsilon(1e-10));
  // 2s orthogonal to 1s
  CHECK(std::abs(oracle::line_integral([](double x) { return phi1(x) * phi2(x); }, {0.0})) < 1e-12);
}

TEST_CASE("H2 eps1 closed form") {
  CHECK(h2_epsilon1(0.0) == -2.5);
  CHECK(h2_epsilon1(std::numeric_limits<double>::infinity()) == -1.0);
  CHECK(h2_epsilon1(60.0) == Approx(-1.0).epsilon(1e-15));
  CHECK(h2_epsilon1(1.0) == Approx(-1.26341076678705).epsilon(1e-13));
  CHECK_THROWS_AS(h2_epsilon1(-0.1), DomainError);
  for (int k = 0; k <= 400; ++k) {
    const double e = h2_epsilon1(0.05 * k);
    CHECK(e >= -2.5);
    CHECK(e <= -1.0);
  }
}

TEST_CASE("H2 eps1 equals a Heitler-London expectation by quadrature") {
  // Unit-exponent orbitals at -+a; H = sum(-1/2 d^2 - delta(x-a) - delta(x+a)) + delta(x1-x2).
  for (double R : {0.3, 1.0, 2.5}) {
    const double a = R / 2;
    auto uA = [&](double x) { return std::exp(-std::abs(x + a)); };
    auto uB = [&](double x) { return std::exp(-std::abs(x - a)); };
    auto sgn = [](double v) { return v > 0 ? 1.0 : -1.0; };
    auto dA = [&](double x) { return -sgn(x + a) * uA(x); };
    auto dB = [&](double x) { return -sgn(x - a) * uB(x); };
    auto I = [&](auto f) { return oracle::line_integral(f, {-a, a}); };
    const double S = I([&](double x) { return uA(x) * uB(x); });
    auto h = [&](auto u, auto du, auto v, auto dv) {
      return 0.5 * I([&](double x) { return du(x) * dv(x); }) - (u(a) * v(a) + u(-a) * v(-a));
    };
    const double num = 2 * (h(uA, dA, uA, dA) + h(uB, dB, uB, dB)) + 4 * S * h(uA, dA, uB, dB) +
                       4 * I([&](double x) { return uA(x) * uA(x) * uB(x) * uB(x); });
    CHECK(h2_epsilon1(R) == Approx(num / (2 * (1 + S * S))).epsilon(1e-10));
  }
}
