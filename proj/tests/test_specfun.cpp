#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dimint/errors.hpp"
#include "dimint/jet.hpp"
#include "dimint/specfun.hpp"

using namespace dimint;
using doctest::Approx;

TEST_CASE("dimension carries delta and beta") {
  const Dimension d(3.0);
  CHECK(d.delta() * d.D() == Approx(1.0).epsilon(1e-15));
  CHECK(d.beta() == 1.0);
  CHECK(Dimension(1.0).beta() == 0.0);
  CHECK(Dimension(1.0).delta() == 1.0);
  CHECK_THROWS_AS(Dimension(0.5), DomainError);
  CHECK_THROWS_AS(Dimension(std::nan("")), DomainError);
}

TEST_CASE("log_gamma at integer and half-integer points") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(0.5) == Approx(std::log(std::sqrt(std::numbers::pi))).epsilon(1e-13));
  CHECK(log_gamma(0.5) == Approx(0.5723649429).epsilon(1e-10));
  CHECK(log_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-13));
  CHECK(log_gamma(200.5) == Approx(std::lgamma(200.5)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("f at D = 1, 3 and infinity") {
  CHECK(std::abs(f_universal(1.0) - 0.5) <= 1e-12);
  CHECK(std::abs(f_universal(3.0) - 0.625) <= 1e-12);
  CHECK(f_universal(std::numeric_limits<double>::infinity()) == Approx(0.7071067812).epsilon(1e-10));
  CHECK_THROWS_AS(f_universal(0.9), DomainError);
}

TEST_CASE("f increases on [1, 100] and stays in [1/2, 2^-1/2)") {
  double prev = f_universal(1.0);
  for (int k = 1; k <= 1000; ++k) {
    const double D = 1.0 + 99.0 * k / 1000.0;
    const double f = f_universal(D);
    CHECK(f > prev);
    CHECK(f >= 0.5);
    CHECK(f < std::sqrt(0.5));
    prev = f;
  }
}

TEST_CASE("f bridges smoothly across the large-D switch") {
  const double below = f_universal(1e4);
  const double above = f_universal(1e4 * (1 + 1e-12));
  CHECK(std::abs(below - above) < 1e-12);
  CHECK(std::abs(f_universal(1e4) - std::sqrt(0.5)) < 1e-4);
  double prev = f_universal(5e3);
  for (double D = 6e3; D < 1e7; D *= 1.7) {
    CHECK(f_universal(D) > prev);
    prev = f_universal(D);
  }
}

TEST_CASE("2F1 family: terminating, zero argument and large-D limit") {
  CHECK(gauss_2f1_family(3.0, 1.0 / 9.0) == 1.0);
  for (double D : {1.0, 2.0, 3.5, 7.0, 1e3, 1e6, std::numeric_limits<double>::infinity()})
    CHECK(gauss_2f1_family(D, 0.0) == 1.0);
  CHECK(gauss_2f1_family(1e6, 1.0 / 9.0) == Approx(0.948683).epsilon(1e-6 / 0.948683));
  CHECK(gauss_2f1_family(std::numeric_limits<double>::infinity(), 0.0) == 1.0);
  CHECK_THROWS_AS(gauss_2f1_family(3.0, 1.0), DomainError);
  CHECK_THROWS_AS(gauss_2f1_family(3.0, -0.1), DomainError);
}

TEST_CASE("2F1 at D = 5 is the terminating two-term series") {
  // F(1/2, -1; 5/2; y) = 1 - y/5
  for (double y : {0.1, 0.25, 0.6}) CHECK(gauss_2f1_family(5.0, y) == Approx(1.0 - y / 5.0).epsilon(1e-15));
}

TEST_CASE("2F1 approaches (1+y)^-1/2 monotonically in D") {
  for (double y : {0.0, 1.0 / 9.0, 0.25}) {
    const double limit = 1.0 / std::sqrt(1.0 + y);
    double prev_gap = std::numeric_limits<double>::infinity();
    for (double D : {1e3, 1e4, 1e5}) {
      const double gap = std::abs(gauss_2f1_family(D, y) - limit);
      if (y > 0.0) CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    CHECK(std::abs(gauss_2f1_family(1e6, y) - limit) <= 1e-4);
  }
}

TEST_CASE("2F1 series agrees with direct term summation at non-integer D") {
  const double D = 4.5, y = 0.3;
  double sum = 0.0, term = 1.0;
  for (int n = 0; n < 200; ++n) {
    sum += term;
    term *= (0.5 + n) * ((3.0 - D) / 2 + n) / ((D / 2 + n) * (n + 1)) * y;
  }
  CHECK(gauss_2f1_family(D, y) == Approx(sum).epsilon(1e-13));
}

TEST_CASE("jet arithmetic reproduces partial derivatives") {
  using J = Jet<3, 3>;
  const J a = J::variable_a(2.0), b = J::variable_b(1.0);
  const J g = 1.0 / (a * b * (a + b));
  // d/da of 1/(ab(a+b)) = -(2a+b)/(a^2 b (a+b)^2)
  CHECK(g.value() == Approx(1.0 / 6.0));
  CHECK(g.coeff(1, 0) == Approx(-5.0 / 36.0).epsilon(1e-14));
  const J s = pow(a, 0.5);
  CHECK(s.coeff(2, 0) == Approx(-0.125 * std::pow(2.0, -1.5)).epsilon(1e-14));
}
