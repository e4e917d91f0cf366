#pragma once

// Bivariate truncated Taylor arithmetic. A Jet<P, Q, S> carries the
// coefficients c(p, q) of da^p db^q for p <= P, q <= Q in scalar type S, which
// is enough to push mixed partial derivatives of a closed-form expression
// through to order (P, Q).

#include <Eigen/Core>
#include <cmath>
#include <concepts>

namespace dimint {

template <int P, int Q, class S = double>
class Jet {
 public:
  using Coefficients = Eigen::Matrix<S, P + 1, Q + 1>;

  Jet() : c_(Coefficients::Zero()) {}
  Jet(S value) : c_(Coefficients::Zero()) { c_(0, 0) = value; }  // NOLINT

  static Jet variable_a(S value) {
    Jet j(value);
    if constexpr (P > 0) j.c_(1, 0) = 1.0;
    return j;
  }
  static Jet variable_b(S value) {
    Jet j(value);
    if constexpr (Q > 0) j.c_(0, 1) = 1.0;
    return j;
  }

  S value() const { return c_(0, 0); }
  S coeff(int p, int q) const { return c_(p, q); }
  const Coefficients& coefficients() const { return c_; }
  Coefficients& coefficients() { return c_; }

  Jet& operator+=(const Jet& o) { c_ += o.c_; return *this; }
  Jet& operator-=(const Jet& o) { c_ -= o.c_; return *this; }
  Jet& operator*=(S s) { c_ *= s; return *this; }
  Jet& operator/=(S s) { c_ /= s; return *this; }

  Jet& operator*=(const Jet& o) {
    Coefficients r = Coefficients::Zero();
    for (int p = 0; p <= P; ++p)
      for (int q = 0; q <= Q; ++q)
        for (int p1 = 0; p1 <= p; ++p1)
          for (int q1 = 0; q1 <= q; ++q1) r(p, q) += c_(p1, q1) * o.c_(p - p1, q - q1);
    c_ = r;
    return *this;
  }

  friend Jet operator+(Jet x, const Jet& y) { return x += y; }
  friend Jet operator-(Jet x, const Jet& y) { return x -= y; }
  friend Jet operator*(Jet x, const Jet& y) { return x *= y; }
  friend Jet operator*(Jet x, S s) { return x *= s; }
  friend Jet operator*(S s, Jet x) { return x *= s; }
  friend Jet operator/(Jet x, S s) { return x /= s; }
  friend Jet operator+(Jet x, S s) { x.c_(0, 0) += s; return x; }
  friend Jet operator+(S s, Jet x) { x.c_(0, 0) += s; return x; }
  friend Jet operator-(Jet x, S s) { x.c_(0, 0) -= s; return x; }
  friend Jet operator-(S s, const Jet& x) { Jet r = -x; r.c_(0, 0) += s; return r; }
  friend Jet operator-(Jet x) { x.c_ = -x.c_; return x; }
  friend Jet operator/(const Jet& x, const Jet& y) { return x * pow(y, -1.0); }
  friend Jet operator/(S s, const Jet& y) { return s * pow(y, -1.0); }

  // x^k through the binomial series about the value part; the remainder is
  // nilpotent of degree P + Q + 1, so the series terminates.
  friend Jet pow(const Jet& x, S k) {
    const S x0 = x.value();
    Jet h = x;
    h.c_(0, 0) = 0.0;
    h /= x0;
    Jet result(1.0);
    Jet power(1.0);
    S binom = 1.0;
    for (int n = 1; n <= P + Q; ++n) {
      binom *= (k - (n - 1)) / n;
      power *= h;
      result += binom * power;
    }
    return std::pow(x0, k) * result;
  }

  friend Jet sqrt(const Jet& x) { return pow(x, 0.5); }

  friend S magnitude(const Jet& x) { return x.c_.cwiseAbs().maxCoeff(); }
  friend S scalar_value(const Jet& x) { return x.value(); }

 private:
  Coefficients c_;
};

template <std::floating_point S>
S magnitude(S x) {
  return std::abs(x);
}
template <std::floating_point S>
S scalar_value(S x) {
  return x;
}

}  // namespace dimint
