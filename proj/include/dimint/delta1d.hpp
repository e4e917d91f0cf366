#pragma once

// D = 1 delta-function models. Electrons sit in exp(-xi|r|) (1s) and
// (2/3 - xi|r|) exp(-xi|r|/2) (2s) orbitals; the variational energy is the
// quadratic A xi^2 - B xi with exact rational coefficients.

#include <boost/rational.hpp>
#include <map>
#include <utility>

#include "dimint/atom.hpp"

namespace dimint {

using Rational = boost::rational<long long>;

/// Energy model E(xi) = kinetic xi^2 - (attraction - repulsion * lambda) xi.
struct QuadraticModel {
  Rational kinetic;     // A
  Rational attraction;  // lambda-free part of B
  Rational repulsion;   // sum of delta-pair coefficients
};

QuadraticModel quadratic_model(Element e);

struct VariationalResult1D {
  double xi0;
  double epsilon1;
};

struct ExactVariationalResult1D {
  Rational xi0;
  Rational epsilon1;
};

/// A xi^2 - B xi at the atom's coupling.
double energy_quadratic(const AtomSpec& atom, double xi);

/// Closed-form stationary point xi0 = B/(2A), epsilon1 = -B^2/(4A).
VariationalResult1D optimize_xi(const AtomSpec& atom);

/// Same stationary point in exact arithmetic with lambda = 1/Z.
ExactVariationalResult1D optimize_xi_exact(const AtomSpec& atom);

/// <delta(r_i - r_j)> per electron pair for the unscreened (xi = 1) orbitals.
std::map<std::pair<int, int>, double> delta_pair_values(const AtomSpec& atom);

/// Delta-pair coefficient of one orbital pair at xi = 1 (1/2, 1/15, 71/800).
Rational delta_pair_coefficient(OrbitalPair p);

/// Symmetric-state D = 1 energy of H2 at internuclear distance R (electronic
/// only; the 1/R nuclear term is not included).
double h2_epsilon1(double R);

}  // namespace dimint
