#include "dimint/delta1d.hpp"

#include <cmath>

#include "dimint/errors.hpp"

namespace dimint {

namespace {

// Per-orbital expectation values at screening xi, in units of xi^2 (kinetic)
// and xi (nuclear delta):
//   1s: <-1/2 d2/dr2> = 1/2,     <delta(r)> = 1
//   2s: <-1/2 d2/dr2> = 17/40,   <delta(r)> = 1/5
Rational orbital_kinetic(Orbital o) { return o == Orbital::S1 ? Rational(1, 2) : Rational(17, 40); }
Rational orbital_attraction(Orbital o) { return o == Orbital::S1 ? Rational(1) : Rational(1, 5); }

}  // namespace

Rational delta_pair_coefficient(OrbitalPair p) {
  switch (p) {
    case OrbitalPair::S1S1: return {1, 2};
    case OrbitalPair::S1S2: return {1, 15};
    case OrbitalPair::S2S2: return {71, 800};
  }
  throw DomainError("delta_pair_coefficient: unknown pair");
}

QuadraticModel quadratic_model(Element e) {
  const AtomSpec atom = AtomSpec::of(e);
  QuadraticModel m{Rational(0), Rational(0), Rational(0)};
  for (Orbital o : atom.occupancy) {
    m.kinetic += orbital_kinetic(o);
    m.attraction += orbital_attraction(o);
  }
  for (auto [i, j] : electron_pairs(atom))
    m.repulsion += delta_pair_coefficient(pair_kind(atom.occupancy[i], atom.occupancy[j]));
  return m;
}

double energy_quadratic(const AtomSpec& atom, double xi) {
  if (!(xi > 0.0)) throw DomainError("energy_quadratic: xi must be positive");
  const QuadraticModel m = quadratic_model(atom.element);
  const double A = boost::rational_cast<double>(m.kinetic);
  const double B = boost::rational_cast<double>(m.attraction) -
                   atom.lambda * boost::rational_cast<double>(m.repulsion);
  return A * xi * xi - B * xi;
}

ExactVariationalResult1D optimize_xi_exact(const AtomSpec& atom) {
  const QuadraticModel m = quadratic_model(atom.element);
  const Rational B = m.attraction - m.repulsion / Rational(atom.Z);
  return {B / (Rational(2) * m.kinetic), -(B * B) / (Rational(4) * m.kinetic)};
}

VariationalResult1D optimize_xi(const AtomSpec& atom) {
  if (atom.physical_coupling()) {
    const auto exact = optimize_xi_exact(atom);
    return {boost::rational_cast<double>(exact.xi0), boost::rational_cast<double>(exact.epsilon1)};
  }
  const QuadraticModel m = quadratic_model(atom.element);
  const double A = boost::rational_cast<double>(m.kinetic);
  const double B = boost::rational_cast<double>(m.attraction) -
                   atom.lambda * boost::rational_cast<double>(m.repulsion);
  return {B / (2.0 * A), -B * B / (4.0 * A)};
}

std::map<std::pair<int, int>, double> delta_pair_values(const AtomSpec& atom) {
  std::map<std::pair<int, int>, double> values;
  for (auto [i, j] : electron_pairs(atom))
    values[{i, j}] = boost::rational_cast<double>(
        delta_pair_coefficient(pair_kind(atom.occupancy[i], atom.occupancy[j])));
  return values;
}

double h2_epsilon1(double R) {
  if (!(R >= 0.0)) throw DomainError("h2_epsilon1: R must be non-negative");
  if (std::isinf(R)) return -1.0;
  const double x = std::exp(-2.0 * R);
  return -(1.0 + (4.0 + 2.0 * R + R * R) * x) / (1.0 + (1.0 + R) * (1.0 + R) * x);
}

}  // namespace dimint
