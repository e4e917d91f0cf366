#pragma once

// Interpolation between the D = 1 and D -> infinity limits, back to D = 3.
// Atoms use the 1/D-weighted average plus a first-order 1/Z correction;
// H2 averages the two limits at rescaled internuclear distances.

#include <optional>
#include <vector>

#include "dimint/atom.hpp"
#include "dimint/large_d.hpp"
#include "dimint/optim.hpp"
#include "dimint/pertcoef.hpp"

namespace dimint {

enum class Eps1Source { ExactConstant, Variational1D, Subformula };

std::string_view to_string(Eps1Source s);

/// Exact D = 1 helium energy in scaled units.
inline constexpr double kHeliumExactEps1 = -0.788843;

/// Exact D = 3 scaled energies used for percent errors.
double exact_epsilon3(Element e);

struct AtomInterpolationInput {
  double eps1;
  double epsinf;
  PerturbCoeffs coeffs;
  double lambda;
  Eps1Source source_eps1;

  void validate() const;
};

/// Weights (delta, 1 - delta) with delta = 1/D; exactly (1/3, 2/3) at D = 3.
struct DimensionWeights {
  double one;
  double infinity;
};
DimensionWeights dimension_weights(const Dimension& D);

double atom_epsilon3(const AtomInterpolationInput& in);

/// eps_inf + (eps1^(1) - epsinf^(1)) lambda, an estimate of eps_1.
double one_dim_subformula(double epsinf, const PerturbCoeffs& coeffs, double lambda);

/// (Z/beta)^2 eps with beta = (D-1)/2. Throws DomainError for D <= 1.
double to_hartree(double eps, int Z, double D);

double percent_error(double computed, double exact);

/// Everything computed for one atom, per eps_1 source.
struct AtomReport {
  AtomSpec atom;
  double xi0;
  double eps1_variational;
  std::optional<double> eps1_exact;
  double eps1_subformula;
  AtomMinimum large_d;
  PerturbCoeffs coeffs;
  std::optional<double> eps3_exact_constant;
  double eps3_variational;
  double eps3_subformula;
  Eps1Source default_source;

  double eps3_default() const;
  double eps3_of(Eps1Source s) const;
};

/// He defaults to the exact constant, Li and Be to the D = 1 variational value.
AtomReport analyze_atom(const AtomSpec& atom, const OptimSettings& settings = {});

struct H2Point {
  double R;
  double eps1_scaled;    // eps_1(R/3)
  double epsinf_scaled;  // eps_inf(2R/3)
  double eps3;
  double binding;        // eps3 + 1/R
};

/// Interpolated H2 point; R = infinity gives the separated-atom limit.
H2Point h2_point(double R, const OptimSettings& settings = {});

double h2_epsilon3(double R, const OptimSettings& settings = {});

/// Check route: the D = 1 energy from the rescaled Hamiltonian
/// -(9/2) d^2 - 3 delta(r -+ a) + 3 delta(r1 - r2), evaluated as a numerical
/// Heitler-London expectation with orbitals exp(-|r -+ a|/3).
double h2_epsilon1_rescaled(double R);

/// Check route: minimum of the rescaled antisymmetric large-D Hamiltonian
/// (9/4)/(rho^2 sin^2 phi) - 3 [...] + (3/2) J at distance R.
double h2_epsinf_rescaled(double R, const OptimSettings& settings = {});

double h2_epsilon3_rescaled(double R, const OptimSettings& settings = {});

struct PotentialCurve {
  std::vector<H2Point> points;
};

/// Uniform grid on [r_min, r_max]. Points are independent and are evaluated
/// on up to `threads` workers; the result does not depend on the thread count.
PotentialCurve build_curve(double r_min, double r_max, int n_points, const OptimSettings& settings = {},
                           unsigned threads = 1);

}  // namespace dimint
