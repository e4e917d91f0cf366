#include "dimint/interp.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <thread>

#include "dimint/delta1d.hpp"
#include "dimint/errors.hpp"

namespace dimint {

std::string_view to_string(Eps1Source s) {
  switch (s) {
    case Eps1Source::ExactConstant: return "exact_constant";
    case Eps1Source::Variational1D: return "variational_1d";
    case Eps1Source::Subformula: return "subformula";
  }
  return "?";
}

double exact_epsilon3(Element e) {
  switch (e) {
    case Element::He: return -0.725931;
    case Element::Li: return -0.830896;
    case Element::Be: return -0.916709;
  }
  throw DomainError("unknown element");
}

void AtomInterpolationInput::validate() const {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in (0, 1]");
  if (!(eps1 < 0.0 && epsinf < 0.0)) throw DomainError("limit energies must be negative");
}

DimensionWeights dimension_weights(const Dimension& D) {
  return {1.0 / D.D(), (D.D() - 1.0) / D.D()};
}

double atom_epsilon3(const AtomInterpolationInput& in) {
  in.validate();
  const auto [w1, winf] = dimension_weights(Dimension(3.0));
  const PerturbCoeffs& c = in.coeffs;
  return w1 * in.eps1 + winf * in.epsinf + (c.eps3_1 - w1 * c.eps1_1 - winf * c.epsinf_1) * in.lambda;
}

double one_dim_subformula(double epsinf, const PerturbCoeffs& coeffs, double lambda) {
  return epsinf + (coeffs.eps1_1 - coeffs.epsinf_1) * lambda;
}

double to_hartree(double eps, int Z, double D) {
  if (!(D > 1.0)) throw DomainError("to_hartree: D must exceed 1");
  const double beta = 0.5 * (D - 1.0);
  const double s = static_cast<double>(Z) / beta;
  return s * s * eps;
}

double percent_error(double computed, double exact) {
  return std::abs(computed - exact) / std::abs(exact) * 100.0;
}

double AtomReport::eps3_of(Eps1Source s) const {
  switch (s) {
    case Eps1Source::ExactConstant:
      if (!eps3_exact_constant) throw DomainError("no exact D = 1 energy for this atom");
      return *eps3_exact_constant;
    case Eps1Source::Variational1D: return eps3_variational;
    case Eps1Source::Subformula: return eps3_subformula;
  }
  throw DomainError("unknown source");
}

double AtomReport::eps3_default() const { return eps3_of(default_source); }

AtomReport analyze_atom(const AtomSpec& atom, const OptimSettings& settings) {
  const VariationalResult1D v = optimize_xi(atom);
  AtomMinimum large = minimize_atom(atom, settings);
  const PerturbCoeffs c = assemble_coefficients(atom);
  const double lambda = atom.lambda;

  auto eps3 = [&](double eps1, Eps1Source s) {
    return atom_epsilon3({eps1, large.epsilon_inf, c, lambda, s});
  };

  AtomReport r{atom, v.xi0, v.epsilon1, std::nullopt, one_dim_subformula(large.epsilon_inf, c, lambda),
               std::move(large), c, std::nullopt, 0.0, 0.0, Eps1Source::Variational1D};
  if (atom.element == Element::He && atom.physical_coupling()) {
    r.eps1_exact = kHeliumExactEps1;
    r.eps3_exact_constant = eps3(kHeliumExactEps1, Eps1Source::ExactConstant);
    r.default_source = Eps1Source::ExactConstant;
  }
  r.eps3_variational = eps3(r.eps1_variational, Eps1Source::Variational1D);
  r.eps3_subformula = eps3(r.eps1_subformula, Eps1Source::Subformula);
  return r;
}

H2Point h2_point(double R, const OptimSettings& settings) {
  if (!(R > 0.0)) throw DomainError("internuclear distance must be positive");
  const auto [w1, winf] = dimension_weights(Dimension(3.0));
  H2Point p{R, 0.0, 0.0, 0.0, 0.0};
  if (std::isinf(R)) {
    p.eps1_scaled = h2_epsilon1(R);
    p.epsinf_scaled = -1.0;
  } else {
    p.eps1_scaled = h2_epsilon1(R / 3.0);
    p.epsinf_scaled = minimize_h2(2.0 * R / 3.0, settings).epsilon_inf;
  }
  p.eps3 = w1 * p.eps1_scaled + winf * p.epsinf_scaled;
  p.binding = p.eps3 + 1.0 / R;
  return p;
}

double h2_epsilon3(double R, const OptimSettings& settings) { return h2_point(R, settings).eps3; }

double h2_epsilon1_rescaled(double R) {
  if (!(R > 0.0) || std::isinf(R)) throw DomainError("internuclear distance must be positive and finite");
  using boost::math::quadrature::gauss_kronrod;
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double a = 0.5 * R;
  const double k = 1.0 / 3.0;
  const double norm = std::sqrt(k);
  auto uA = [&](double x) { return norm * std::exp(-k * std::abs(x + a)); };
  auto uB = [&](double x) { return norm * std::exp(-k * std::abs(x - a)); };
  auto duA = [&](double x) { return -k * (x + a > 0 ? 1.0 : -1.0) * uA(x); };
  auto duB = [&](double x) { return -k * (x - a > 0 ? 1.0 : -1.0) * uB(x); };

  // Piecewise smooth integrands; split at the kinks.
  auto integrate = [&](auto f) {
    double s = gauss_kronrod<double, 31>::integrate(f, -inf, -a, 10, 1e-13);
    s += gauss_kronrod<double, 31>::integrate(f, -a, a, 10, 1e-13);
    s += gauss_kronrod<double, 31>::integrate(f, a, inf, 10, 1e-13);
    return s;
  };

  const double kinetic = 4.5;
  const double well = 3.0;
  const double coupling = 3.0;
  auto h = [&](auto u, auto du, auto v, auto dv) {
    const double t = kinetic * integrate([&](double x) { return du(x) * dv(x); });
    const double pot = -well * (u(a) * v(a) + u(-a) * v(-a));
    return t + pot;
  };
  const double S = integrate([&](double x) { return uA(x) * uB(x); });
  const double hAA = h(uA, duA, uA, duA);
  const double hBB = h(uB, duB, uB, duB);
  const double hAB = h(uA, duA, uB, duB);
  const double overlap4 = integrate([&](double x) { return uA(x) * uA(x) * uB(x) * uB(x); });
  const double num = 2.0 * (hAA + hBB) + 4.0 * S * hAB + 4.0 * coupling * overlap4;
  return num / (2.0 * (1.0 + S * S));
}

double h2_epsinf_rescaled(double R, const OptimSettings& settings) {
  if (!(R > 0.0) || std::isinf(R)) throw DomainError("internuclear distance must be positive and finite");
  const double a = 0.5 * R;
  OptimProblem p;
  p.transforms = {Transform::Positive, Transform::Identity, Transform::Cosine};
  p.objective = [a](const Eigen::VectorXd& x) {
    const double rho = x[0], z = x[1], c = x[2];
    const double s2 = 1.0 - c * c;
    const double j2 = 4.0 * z * z + 2.0 * rho * rho * (1.0 - c);
    if (!(s2 > 0.0) || !(j2 > 0.0)) return std::numeric_limits<double>::infinity();
    return 2.25 / (rho * rho * s2) - 3.0 * (1.0 / std::hypot(rho, z + a) + 1.0 / std::hypot(rho, z - a)) +
           1.5 / std::sqrt(j2);
  };
  p.start = Eigen::Vector3d(1.5, a, 0.0);
  const OptimReport rep = minimize(p, settings);
  if (!rep.converged) throw NonConvergence("rescaled large-D H2 minimization did not converge");
  return rep.best_value;
}

double h2_epsilon3_rescaled(double R, const OptimSettings& settings) {
  const auto [w1, winf] = dimension_weights(Dimension(3.0));
  return w1 * h2_epsilon1_rescaled(R) + winf * h2_epsinf_rescaled(R, settings);
}

PotentialCurve build_curve(double r_min, double r_max, int n_points, const OptimSettings& settings,
                           unsigned threads) {
  if (!(r_min > 0.0 && r_min < r_max) || std::isinf(r_max)) throw DomainError("need 0 < r_min < r_max < inf");
  if (n_points < 2) throw DomainError("need at least two grid points");
  const double h = (r_max - r_min) / (n_points - 1);
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i) grid[i] = i + 1 == n_points ? r_max : r_min + h * i;

  PotentialCurve curve;
  curve.points.resize(n_points);
  threads = std::clamp(threads, 1u, static_cast<unsigned>(n_points));
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (int i = static_cast<int>(t); i < n_points; i += static_cast<int>(threads))
            curve.points[i] = h2_point(grid[i], settings);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return curve;
}

}  // namespace dimint
