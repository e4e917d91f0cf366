#include "dimint/large_d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace dimint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Energy parts, or nullopt when the geometry is outside the domain
// (non-realizable cosines, coincident electrons, non-positive kinetic factor).
std::optional<AtomEnergyParts> try_energy_parts(const AtomSpec& atom, const Eigen::VectorXd& r,
                                                const Eigen::MatrixXd& g, GramianMode mode) {
  const Eigen::Index n = atom.electrons();
  if (r.size() != n || g.rows() != n || g.cols() != n) return std::nullopt;
  if ((r.array() <= 0.0).any()) return std::nullopt;
  if (!is_realizable(g)) return std::nullopt;

  AtomEnergyParts parts{0.0, 0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ratio = mode == GramianMode::Exact ? gram_ratio(g, i) : gram_ratio_polynomial(g, i);
    if (!(ratio > 0.0)) return std::nullopt;
    const double ni = principal(atom.occupancy[i]);
    parts.kinetic += 0.5 * ni * ni / (r(i) * r(i)) * ratio;
    parts.attraction -= 1.0 / r(i);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d2 = r(i) * r(i) + r(j) * r(j) - 2.0 * r(i) * r(j) * g(i, j);
      if (!(d2 > std::numeric_limits<double>::min())) return std::nullopt;
      parts.repulsion += atom.lambda / std::sqrt(d2);
    }
  }
  return parts;
}

}  // namespace

AtomEnergyParts atom_energy_parts(const AtomSpec& atom, const AtomGeometry& g, GramianMode mode) {
  const auto parts = try_energy_parts(atom, g.radii, g.cosines, mode);
  if (!parts) throw DomainError("atom_effective_energy: geometry outside the domain");
  return *parts;
}

double atom_effective_energy(const AtomSpec& atom, const AtomGeometry& g, GramianMode mode) {
  return atom_energy_parts(atom, g, mode).total();
}

OptimProblem atom_problem(const AtomSpec& atom, GramianMode mode) {
  const int n = atom.electrons();
  const int n_cos = n * (n - 1) / 2;
  OptimProblem p;
  p.start.resize(n + n_cos);
  p.transforms.assign(n, Transform::Positive);
  p.transforms.resize(n + n_cos, Transform::Cosine);
  for (int i = 0; i < n; ++i) {
    const double ni = principal(atom.occupancy[i]);
    p.start(i) = ni * ni;
  }
  p.start.tail(n_cos).setConstant(-0.1);
  p.objective = [atom, mode, n, n_cos](const Eigen::VectorXd& x) {
    const auto parts = try_energy_parts(atom, x.head(n), cosine_matrix(x.tail(n_cos), n), mode);
    return parts ? parts->total() : kInf;
  };
  return p;
}

AtomMinimum minimize_atom(const AtomSpec& atom, const OptimSettings& settings, GramianMode mode) {
  const OptimProblem problem = atom_problem(atom, mode);
  OptimReport report = minimize(problem, settings);
  if (!report.converged)
    throw NonConvergence("minimize_atom: optimizer did not converge for " +
                         std::string(to_string(atom.element)));
  const int n = atom.electrons();
  AtomGeometry geometry = AtomGeometry::from_upper(report.best_point.head(n),
                                                   report.best_point.tail(report.best_point.size() - n));
  return {report.best_value, std::move(geometry), std::move(report)};
}

namespace {

std::optional<double> try_h2_energy(const H2Geometry& g) {
  if (!(g.rho1 > 0.0 && g.rho2 > 0.0)) return std::nullopt;
  const double s = std::sin(g.phi);
  if (!(g.phi > 0.0 && g.phi < std::numbers::pi) || !(s > 0.0)) return std::nullopt;

  const double kinetic = 0.5 * (1.0 / (g.rho1 * g.rho1) + 1.0 / (g.rho2 * g.rho2)) / (s * s);
  double attraction = 0.0;
  for (auto [rho, z] : {std::pair{g.rho1, g.z1}, std::pair{g.rho2, g.z2}}) {
    attraction -= 1.0 / std::hypot(rho, z + g.a);
    attraction -= 1.0 / std::hypot(rho, z - g.a);
  }
  const double dz = g.z1 - g.z2;
  const double d2 = dz * dz + g.rho1 * g.rho1 + g.rho2 * g.rho2 - 2.0 * g.rho1 * g.rho2 * std::cos(g.phi);
  if (!(d2 > std::numeric_limits<double>::min())) return std::nullopt;
  return kinetic + attraction + 1.0 / std::sqrt(d2);
}

}  // namespace

double h2_effective_energy(const H2Geometry& g) {
  if (!(g.phi > 0.0 && g.phi < std::numbers::pi))
    throw DomainError("h2_effective_energy: phi must lie strictly between 0 and pi");
  if (!(g.a >= 0.0)) throw DomainError("h2_effective_energy: a must be non-negative");
  const auto e = try_h2_energy(g);
  if (!e) throw DomainError("h2_effective_energy: geometry outside the domain");
  return *e;
}

double h2_effective_energy(const H2Geometry& g, H2Branch branch) {
  constexpr double tol = 1e-12;
  const bool same_rho = std::abs(g.rho1 - g.rho2) <= tol * std::max(1.0, g.rho1);
  const bool z_ok = branch == H2Branch::Symmetric ? std::abs(g.z1 - g.z2) <= tol * std::max(1.0, std::abs(g.z1))
                                                   : std::abs(g.z1 + g.z2) <= tol * std::max(1.0, std::abs(g.z1));
  if (!same_rho || !z_ok) throw DomainError("h2_effective_energy: geometry is not on the requested branch");
  return h2_effective_energy(g);
}

OptimProblem h2_problem(double R, H2Branch branch) {
  if (!(R >= 0.0)) throw DomainError("minimize_h2: R must be non-negative");
  OptimProblem p;
  p.start = Eigen::Vector3d(1.0, 0.5 * R, 0.0);
  p.transforms = {Transform::Positive, Transform::Identity, Transform::Cosine};
  p.objective = [R, branch](const Eigen::VectorXd& x) {
    const auto e = try_h2_energy(H2Geometry::on_branch(branch, x(0), x(1), std::acos(x(2)), R));
    return e ? *e : kInf;
  };
  return p;
}

H2Minimum minimize_h2(double R, const OptimSettings& settings, H2Branch branch) {
  const OptimProblem problem = h2_problem(R, branch);
  OptimReport report = minimize(problem, settings);
  if (!report.converged) throw NonConvergence("minimize_h2: optimizer did not converge");
  const Eigen::VectorXd& x = report.best_point;
  return {report.best_value, H2Geometry::on_branch(branch, x(0), x(1), std::acos(x(2)), R), std::move(report)};
}

}  // namespace dimint
