#pragma once

// D -> infinity effective Hamiltonians. Electrons freeze at radii r_i with
// mutual direction cosines gamma_ij; the centrifugal term of electron i is
// scaled by the Gramian ratio Gamma^(i)/Gamma of the cosine matrix.

#include <Eigen/Dense>
#include <cmath>

#include "dimint/atom.hpp"
#include "dimint/errors.hpp"
#include "dimint/optim.hpp"

namespace dimint {

/// Which kinetic factor to use: the exact minor/determinant ratio or the
/// low-order polynomial expansion of it.
enum class GramianMode { Exact, Polynomial };

/// Cosine matrix with unit diagonal built from the strict upper triangle
/// (row-major order: 01, 02, ..., 0n, 12, ...).
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> cosine_matrix(
    const Eigen::MatrixBase<Derived>& upper, Eigen::Index n) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> G =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) G(i, j) = G(j, i) = upper(k++);
  return G;
}

/// True when the cosine matrix is symmetric positive definite, i.e. the
/// cosines are realizable by unit vectors in a space of enough dimensions.
template <class Derived>
bool is_realizable(const Eigen::MatrixBase<Derived>& cosines) {
  using Plain = typename Derived::PlainObject;
  Eigen::LLT<Plain> llt(cosines.derived());
  return llt.info() == Eigen::Success && llt.matrixLLT().diagonal().minCoeff() > 0;
}

/// Gamma^(i) / Gamma: principal minor i over the full determinant.
template <class Derived>
typename Derived::Scalar gram_ratio(const Eigen::MatrixBase<Derived>& cosines, Eigen::Index i) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = cosines.rows();
  if (cosines.cols() != n || i < 0 || i >= n) throw DomainError("gram_ratio: bad matrix or index");
  if (!is_realizable(cosines)) throw DomainError("gram_ratio: cosine matrix is not positive definite");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == i) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == i) continue;
      minor(rr, cc++) = cosines(r, c);
    }
    ++rr;
  }
  const Scalar minor_det = n > 1 ? minor.determinant() : Scalar(1);
  return minor_det / cosines.determinant();
}

/// Polynomial stand-in for Gamma^(i)/Gamma:
///   1 + sum_j g_ij^2 - 2 sum_{j<k} g_ij g_jk g_ki
///     + (1/2) sum_{j,k,l} (2 g_ij g_jk g_kl g_li - g_ij^2 g_kl^2)
/// with j, k, l distinct and != i. Through third order this is the Taylor
/// expansion of the exact ratio; the quartic sum only exists for four electrons.
template <class Derived>
typename Derived::Scalar gram_ratio_polynomial(const Eigen::MatrixBase<Derived>& g, Eigen::Index i) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = g.rows();
  Scalar s(1);
  for (Eigen::Index j = 0; j < n; ++j)
    if (j != i) s += g(i, j) * g(i, j);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k)
      if (j != i && k != i) s -= Scalar(2) * g(i, j) * g(j, k) * g(k, i);
  if (n >= 4) {
    Scalar quartic(0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          if (j == i || k == i || l == i || j == k || k == l || j == l) continue;
          quartic += Scalar(2) * g(i, j) * g(j, k) * g(k, l) * g(l, i) - g(i, j) * g(i, j) * g(k, l) * g(k, l);
        }
    s += quartic / Scalar(2);
  }
  return s;
}

struct AtomGeometry {
  Eigen::VectorXd radii;
  Eigen::MatrixXd cosines;  // symmetric, unit diagonal

  static AtomGeometry from_upper(const Eigen::VectorXd& radii, const Eigen::VectorXd& upper) {
    return {radii, cosine_matrix(upper, radii.size())};
  }
};

/// Kinetic (centrifugal), nuclear attraction and lambda-weighted repulsion
/// parts of the large-D energy.
struct AtomEnergyParts {
  double kinetic;
  double attraction;
  double repulsion;

  double total() const { return kinetic + attraction + repulsion; }
};

AtomEnergyParts atom_energy_parts(const AtomSpec& atom, const AtomGeometry& g,
                                  GramianMode mode = GramianMode::Exact);

/// (1/2) sum_i n_i^2/r_i^2 Gamma^(i)/Gamma - sum_i 1/r_i
///   + lambda sum_{i<j} 1/sqrt(r_i^2 + r_j^2 - 2 r_i r_j gamma_ij)
double atom_effective_energy(const AtomSpec& atom, const AtomGeometry& g,
                             GramianMode mode = GramianMode::Exact);

struct AtomMinimum {
  double epsilon_inf;
  AtomGeometry geometry;
  OptimReport report;
};

/// Optimizer problem over (r_i, gamma_ij); physical coordinate order is the
/// radii followed by the upper-triangle cosines.
OptimProblem atom_problem(const AtomSpec& atom, GramianMode mode = GramianMode::Exact);

AtomMinimum minimize_atom(const AtomSpec& atom, const OptimSettings& settings = {},
                          GramianMode mode = GramianMode::Exact);

enum class H2Branch { Symmetric, Antisymmetric };

/// Cylindrical large-D configuration of H2; nuclei at z = -a and z = +a.
struct H2Geometry {
  double rho1, rho2;
  double z1, z2;
  double phi;
  double a;  // R / 2

  /// Equal rho; z2 = z (symmetric) or z2 = -z (antisymmetric).
  static H2Geometry on_branch(H2Branch branch, double rho, double z, double phi, double R) {
    return {rho, rho, z, branch == H2Branch::Symmetric ? z : -z, phi, 0.5 * R};
  }
};

/// Large-D H2 energy with unit nuclear charges, in cylindrical coordinates.
double h2_effective_energy(const H2Geometry& g);

/// As above, additionally checking that g lies on the requested branch.
double h2_effective_energy(const H2Geometry& g, H2Branch branch);

struct H2Minimum {
  double epsilon_inf;
  H2Geometry geometry;
  OptimReport report;
};

/// Problem over (rho, z, cos phi) for one branch at distance R.
OptimProblem h2_problem(double R, H2Branch branch = H2Branch::Antisymmetric);

H2Minimum minimize_h2(double R, const OptimSettings& settings = {},
                      H2Branch branch = H2Branch::Antisymmetric);

}  // namespace dimint
