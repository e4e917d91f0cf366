#pragma once

// Multi-start Nelder-Mead minimization in unconstrained coordinates.
// Each coordinate carries a feasibility transform: radii live on exp(u),
// cosines on tanh(u), everything else is used as is.

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

namespace dimint {

enum class Transform { Identity, Positive, Cosine };

struct OptimProblem {
  /// Objective in physical coordinates; may return +inf outside its domain.
  std::function<double(const Eigen::VectorXd&)> objective;
  std::vector<Transform> transforms;
  /// Physically motivated starting point (physical coordinates).
  Eigen::VectorXd start;
  /// Relative size of the random perturbation applied to later restarts.
  double perturbation = 0.3;

  int dimension() const { return static_cast<int>(start.size()); }
};

struct OptimReport {
  Eigen::VectorXd best_point;  // physical coordinates
  double best_value = 0.0;
  int restarts_used = 0;
  bool converged = false;
  double gradient_norm_fd = 0.0;  // central differences in transformed coordinates
};

struct OptimSettings {
  std::uint64_t seed = 12345;
  int restarts = 16;
  double tol = 1e-10;
};

inline constexpr double kGradientTolerance = 1e-6;

Eigen::VectorXd to_unconstrained(const std::vector<Transform>& transforms, const Eigen::VectorXd& x);
Eigen::VectorXd to_physical(const std::vector<Transform>& transforms, const Eigen::VectorXd& u);

/// Best point over `restarts` simplex searches. Restart 0 begins at
/// problem.start, later ones at seeded perturbations of it. Deterministic for
/// a given (problem, seed, restarts, tol). Throws NonConvergence when the
/// objective is non-finite at every restart's initial point.
OptimReport minimize(const OptimProblem& problem, std::uint64_t seed, int restarts, double tol);

inline OptimReport minimize(const OptimProblem& problem, const OptimSettings& s) {
  return minimize(problem, s.seed, s.restarts, s.tol);
}

/// Euclidean norm of the central-difference gradient of the objective in
/// transformed coordinates at physical point x.
double fd_gradient_norm(const OptimProblem& problem, const Eigen::VectorXd& x);

}  // namespace dimint
