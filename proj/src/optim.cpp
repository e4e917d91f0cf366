#include "dimint/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "dimint/errors.hpp"

namespace dimint {

namespace {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct SimplexResult {
  Eigen::VectorXd point;
  double value;
  double diameter;
};

double finite_or_inf(double v) { return std::isfinite(v) ? v : std::numeric_limits<double>::infinity(); }

// Classic Nelder-Mead (reflection 1, expansion 2, contractions 1/2, shrink 1/2).
// Terminates when the simplex fits in an infinity-norm ball of radius `tol`
// around its best vertex.
SimplexResult nelder_mead(const Objective& f, const Eigen::VectorXd& start, double step, double tol,
                          long max_evals) {
  const Eigen::Index n = start.size();
  Eigen::MatrixXd vertices(n, n + 1);
  Eigen::VectorXd values(n + 1);
  long evals = 0;
  auto eval = [&](const Eigen::VectorXd& u) {
    ++evals;
    return finite_or_inf(f(u));
  };

  vertices.col(0) = start;
  for (Eigen::Index i = 0; i < n; ++i) {
    vertices.col(i + 1) = start;
    vertices(i, i + 1) += step;
  }
  for (Eigen::Index i = 0; i <= n; ++i) values(i) = eval(vertices.col(i));

  std::vector<Eigen::Index> order(n + 1);
  double diameter = std::numeric_limits<double>::infinity();
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });
    const Eigen::Index best = order.front();
    const Eigen::Index worst = order.back();
    const Eigen::Index second_worst = order[n - 1];

    diameter = 0.0;
    for (Eigen::Index i = 0; i <= n; ++i)
      diameter = std::max(diameter, (vertices.col(i) - vertices.col(best)).lpNorm<Eigen::Infinity>());
    if (diameter < tol || evals >= max_evals) break;

    Eigen::VectorXd centroid = (vertices.rowwise().sum() - vertices.col(worst)) / static_cast<double>(n);
    const Eigen::VectorXd reflected = centroid + (centroid - vertices.col(worst));
    const double fr = eval(reflected);

    if (fr < values(best)) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - vertices.col(worst));
      const double fe = eval(expanded);
      if (fe < fr) {
        vertices.col(worst) = expanded;
        values(worst) = fe;
      } else {
        vertices.col(worst) = reflected;
        values(worst) = fr;
      }
      continue;
    }
    if (fr < values(second_worst)) {
      vertices.col(worst) = reflected;
      values(worst) = fr;
      continue;
    }

    bool accepted = false;
    if (fr < values(worst)) {
      const Eigen::VectorXd outside = centroid + 0.5 * (reflected - centroid);
      const double fc = eval(outside);
      if (fc <= fr) {
        vertices.col(worst) = outside;
        values(worst) = fc;
        accepted = true;
      }
    } else {
      const Eigen::VectorXd inside = centroid + 0.5 * (vertices.col(worst) - centroid);
      const double fc = eval(inside);
      if (fc < values(worst)) {
        vertices.col(worst) = inside;
        values(worst) = fc;
        accepted = true;
      }
    }
    if (!accepted) {
      for (Eigen::Index i = 0; i <= n; ++i) {
        if (i == best) continue;
        vertices.col(i) = vertices.col(best) + 0.5 * (vertices.col(i) - vertices.col(best));
        values(i) = eval(vertices.col(i));
      }
    }
  }
  Eigen::Index best = 0;
  values.minCoeff(&best);
  return {vertices.col(best), values(best), diameter};
}

}  // namespace

Eigen::VectorXd to_unconstrained(const std::vector<Transform>& transforms, const Eigen::VectorXd& x) {
  Eigen::VectorXd u(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    switch (transforms[i]) {
      case Transform::Identity: u(i) = x(i); break;
      case Transform::Positive: u(i) = std::log(x(i)); break;
      case Transform::Cosine: u(i) = std::atanh(std::clamp(x(i), -1.0 + 1e-15, 1.0 - 1e-15)); break;
    }
  }
  return u;
}

Eigen::VectorXd to_physical(const std::vector<Transform>& transforms, const Eigen::VectorXd& u) {
  Eigen::VectorXd x(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    switch (transforms[i]) {
      case Transform::Identity: x(i) = u(i); break;
      case Transform::Positive: x(i) = std::exp(u(i)); break;
      case Transform::Cosine: x(i) = std::tanh(u(i)); break;
    }
  }
  return x;
}

double fd_gradient_norm(const OptimProblem& problem, const Eigen::VectorXd& x) {
  const Eigen::VectorXd u = to_unconstrained(problem.transforms, x);
  auto f = [&](const Eigen::VectorXd& v) { return problem.objective(to_physical(problem.transforms, v)); };
  constexpr double h = 1e-5;
  Eigen::VectorXd grad(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    Eigen::VectorXd up = u, down = u;
    up(i) += h;
    down(i) -= h;
    grad(i) = (f(up) - f(down)) / (2.0 * h);
  }
  return grad.norm();
}

OptimReport minimize(const OptimProblem& problem, std::uint64_t seed, int restarts, double tol) {
  if (restarts < 1) throw DomainError("minimize: restarts must be >= 1");
  if (!(tol > 0.0)) throw DomainError("minimize: tol must be positive");
  if (static_cast<int>(problem.transforms.size()) != problem.dimension())
    throw DomainError("minimize: one transform per coordinate required");

  const auto& transforms = problem.transforms;
  auto objective_u = [&](const Eigen::VectorXd& u) {
    return problem.objective(to_physical(transforms, u));
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-problem.perturbation, problem.perturbation);
  const long max_evals = 20000L * (problem.dimension() + 1);

  OptimReport report;
  report.best_value = std::numeric_limits<double>::infinity();
  double best_diameter = std::numeric_limits<double>::infinity();
  bool any_finite = false;

  for (int k = 0; k < restarts; ++k) {
    Eigen::VectorXd x0 = problem.start;
    if (k > 0) {
      for (Eigen::Index i = 0; i < x0.size(); ++i) {
        const double r = jitter(rng);
        switch (transforms[i]) {
          case Transform::Positive: x0(i) *= 1.0 + r; break;
          case Transform::Cosine: x0(i) = std::clamp(x0(i) + r, -0.95, 0.95); break;
          case Transform::Identity: x0(i) = x0(i) * (1.0 + r) + r; break;
        }
      }
    }
    Eigen::VectorXd u = to_unconstrained(transforms, x0);
    if (!std::isfinite(objective_u(u))) continue;
    any_finite = true;

    // Re-seed the simplex around the incumbent until it stops improving; a
    // single collapse can stall on a non-stationary point.
    SimplexResult run = nelder_mead(objective_u, u, 0.1, tol, max_evals);
    for (int polish = 0; polish < 6; ++polish) {
      SimplexResult again = nelder_mead(objective_u, run.point, 1e-3, tol, max_evals);
      const bool improved = again.value < run.value - 1e-15 * std::abs(run.value);
      if (again.value <= run.value) run = again;
      if (!improved) break;
    }

    if (run.value < report.best_value) {
      report.best_value = run.value;
      report.best_point = to_physical(transforms, run.point);
      best_diameter = run.diameter;
    }
  }
  if (!any_finite) throw NonConvergence("minimize: objective is non-finite at every starting point");

  report.restarts_used = restarts;
  report.gradient_norm_fd = fd_gradient_norm(problem, report.best_point);
  report.converged = best_diameter < tol && report.gradient_norm_fd <= kGradientTolerance;
  return report;
}

}  // namespace dimint
