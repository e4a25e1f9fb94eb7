#include "cnmge/cnmdt.hpp"

#include <algorithm>

#include "cnmge/deflation.hpp"
#include "cnmge/errors.hpp"

namespace cnmge {

std::size_t StationaryPointSet::best_index() const {
  if (f_values.empty()) throw EmptyResultError("StationaryPointSet is empty");
  return static_cast<std::size_t>(
      std::distance(f_values.begin(), std::min_element(f_values.begin(), f_values.end())));
}

namespace cnmdt {

std::vector<Vector> standard_starts(int n) {
  const int head = (n + 1) / 2;
  Vector split(n);
  for (int i = 0; i < n; ++i) split[i] = i < head ? 1.0 : -1.0;

  const std::vector<Vector> candidates = {Vector::Ones(n), split, -split, -Vector::Ones(n)};
  std::vector<Vector> starts;
  for (const Vector& c : candidates) {
    const bool seen = std::any_of(starts.begin(), starts.end(),
                                  [&](const Vector& s) { return s == c; });
    if (!seen) starts.push_back(c);
  }
  return starts;
}

StationaryPointSet enumerate_stationary_points(const Problem& problem, const SolverConfig& config) {
  config.validate();
  const int n = problem.dimension;
  DeflatedSystem system(problem.grad, problem.hess, n, config.dup_tol, config.fd_step);
  StationaryPointSet found;

  const auto cap_reached = [&] {
    return config.max_stationary > 0 && static_cast<int>(found.size()) >= config.max_stationary;
  };

  const std::vector<Vector> starts = standard_starts(n);
  for (std::size_t s = 0; s < starts.size() && !cap_reached(); ++s) {
    for (int attempt = 0; attempt < config.max_solves_per_start && !cap_reached(); ++attempt) {
      CnmtrResult run;
      ++found.solves;
      try {
        run = cnmtr::solve(system.g_function(), system.g_jacobian_function(), starts[s], config);
      } catch (const Error&) {
        // AtRootError, NonFiniteError: this start is exhausted.
        break;
      }
      found.f_evals += run.f_evals;
      found.jac_evals += run.jac_evals;
      if (!run.converged) break;

      // G_k can vanish far from every root while F does not; only accept true
      // stationary points of f. A small raw residual is the scaling of G_k
      // masking a nearby root, which a few undeflated steps recover.
      Vector candidate = run.x_star;
      Vector raw = problem.grad(candidate);
      ++found.f_evals;
      if (!raw.allFinite()) break;
      double residual = linalg::inf_norm(raw);
      if (residual > config.eps && residual <= config.refine_tol) {
        CnmtrResult refined;
        try {
          refined = cnmtr::solve(problem.grad, problem.hess, candidate, config);
        } catch (const Error&) {
          break;
        }
        found.f_evals += refined.f_evals;
        found.jac_evals += refined.jac_evals;
        if (!refined.converged) break;
        candidate = refined.x_star;
        residual = refined.residual_inf;
      }
      if (residual > config.eps) break;

      try {
        system = system.register_root(candidate);
      } catch (const DuplicateError&) {
        break;
      }
      found.points.push_back(candidate);
      found.f_values.push_back(problem.f(candidate));
      found.residuals.push_back(residual);
      found.origin_start.push_back(static_cast<int>(s));
    }
  }

  if (found.empty()) {
    throw EmptyResultError("no stationary point found for " + problem.name);
  }
  return found;
}

}  // namespace cnmdt
}  // namespace cnmge
