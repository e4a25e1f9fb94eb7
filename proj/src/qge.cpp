#include "cnmge/qge.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "cnmge/errors.hpp"

namespace cnmge::qge {

std::vector<Vector> supplemental_seeds(int n, int count) {
  std::vector<Vector> seeds;
  if (count <= 0) return seeds;
  seeds.reserve(static_cast<std::size_t>(count));
  seeds.push_back(Vector::Zero(n));

  const int head = (n + 1) / 2;
  Vector split(n);
  for (int i = 0; i < n; ++i) split[i] = i < head ? 1.0 : -1.0;
  const Vector base[] = {Vector::Ones(n), -Vector::Ones(n), split, -split};

  for (double scale = 0.1; static_cast<int>(seeds.size()) < count; scale *= 10.0) {
    for (const Vector& v : base) {
      if (static_cast<int>(seeds.size()) == count) break;
      seeds.push_back(scale * v);
    }
  }
  return seeds;
}

std::vector<Vector> crossover_generation(const Population& population) {
  const std::size_t size = population.size();
  std::vector<Vector> offspring;
  offspring.reserve(size > 1 ? size * (size - 1) / 2 : 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      offspring.push_back(0.5 * (population.members[i] + population.members[j]));
    }
  }
  return offspring;
}

Population select_best(const std::vector<Vector>& candidates, const ScalarFunction& f, int size,
                       long* evals) {
  struct Scored {
    std::size_t index;
    double value;
  };
  std::vector<Scored> kept;
  kept.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vector& c = candidates[i];
    if (!c.allFinite()) continue;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Scored& k) {
      return linalg::inf_norm(candidates[k.index] - c) <= kSelectionDuplicateTol;
    });
    if (duplicate) continue;
    const double value = f(c);
    if (evals != nullptr) ++*evals;
    if (!std::isfinite(value)) continue;
    kept.push_back({i, value});
  }
  if (kept.empty()) {
    throw NonFiniteError("select_best: no candidate has a finite objective value");
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const Scored& a, const Scored& b) { return a.value < b.value; });
  if (static_cast<int>(kept.size()) > size) kept.resize(static_cast<std::size_t>(size));

  Population pop;
  for (const Scored& k : kept) {
    pop.members.push_back(candidates[k.index]);
    pop.f_values.push_back(k.value);
  }
  return pop;
}

Evolution evolve(const StationaryPointSet& seeds, const Problem& problem,
                 const SolverConfig& config) {
  config.validate();
  const int size = config.population;
  Evolution evo;

  std::vector<Vector> initial = seeds.points;
  if (config.supplement && static_cast<int>(initial.size()) < size) {
    for (Vector& s : supplemental_seeds(problem.dimension, size)) initial.push_back(std::move(s));
  }
  Population pop = select_best(initial, problem.f, size, &evo.objective_evals);
  evo.best_per_generation.push_back(pop.f_values.front());

  for (int gen = 1; gen <= config.generations; ++gen) {
    std::vector<Vector> pool = pop.members;
    for (Vector& child : crossover_generation(pop)) pool.push_back(std::move(child));
    pop = select_best(pool, problem.f, size, &evo.objective_evals);
    pop.generation = gen;
    evo.best_per_generation.push_back(pop.f_values.front());
  }

  evo.x_ag = pop.members.front();
  evo.f_ag = pop.f_values.front();
  evo.final_population = std::move(pop);
  return evo;
}

GlobalResult cnmge(const Problem& problem, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  GlobalResult result;

  result.stationary = cnmdt::enumerate_stationary_points(problem, config);
  result.evolution = evolve(result.stationary, problem, config);
  result.x_ag = result.evolution.x_ag;
  result.f_ag = result.evolution.f_ag;

  result.x_cn = result.x_ag;
  result.f_cn = result.f_ag;
  long polish_evals = 0;
  try {
    const CnmtrResult polish = cnmtr::solve(problem.grad, problem.hess, result.x_ag, config);
    polish_evals = polish.f_evals;
    result.jac_evals += polish.jac_evals;
    if (polish.converged) {
      const double f_cn = problem.f(polish.x_star);
      ++polish_evals;
      if (std::isfinite(f_cn)) {
        result.x_cn = polish.x_star;
        result.f_cn = f_cn;
        result.polish_converged = true;
      }
    }
  } catch (const Error&) {
    // Non-finite gradient at x_ag: keep the evolved point.
  }

  if (result.f_cn < result.f_ag) {
    result.x_min = result.x_cn;
    result.f_min = result.f_cn;
  } else {
    result.x_min = result.x_ag;
    result.f_min = result.f_ag;
  }

  result.f_evals = result.stationary.f_evals + result.evolution.objective_evals + polish_evals +
                   static_cast<long>(result.stationary.size());
  result.jac_evals += result.stationary.jac_evals;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace cnmge::qge
