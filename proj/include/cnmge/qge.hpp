#pragma once

#include <vector>

#include "cnmge/cnmdt.hpp"
#include "cnmge/cnmtr.hpp"
#include "cnmge/problems.hpp"

namespace cnmge {

/// Members sorted by non-decreasing f.
struct Population {
  std::vector<Vector> members;
  std::vector<double> f_values;
  int generation = 0;

  std::size_t size() const { return members.size(); }
};

struct Evolution {
  Vector x_ag;
  double f_ag = 0.0;
  Population final_population;
  /// Best f of S_0, S_1, ..., S_M.
  std::vector<double> best_per_generation;
  long objective_evals = 0;
};

struct GlobalResult {
  Vector x_min;
  double f_min = 0.0;
  Vector x_ag;  ///< best member after evolution
  double f_ag = 0.0;
  Vector x_cn;  ///< polished point; equals x_ag when the polish fails
  double f_cn = 0.0;
  bool polish_converged = false;

  StationaryPointSet stationary;
  Evolution evolution;

  long f_evals = 0;    ///< objective plus gradient evaluations
  long jac_evals = 0;
  double wall_seconds = 0.0;
};

namespace qge {

/// Distance (inf-norm) under which two candidates count as the same point.
constexpr double kSelectionDuplicateTol = 1e-12;

/// zeros(n), then scale * v for scale = 0.1, 1, 10, 100, ... and v over
/// {ones, -ones, [ones; -ones], [-ones; ones]}, truncated to `count`.
std::vector<Vector> supplemental_seeds(int n, int count);

/// All L(L-1)/2 midpoints (x_i + x_j) / 2, i < j, in lexicographic order.
std::vector<Vector> crossover_generation(const Population& population);

/// The `size` best distinct candidates by f, ties kept in input order.
/// Candidates with a non-finite f are dropped; NonFiniteError if none remain.
Population select_best(const std::vector<Vector>& candidates, const ScalarFunction& f, int size,
                       long* evals = nullptr);

/// Runs config.generations rounds of crossover and union selection starting
/// from the `config.population` best seeds.  When fewer stationary points than
/// the population size are available, supplemental seeds are added.
Evolution evolve(const StationaryPointSet& seeds, const Problem& problem,
                 const SolverConfig& config = {});

/// Stationary-point enumeration, evolution, and a final CNMTr polish on
/// grad f from the evolved best point.
GlobalResult cnmge(const Problem& problem, const SolverConfig& config = {});

}  // namespace qge
}  // namespace cnmge
