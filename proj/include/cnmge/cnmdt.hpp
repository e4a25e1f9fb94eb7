#pragma once

#include <cstddef>
#include <vector>

#include "cnmge/cnmtr.hpp"
#include "cnmge/problems.hpp"

namespace cnmge {

/// Stationary points of f collected by deflated continuation Newton solves.
struct StationaryPointSet {
  std::vector<Vector> points;
  std::vector<double> f_values;
  std::vector<double> residuals;   ///< ||grad f||_inf at each point
  std::vector<int> origin_start;   ///< index into the start list that produced the point

  long f_evals = 0;
  long jac_evals = 0;
  int solves = 0;  ///< CNMTr runs, successful or not

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  /// Index of the smallest f value; the first one wins ties.
  std::size_t best_index() const;
};

namespace cnmdt {

/// ones(n), [+1..; -1..], [-1..; +1..], -ones(n) with the first half holding
/// ceil(n/2) entries.  Exact duplicates (n = 1) are dropped.
std::vector<Vector> standard_starts(int n);

/// Runs CNMTr on G_0 = grad f from each start, registering every validated
/// root in a deflation registry shared across starts and retrying from the
/// same start until a solve fails.
///
/// Throws EmptyResultError when no start yields a stationary point.
StationaryPointSet enumerate_stationary_points(const Problem& problem,
                                               const SolverConfig& config = {});

}  // namespace cnmdt
}  // namespace cnmge
