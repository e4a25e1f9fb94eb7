#pragma once

#include <optional>
#include <limits>
#include <string_view>

#include "cnmge/linalg.hpp"

namespace cnmge {

/// Named constants shared by the single-root solver, the deflated
/// enumeration and the quasi-genetic evolution.
struct SolverConfig {
  // Trust-region time stepping.
  double eta_a = 1e-6;   ///< accept a trial step when rho >= eta_a
  double eta1 = 0.25;    ///< |1 - rho| <= eta1 enlarges dt
  double eta2 = 0.75;    ///< |1 - rho| >= eta2 shrinks dt
  double gamma1 = 2.0;   ///< enlarge factor
  double gamma2 = 0.5;   ///< shrink factor
  double dt0 = 2.0;
  double eps = 1e-6;     ///< ||F||_inf tolerance
  int maxit = 400;       ///< cap on successful steps
  double fd_step = linalg::kDefaultFdStep;
  /// A run whose time step shrinks below this is reported as stalled.
  double dt_min = 1e-12;

  // Deflation.
  double dup_tol = 1e-4;
  int max_solves_per_start = 100;
  /// Upper bound on the number of stationary points collected overall (0 = no cap).
  int max_stationary = 0;
  /// A deflated root whose raw ||F||_inf lies in (eps, refine_tol] is re-solved on F
  /// before validation; larger residuals are rejected outright. eps disables it.
  double refine_tol = std::numeric_limits<double>::infinity();

  // Quasi-genetic evolution.
  int population = 20;   ///< L
  int generations = 10;  ///< M
  bool supplement = true;  ///< pad a population of fewer than L stationary points with fixed seeds

  /// Throws std::invalid_argument when an invariant on the constants is violated.
  void validate() const;
};

enum class CnmtrStatus { kConverged, kMaxIterations, kSingularJacobian, kStalled };

std::string_view to_string(CnmtrStatus status);

/// Working state of one continuation Newton run.
struct CnmtrState {
  Vector x;
  Vector f_val;
  double f_norm = 0.0;  ///< Euclidean norm of f_val
  Matrix jac;
  Vector newton_step;   ///< solves jac * s = -f_val
  double dt = 2.0;
  double rho_prev = 0.0;
  double s_prev_inf = 0.0;
  int itc = 0;
  bool trial_success = true;
  long f_evals = 0;
};

struct CnmtrResult {
  Vector x_star;
  double residual_inf = 0.0;
  bool converged = false;
  CnmtrStatus status = CnmtrStatus::kMaxIterations;
  int iterations = 0;
  long f_evals = 0;
  long jac_evals = 0;
};

namespace cnmtr {

/// Agreement ratio between actual and predicted reduction of ||F||.
/// Throws DegenerateError when f_old_norm is zero.
double compute_rho(double f_old_norm, double f_new_norm, double dt);

double update_dt(double dt, double rho, const SolverConfig& config);

/// Whether the Jacobian must be re-evaluated after an accepted step.
bool should_refresh_jacobian(double rho_prev, double s_prev_inf);

/// One trial step x + dt/(1+dt) * s^N with time-step update and
/// accept/reject.  A rejected trial leaves x, f_val and newton_step untouched.
CnmtrState continuation_step(CnmtrState state, const VectorFunction& f,
                             const SolverConfig& config);

/// Finds a zero of `f` from `x0`.  When `jac` is empty a forward-difference
/// Jacobian with step config.fd_step is used.
///
/// Throws NonFiniteError if f(x0) is not finite.  A singular Jacobian ends the
/// run with status kSingularJacobian instead of throwing.
CnmtrResult solve(const VectorFunction& f, const MatrixFunction& jac, const Vector& x0,
                  const SolverConfig& config = {});

}  // namespace cnmtr
}  // namespace cnmge
