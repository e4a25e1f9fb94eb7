#include "cnmge/cnmtr.hpp"

#include <cmath>
#include <stdexcept>

#include "cnmge/errors.hpp"

namespace cnmge {

void SolverConfig::validate() const {
  if (!(0.0 < eta_a && eta_a < eta1 && eta1 < eta2 && eta2 < 1.0)) {
    throw std::invalid_argument("SolverConfig: need 0 < eta_a < eta1 < eta2 < 1");
  }
  if (!(gamma1 > 1.0) || !(gamma2 > 0.0 && gamma2 < 1.0)) {
    throw std::invalid_argument("SolverConfig: need gamma1 > 1 and 0 < gamma2 < 1");
  }
  if (!(dt0 > 0.0) || !(eps > 0.0) || maxit < 1 || !(fd_step > 0.0) || !(dt_min > 0.0)) {
    throw std::invalid_argument("SolverConfig: dt0, eps, fd_step, dt_min must be > 0, maxit >= 1");
  }
  if (!(dup_tol > 0.0) || !(refine_tol >= 0.0) || max_solves_per_start < 1 || max_stationary < 0) {
    throw std::invalid_argument("SolverConfig: bad deflation limits");
  }
  if (population < 1 || generations < 0) {
    throw std::invalid_argument("SolverConfig: need population >= 1 and generations >= 0");
  }
}

std::string_view to_string(CnmtrStatus status) {
  switch (status) {
    case CnmtrStatus::kConverged:
      return "converged";
    case CnmtrStatus::kMaxIterations:
      return "max_iterations";
    case CnmtrStatus::kSingularJacobian:
      return "singular_jacobian";
    case CnmtrStatus::kStalled:
      return "stalled";
  }
  return "unknown";
}

namespace cnmtr {

double compute_rho(double f_old_norm, double f_new_norm, double dt) {
  if (f_old_norm == 0.0) {
    throw DegenerateError("compute_rho: ||F(x_k)|| is zero");
  }
  return (f_old_norm - f_new_norm) / ((dt / (1.0 + dt)) * f_old_norm);
}

double update_dt(double dt, double rho, const SolverConfig& config) {
  const double gap = std::abs(1.0 - rho);
  if (gap <= config.eta1) return config.gamma1 * dt;
  if (gap < config.eta2) return dt;
  return config.gamma2 * dt;
}

bool should_refresh_jacobian(double rho_prev, double s_prev_inf) {
  return std::abs(1.0 - rho_prev) > 0.25 || s_prev_inf > 1.0;
}

CnmtrState continuation_step(CnmtrState state, const VectorFunction& f,
                             const SolverConfig& config) {
  const double scale = state.dt / (1.0 + state.dt);
  const Vector step = scale * state.newton_step;
  Vector x_trial = state.x + step;
  Vector f_trial = f(x_trial);
  ++state.f_evals;

  double rho = -1.0;
  double f_trial_norm = 0.0;
  if (f_trial.allFinite()) {
    f_trial_norm = linalg::euclid_norm(f_trial);
    if (!(state.f_norm < f_trial_norm)) {
      rho = compute_rho(state.f_norm, f_trial_norm, state.dt);
    }
  }

  state.dt = update_dt(state.dt, rho, config);
  state.rho_prev = rho;
  state.s_prev_inf = linalg::inf_norm(step);

  if (rho >= config.eta_a) {
    state.x = std::move(x_trial);
    state.f_val = std::move(f_trial);
    state.f_norm = f_trial_norm;
    state.trial_success = true;
  } else {
    state.trial_success = false;
  }
  return state;
}

CnmtrResult solve(const VectorFunction& f, const MatrixFunction& jac, const Vector& x0,
                  const SolverConfig& config) {
  config.validate();
  CnmtrResult result;

  CnmtrState state;
  state.x = x0;
  state.f_val = f(x0);
  state.f_evals = 1;
  linalg::require_finite(state.f_val, "F(x0)");
  state.f_norm = linalg::euclid_norm(state.f_val);
  state.dt = config.dt0;

  auto finish = [&](CnmtrStatus status) {
    result.x_star = state.x;
    result.residual_inf = linalg::inf_norm(state.f_val);
    result.converged = result.residual_inf < config.eps;
    result.status = result.converged ? CnmtrStatus::kConverged : status;
    result.iterations = state.itc;
    result.f_evals = state.f_evals;
    return result;
  };

  // True when state.jac was evaluated at state.x.
  bool jac_current = false;
  while (state.itc < config.maxit) {
    bool need_step = false;
    bool refresh = false;
    if (state.trial_success) {
      ++state.itc;
      if (linalg::inf_norm(state.f_val) < config.eps) {
        return finish(CnmtrStatus::kConverged);
      }
      need_step = true;
      refresh = should_refresh_jacobian(state.rho_prev, state.s_prev_inf);
      if (!refresh) jac_current = false;
    } else if (!jac_current) {
      // A stale Jacobian can give a direction along which ||F|| never drops,
      // so a rejection with stale J re-evaluates J at the current point.
      need_step = true;
      refresh = true;
    }
    if (need_step) {
      if (refresh) {
        try {
          state.jac = jac ? jac(state.x)
                          : linalg::fd_jacobian(f, state.x, state.f_val, config.fd_step);
        } catch (const NonFiniteError&) {
          return finish(CnmtrStatus::kSingularJacobian);
        }
        ++result.jac_evals;
        if (!state.jac.allFinite()) {
          return finish(CnmtrStatus::kSingularJacobian);
        }
        jac_current = true;
      }
      try {
        state.newton_step = linalg::solve_linear(state.jac, -state.f_val);
      } catch (const SingularError&) {
        return finish(CnmtrStatus::kSingularJacobian);
      }
      if (!state.newton_step.allFinite()) {
        return finish(CnmtrStatus::kSingularJacobian);
      }
    }
    state = continuation_step(std::move(state), f, config);
    if (state.dt < config.dt_min) {
      return finish(CnmtrStatus::kStalled);
    }
  }
  return finish(CnmtrStatus::kMaxIterations);
}

}  // namespace cnmtr
}  // namespace cnmge
