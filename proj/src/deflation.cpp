#include "cnmge/deflation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "cnmge/errors.hpp"

namespace cnmge {

namespace deflation {

double alpha_for(const Vector& root, int n) {
  const double l1 = linalg::one_norm(root);
  return l1 <= 1e-6 ? static_cast<double>(n) : l1;
}

}  // namespace deflation

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v == 0.0 ? 0.0 : -1.0); }

}  // namespace

DeflatedSystem::DeflatedSystem(VectorFunction base_f, MatrixFunction base_jac, int dimension,
                               double dup_tol, double fd_step)
    : base_f_(std::move(base_f)),
      base_jac_(std::move(base_jac)),
      dimension_(dimension),
      dup_tol_(dup_tol),
      fd_step_(fd_step) {
  if (!base_f_) throw std::invalid_argument("DeflatedSystem: base function is empty");
  if (dimension_ < 1) throw std::invalid_argument("DeflatedSystem: dimension must be >= 1");
  if (!(dup_tol_ > 0.0)) throw std::invalid_argument("DeflatedSystem: dup_tol must be > 0");
}

DeflatedSystem DeflatedSystem::register_root(const Vector& root) const {
  if (root.size() != dimension_) {
    throw std::invalid_argument("register_root: dimension mismatch");
  }
  linalg::require_finite(root, "root");
  for (const Vector& known : roots_) {
    if (linalg::inf_norm(root - known) <= dup_tol_) {
      throw DuplicateError("register_root: root duplicates a registered root");
    }
  }
  DeflatedSystem next = *this;
  next.roots_.push_back(root);
  next.alphas_.push_back(deflation::alpha_for(root, dimension_));
  return next;
}

double DeflatedSystem::scale(const Vector& x) const {
  double log_c = 0.0;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const double dist = linalg::one_norm(x - roots_[i]);
    if (dist < kAtRootDistance) {
      throw AtRootError("DeflatedSystem: evaluation at a deflated root");
    }
    log_c += std::log(alphas_[i]) - std::log(dist);
  }
  static const double kLogMin = std::log(kMinScale);
  static const double kLogMax = std::log(kMaxScale);
  return std::exp(std::clamp(log_c, kLogMin, kLogMax));
}

Vector DeflatedSystem::eval_G(const Vector& x) const {
  if (roots_.empty()) return base_f_(x);
  const double c = scale(x);
  return c * base_f_(x);
}

Matrix DeflatedSystem::eval_G_jacobian(const Vector& x) const {
  const Vector fx = base_f_(x);
  Matrix jac = base_jac_ ? base_jac_(x) : linalg::fd_jacobian(base_f_, x, fx, fd_step_);
  if (roots_.empty()) return jac;

  const double c = scale(x);
  Vector p = Vector::Zero(dimension_);
  for (const Vector& root : roots_) {
    const Vector diff = x - root;
    const double dist = linalg::one_norm(diff);
    p -= diff.unaryExpr(&sgn) / dist;
  }
  jac.noalias() += fx * p.transpose();
  return c * jac;
}

VectorFunction DeflatedSystem::g_function() const {
  return [self = *this](const Vector& x) { return self.eval_G(x); };
}

MatrixFunction DeflatedSystem::g_jacobian_function() const {
  return [self = *this](const Vector& x) { return self.eval_G_jacobian(x); };
}

}  // namespace cnmge
