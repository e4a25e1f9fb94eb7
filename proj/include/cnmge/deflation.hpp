#pragma once

#include <vector>

#include "cnmge/linalg.hpp"

namespace cnmge {

/// F = grad f with a registry of deflated roots x_1*, ..., x_k*.
///
/// Evaluates the scaled deflation
///
///     G_k(x) = prod_i (alpha_i / ||x - x_i*||_1) * F(x),
///     alpha_i = n            if ||x_i*||_1 <= 1e-6,
///               ||x_i*||_1   otherwise,
///
/// and its sub-differential c(x) (J(x) + F(x) p(x)^T) with
/// p(x) = -sum_i sgn(x - x_i*) / ||x - x_i*||_1 and sgn(0) = 0.
///
/// The unscaled textbook variant G_k = F / prod_i ||x - x_i*||_2 overflows or
/// underflows after a handful of roots and is not provided.  The product is
/// accumulated in log space and clamped to [1e-300, 1e300].
///
/// Values are immutable: register_root returns a new system.
class DeflatedSystem {
 public:
  static constexpr double kAtRootDistance = 1e-13;
  static constexpr double kMinScale = 1e-300;
  static constexpr double kMaxScale = 1e300;

  /// `base_jac` may be empty, in which case forward differences of `base_f`
  /// with step `fd_step` supply J.
  DeflatedSystem(VectorFunction base_f, MatrixFunction base_jac, int dimension,
                 double dup_tol = 1e-4, double fd_step = linalg::kDefaultFdStep);

  int dimension() const { return dimension_; }
  double dup_tol() const { return dup_tol_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<Vector>& roots() const { return roots_; }
  const std::vector<double>& alphas() const { return alphas_; }

  /// Throws DuplicateError if `root` is within dup_tol (inf-norm) of a registered root.
  [[nodiscard]] DeflatedSystem register_root(const Vector& root) const;

  /// Throws AtRootError if x is within kAtRootDistance (1-norm) of a registered root.
  Vector eval_G(const Vector& x) const;
  Matrix eval_G_jacobian(const Vector& x) const;

  /// The scale c(x) = prod_i alpha_i / ||x - x_i*||_1 after clamping.
  double scale(const Vector& x) const;

  VectorFunction g_function() const;
  MatrixFunction g_jacobian_function() const;

 private:
  VectorFunction base_f_;
  MatrixFunction base_jac_;
  int dimension_;
  double dup_tol_;
  double fd_step_;
  std::vector<Vector> roots_;
  std::vector<double> alphas_;
};

namespace deflation {

/// alpha = n when ||root||_1 <= 1e-6, else ||root||_1.
double alpha_for(const Vector& root, int n);

}  // namespace deflation
}  // namespace cnmge
