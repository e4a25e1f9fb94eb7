#include "cnmge/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

#include "cnmge/errors.hpp"

namespace cnmge::linalg {

bool all_finite(const Vector& v) { return v.allFinite(); }

bool all_finite(const Matrix& m) { return m.allFinite(); }

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw NonFiniteError(std::string(what) + " is not finite");
  }
}

double inf_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double euclid_norm(const Vector& v) { return v.norm(); }

double one_norm(const Vector& v) { return v.cwiseAbs().sum(); }

double matrix_inf_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

Vector solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size() || b.size() == 0) {
    throw std::invalid_argument("solve_linear: expected n x n matrix and length-n vector");
  }
  const double scale = matrix_inf_norm(a);
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw SingularError("solve_linear: matrix is zero or not finite");
  }
  const Eigen::PartialPivLU<Matrix> lu(a);
  // U holds the pivots on its diagonal.
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot < kSingularPivotRatio * scale) {
    throw SingularError("solve_linear: pivot " + std::to_string(min_pivot) +
                        " below threshold");
  }
  return lu.solve(b);
}

Matrix fd_jacobian(const VectorFunction& f, const Vector& x, const Vector& fx, double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("fd_jacobian: step must be positive");
  }
  require_finite(fx, "F(x)");
  const Eigen::Index n = x.size();
  Matrix jac(fx.size(), n);
  Vector xp = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    xp[i] = x[i] + step;
    // Divide by the step actually taken so affine maps carry no rounding from h.
    const double taken = xp[i] - x[i];
    const Vector fp = f(xp);
    require_finite(fp, "F(x + h e_i)");
    jac.col(i) = (fp - fx) / taken;
    xp[i] = x[i];
  }
  return jac;
}

Matrix fd_jacobian(const VectorFunction& f, const Vector& x, double step) {
  return fd_jacobian(f, x, f(x), step);
}

}  // namespace cnmge::linalg
