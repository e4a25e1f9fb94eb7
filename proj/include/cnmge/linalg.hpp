#pragma once

#include <functional>

#include <Eigen/Core>

namespace cnmge {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

using VectorFunction = std::function<Vector(const Vector&)>;
using MatrixFunction = std::function<Matrix(const Vector&)>;
using ScalarFunction = std::function<double(const Vector&)>;

namespace linalg {

constexpr double kDefaultFdStep = 1e-6;

/// Relative pivot threshold: a pivot below kSingularPivotRatio * ||A||_inf is singular.
constexpr double kSingularPivotRatio = 1e-14;

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

/// Throws NonFiniteError naming `what` when `v` holds NaN/Inf.
void require_finite(const Vector& v, const char* what);

double inf_norm(const Vector& v);
double euclid_norm(const Vector& v);
double one_norm(const Vector& v);

/// Max-row-sum norm of a square matrix.
double matrix_inf_norm(const Matrix& m);

/// Solves A s = b by LU with partial pivoting.
///
/// Throws SingularError when some pivot magnitude is below
/// kSingularPivotRatio * ||A||_inf, and std::invalid_argument on shape mismatch.
Vector solve_linear(const Matrix& a, const Vector& b);

/// Forward-difference Jacobian; column i is (F(x + h e_i) - F(x)) / h.
/// Throws NonFiniteError if any evaluation of F is not finite.
Matrix fd_jacobian(const VectorFunction& f, const Vector& x, double step = kDefaultFdStep);

/// Same as above, reusing an already computed F(x).
Matrix fd_jacobian(const VectorFunction& f, const Vector& x, const Vector& fx,
                   double step = kDefaultFdStep);

}  // namespace linalg
}  // namespace cnmge
