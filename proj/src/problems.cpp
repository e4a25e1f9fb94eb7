#include "cnmge/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace cnmge::problems {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double value : values) v[i++] = value;
  return v;
}

Matrix diagonal(const Vector& d) { return d.asDiagonal(); }

// ---------------------------------------------------------------------------
// Scalable problems

// Molecular potential energy with torsion angles omega_i, i counted from 1.
constexpr double kMolA = 10.60099896;
constexpr double kMolB = 4.141720682;
// Stationary coordinates of the odd/even terms at the global minimum.
constexpr double kMolOddArgmin = 1.0391953026002078;
constexpr double kMolOddMin = -0.34267871169080637;
constexpr double kMolEvenMin = 0.26044210486984775;

double mol_parity(Eigen::Index zero_based) { return zero_based % 2 == 0 ? -1.0 : 1.0; }

}  // namespace

double molecular_energy(const Vector& omega) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    sum += 1.0 + std::cos(3.0 * w) + mol_parity(i) / std::sqrt(kMolA - kMolB * std::cos(w));
  }
  return sum;
}

Vector molecular_energy_gradient(const Vector& omega) {
  Vector g(omega.size());
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    const double r = kMolA - kMolB * std::cos(w);
    g[i] = -3.0 * std::sin(3.0 * w) - 0.5 * mol_parity(i) * kMolB * std::sin(w) / (r * std::sqrt(r));
  }
  return g;
}

namespace {

Matrix molecular_energy_hessian(const Vector& omega) {
  Vector d(omega.size());
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    const double r = kMolA - kMolB * std::cos(w);
    const double r15 = r * std::sqrt(r);
    const double s = std::sin(w);
    d[i] = -9.0 * std::cos(3.0 * w) +
           mol_parity(i) * (-0.5 * kMolB * std::cos(w) / r15 + 0.75 * kMolB * kMolB * s * s / (r15 * r));
  }
  return diagonal(d);
}

Problem molecular(int n) {
  Problem p;
  p.f = molecular_energy;
  p.grad = molecular_energy_gradient;
  p.hess = molecular_energy_hessian;
  Vector argmin(n);
  for (int i = 0; i < n; ++i) argmin[i] = i % 2 == 0 ? kMolOddArgmin : kPi;
  const int odd = (n + 1) / 2;
  p.known_min = odd * kMolOddMin + (n - odd) * kMolEvenMin;
  p.known_argmin = argmin;
  return p;
}

Problem ackley(int n) {
  constexpr double a = 20.0, b = 0.2, c = 2.0 * kPi;
  Problem p;
  p.f = [=](const Vector& x) {
    const double nn = static_cast<double>(x.size());
    const double r = std::sqrt(x.squaredNorm() / nn);
    const double cs = (c * x.array()).cos().sum() / nn;
    return -a * std::exp(-b * r) - std::exp(cs) + a + kE;
  };
  p.grad = [=](const Vector& x) {
    const double nn = static_cast<double>(x.size());
    const double r = std::sqrt(x.squaredNorm() / nn);
    const double ec = std::exp((c * x.array()).cos().sum() / nn);
    Vector g = (ec * c / nn) * (c * x.array()).sin().matrix();
    // The radial term has a kink at the origin; its zero subgradient is used there.
    if (r > 0.0) g += (a * b * std::exp(-b * r) / (nn * r)) * x;
    return g;
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Zero(n);
  return p;
}

Problem levy(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    const Eigen::Index n = x.size();
    const Eigen::ArrayXd w = 1.0 + (x.array() - 1.0) / 4.0;
    double sum = std::pow(std::sin(kPi * w[0]), 2);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      sum += (w[i] - 1.0) * (w[i] - 1.0) * (1.0 + 10.0 * std::pow(std::sin(kPi * w[i] + 1.0), 2));
    }
    const double wn = w[n - 1];
    sum += (wn - 1.0) * (wn - 1.0) * (1.0 + std::pow(std::sin(2.0 * kPi * wn), 2));
    return sum;
  };
  p.grad = [](const Vector& x) {
    const Eigen::Index n = x.size();
    const Eigen::ArrayXd w = 1.0 + (x.array() - 1.0) / 4.0;
    Vector g = Vector::Zero(n);
    g[0] += kPi * std::sin(2.0 * kPi * w[0]);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      const double u = kPi * w[i] + 1.0;
      const double su = std::sin(u);
      g[i] += 2.0 * (w[i] - 1.0) * (1.0 + 10.0 * su * su) +
              (w[i] - 1.0) * (w[i] - 1.0) * 10.0 * kPi * std::sin(2.0 * u);
    }
    const double wn = w[n - 1];
    const double sn = std::sin(2.0 * kPi * wn);
    g[n - 1] += 2.0 * (wn - 1.0) * (1.0 + sn * sn) +
                (wn - 1.0) * (wn - 1.0) * 2.0 * kPi * std::sin(4.0 * kPi * wn);
    return Vector(g / 4.0);
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Ones(n);
  return p;
}

constexpr double kSchwefelConst = 418.9829;
constexpr double kSchwefelArgmin = 420.96874635998203;
constexpr double kSchwefelMinPerDim = 1.2727566266076575e-5;

Problem schwefel(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    const Eigen::ArrayXd a = x.array();
    return kSchwefelConst * static_cast<double>(x.size()) - (a * a.abs().sqrt().sin()).sum();
  };
  p.grad = [](const Vector& x) {
    const Eigen::ArrayXd s = x.array().abs().sqrt();
    return Vector(-(s.sin() + 0.5 * s * s.cos()));
  };
  p.known_min = n * kSchwefelMinPerDim;
  p.known_argmin = Vector::Constant(n, kSchwefelArgmin);
  p.box_constrained_min = true;
  return p;
}

Problem rastrigin(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    const Eigen::ArrayXd a = x.array();
    return 10.0 * static_cast<double>(x.size()) + (a * a - 10.0 * (2.0 * kPi * a).cos()).sum();
  };
  p.grad = [](const Vector& x) {
    const Eigen::ArrayXd a = x.array();
    return Vector(2.0 * a + 20.0 * kPi * (2.0 * kPi * a).sin());
  };
  p.hess = [](const Vector& x) {
    return diagonal(2.0 + 40.0 * kPi * kPi * (2.0 * kPi * x.array()).cos());
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Zero(n);
  return p;
}

constexpr double kStArgmin = -2.9035340277711771;
constexpr double kStMinPerDim = -39.166165703771415;

Problem styblinski_tang(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    const Eigen::ArrayXd a = x.array();
    return 0.5 * (a.pow(4) - 16.0 * a * a + 5.0 * a).sum();
  };
  p.grad = [](const Vector& x) {
    const Eigen::ArrayXd a = x.array();
    return Vector(0.5 * (4.0 * a.cube() - 32.0 * a + 5.0));
  };
  p.hess = [](const Vector& x) {
    const Eigen::ArrayXd a = x.array();
    return diagonal(6.0 * a * a - 16.0);
  };
  p.known_min = n * kStMinPerDim;
  p.known_argmin = Vector::Constant(n, kStArgmin);
  return p;
}

Problem trid(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    const Eigen::Index n = x.size();
    double sum = (x.array() - 1.0).square().sum();
    for (Eigen::Index i = 1; i < n; ++i) sum -= x[i] * x[i - 1];
    return sum;
  };
  p.grad = [](const Vector& x) {
    const Eigen::Index n = x.size();
    Vector g = 2.0 * (x.array() - 1.0).matrix();
    for (Eigen::Index i = 1; i < n; ++i) {
      g[i] -= x[i - 1];
      g[i - 1] -= x[i];
    }
    return g;
  };
  p.hess = [](const Vector& x) {
    const Eigen::Index n = x.size();
    Matrix h = 2.0 * Matrix::Identity(n, n);
    for (Eigen::Index i = 1; i < n; ++i) h(i, i - 1) = h(i - 1, i) = -1.0;
    return h;
  };
  const double nn = n;
  p.known_min = -nn * (nn + 4.0) * (nn - 1.0) / 6.0;
  Vector argmin(n);
  for (int i = 1; i <= n; ++i) argmin[i - 1] = static_cast<double>(i) * (n + 1 - i);
  p.known_argmin = argmin;
  return p;
}

// Separable quadratic sum_i w_i x_i^2.
Problem weighted_squares(int n, std::function<double(int, int)> weight) {
  Vector w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = weight(i, n);
  Problem p;
  p.f = [w](const Vector& x) { return (w.array() * x.array().square()).sum(); };
  p.grad = [w](const Vector& x) { return Vector(2.0 * w.array() * x.array()); };
  p.hess = [w](const Vector&) { return diagonal(2.0 * w); };
  p.known_min = 0.0;
  p.known_argmin = Vector::Zero(n);
  return p;
}

Problem zakharov(int n) {
  Vector half_i(n);
  for (int i = 1; i <= n; ++i) half_i[i - 1] = 0.5 * i;
  Problem p;
  p.f = [half_i](const Vector& x) {
    const double s = half_i.dot(x);
    return x.squaredNorm() + s * s + s * s * s * s;
  };
  p.grad = [half_i](const Vector& x) {
    const double s = half_i.dot(x);
    return Vector(2.0 * x + (2.0 * s + 4.0 * s * s * s) * half_i);
  };
  p.hess = [half_i](const Vector& x) {
    const double s = half_i.dot(x);
    Matrix h = (2.0 + 12.0 * s * s) * (half_i * half_i.transpose());
    h.diagonal().array() += 2.0;
    return h;
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Zero(n);
  return p;
}

Problem dixon_price(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    double sum = (x[0] - 1.0) * (x[0] - 1.0);
    for (Eigen::Index i = 1; i < x.size(); ++i) {
      const double t = 2.0 * x[i] * x[i] - x[i - 1];
      sum += static_cast<double>(i + 1) * t * t;
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    g[0] = 2.0 * (x[0] - 1.0);
    for (Eigen::Index i = 1; i < x.size(); ++i) {
      const double t = 2.0 * (i + 1) * (2.0 * x[i] * x[i] - x[i - 1]);
      g[i] += t * 4.0 * x[i];
      g[i - 1] -= t;
    }
    return g;
  };
  p.known_min = 0.0;
  // x_i = 2^(-(2^i - 2) / 2^i) = 2^(2^(1-i) - 1)
  Vector argmin(n);
  for (int i = 1; i <= n; ++i) argmin[i - 1] = std::exp2(std::ldexp(1.0, 1 - i) - 1.0);
  p.known_argmin = argmin;
  return p;
}

Problem rosenbrock(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      sum += 100.0 * a * a + (1.0 - x[i]) * (1.0 - x[i]);
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
      g[i + 1] += 200.0 * a;
    }
    return g;
  };
  p.hess = [](const Vector& x) {
    const Eigen::Index n = x.size();
    Matrix h = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      h(i, i) += 1200.0 * x[i] * x[i] - 400.0 * x[i + 1] + 2.0;
      h(i, i + 1) += -400.0 * x[i];
      h(i + 1, i) += -400.0 * x[i];
      h(i + 1, i + 1) += 200.0;
    }
    return h;
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Ones(n);
  return p;
}

Problem powell(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k + 3 < x.size(); k += 4) {
      const double a = x[k] + 10.0 * x[k + 1];
      const double b = x[k + 2] - x[k + 3];
      const double c = x[k + 1] - 2.0 * x[k + 2];
      const double d = x[k] - x[k + 3];
      sum += a * a + 5.0 * b * b + std::pow(c, 4) + 10.0 * std::pow(d, 4);
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Eigen::Index k = 0; k + 3 < x.size(); k += 4) {
      const double a = x[k] + 10.0 * x[k + 1];
      const double b = x[k + 2] - x[k + 3];
      const double c = x[k + 1] - 2.0 * x[k + 2];
      const double d = x[k] - x[k + 3];
      g[k] = 2.0 * a + 40.0 * d * d * d;
      g[k + 1] = 20.0 * a + 4.0 * c * c * c;
      g[k + 2] = 10.0 * b - 8.0 * c * c * c;
      g[k + 3] = -10.0 * b - 40.0 * d * d * d;
    }
    return g;
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Zero(n);
  return p;
}

Problem griewank(int n) {
  Problem p;
  p.f = [](const Vector& x) {
    double prod = 1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) prod *= std::cos(x[i] / std::sqrt(i + 1.0));
    return x.squaredNorm() / 4000.0 - prod + 1.0;
  };
  p.grad = [](const Vector& x) {
    const Eigen::Index n = x.size();
    Vector c(n);
    for (Eigen::Index i = 0; i < n; ++i) c[i] = std::cos(x[i] / std::sqrt(i + 1.0));
    // prefix[i] * suffix[i] is the product of all cosines except the i-th.
    Vector prefix(n), suffix(n);
    double acc = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      prefix[i] = acc;
      acc *= c[i];
    }
    acc = 1.0;
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      suffix[i] = acc;
      acc *= c[i];
    }
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double s = std::sqrt(i + 1.0);
      g[i] = x[i] / 2000.0 + prefix[i] * suffix[i] * std::sin(x[i] / s) / s;
    }
    return g;
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Zero(n);
  return p;
}

Problem raydan1(int n) {
  Vector w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = i / 10.0;
  Problem p;
  p.f = [w](const Vector& x) { return (w.array() * (x.array().exp() - x.array())).sum(); };
  p.grad = [w](const Vector& x) { return Vector(w.array() * (x.array().exp() - 1.0)); };
  p.hess = [w](const Vector& x) { return diagonal(w.array() * x.array().exp()); };
  p.reference_value = 5.0050e4;
  p.reference_dimension = 1000;
  return p;
}

Problem raydan2(int) {
  Problem p;
  p.f = [](const Vector& x) { return (x.array().exp() - x.array()).sum(); };
  p.grad = [](const Vector& x) { return Vector(x.array().exp() - 1.0); };
  p.hess = [](const Vector& x) { return diagonal(x.array().exp()); };
  p.reference_value = 1.0000e3;
  p.reference_dimension = 1000;
  return p;
}

Problem diagonal1(int n) {
  Vector w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = i;
  Problem p;
  p.f = [w](const Vector& x) { return (x.array().exp() - w.array() * x.array()).sum(); };
  p.grad = [w](const Vector& x) { return Vector(x.array().exp() - w.array()); };
  p.hess = [](const Vector& x) { return diagonal(x.array().exp()); };
  p.reference_value = -2.7068e6;
  p.reference_dimension = 1000;
  return p;
}

Problem diagonal5(int) {
  Problem p;
  p.f = [](const Vector& x) {
    // log(e^x + e^-x) = |x| + log(1 + e^{-2|x|})
    const Eigen::ArrayXd a = x.array().abs();
    return (a + (-2.0 * a).exp().log1p()).sum();
  };
  p.grad = [](const Vector& x) { return Vector(x.array().tanh()); };
  p.hess = [](const Vector& x) { return diagonal(1.0 - x.array().tanh().square()); };
  p.reference_value = 6.9315e2;
  p.reference_dimension = 1000;
  return p;
}

Problem extended_tridiagonal1(int) {
  Problem p;
  p.f = [](const Vector& x) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k + 1 < x.size(); k += 2) {
      const double a = x[k] + x[k + 1] - 3.0;
      const double b = x[k] - x[k + 1] + 1.0;
      sum += a * a + b * b * b * b;
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Eigen::Index k = 0; k + 1 < x.size(); k += 2) {
      const double a = x[k] + x[k + 1] - 3.0;
      const double b = x[k] - x[k + 1] + 1.0;
      g[k] = 2.0 * a + 4.0 * b * b * b;
      g[k + 1] = 2.0 * a - 4.0 * b * b * b;
    }
    return g;
  };
  p.reference_value = 3.0726e-7;
  p.reference_dimension = 1000;
  return p;
}

Problem extended_psc1(int) {
  Problem p;
  p.f = [](const Vector& x) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k + 1 < x.size(); k += 2) {
      const double q = x[k] * x[k] + x[k + 1] * x[k + 1] + x[k] * x[k + 1];
      sum += q * q + std::pow(std::sin(x[k]), 2) + std::pow(std::cos(x[k + 1]), 2);
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Eigen::Index k = 0; k + 1 < x.size(); k += 2) {
      const double u = x[k], v = x[k + 1];
      const double q = u * u + v * v + u * v;
      g[k] = 2.0 * q * (2.0 * u + v) + std::sin(2.0 * u);
      g[k + 1] = 2.0 * q * (2.0 * v + u) - std::sin(2.0 * v);
    }
    return g;
  };
  p.reference_value = 3.8660e2;
  p.reference_dimension = 1000;
  return p;
}

// ---------------------------------------------------------------------------
// Fixed-size problems

Problem levy13(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return std::pow(std::sin(3.0 * kPi * x), 2) +
           (x - 1.0) * (x - 1.0) * (1.0 + std::pow(std::sin(3.0 * kPi * y), 2)) +
           (y - 1.0) * (y - 1.0) * (1.0 + std::pow(std::sin(2.0 * kPi * y), 2));
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double s3y = std::sin(3.0 * kPi * y), s2y = std::sin(2.0 * kPi * y);
    return vec({3.0 * kPi * std::sin(6.0 * kPi * x) + 2.0 * (x - 1.0) * (1.0 + s3y * s3y),
                (x - 1.0) * (x - 1.0) * 3.0 * kPi * std::sin(6.0 * kPi * y) +
                    2.0 * (y - 1.0) * (1.0 + s2y * s2y) +
                    (y - 1.0) * (y - 1.0) * 2.0 * kPi * std::sin(4.0 * kPi * y)});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({1.0, 1.0});
  return p;
}

Problem hosaki(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double poly = 1.0 - 8.0 * x + 7.0 * x * x - 7.0 / 3.0 * x * x * x + 0.25 * x * x * x * x;
    return poly * y * y * std::exp(-y);
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double poly = 1.0 - 8.0 * x + 7.0 * x * x - 7.0 / 3.0 * x * x * x + 0.25 * x * x * x * x;
    const double dpoly = -8.0 + 14.0 * x - 7.0 * x * x + x * x * x;
    const double e = std::exp(-y);
    return vec({dpoly * y * y * e, poly * (2.0 * y - y * y) * e});
  };
  p.known_min = -2.3458115761012867;
  p.known_argmin = vec({4.0, 2.0});
  p.box_constrained_min = true;
  return p;
}

Problem beale(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double t1 = 1.5 - x + x * y, t2 = 2.25 - x + x * y * y, t3 = 2.625 - x + x * y * y * y;
    return t1 * t1 + t2 * t2 + t3 * t3;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double t1 = 1.5 - x + x * y, t2 = 2.25 - x + x * y * y, t3 = 2.625 - x + x * y * y * y;
    return vec({2.0 * t1 * (y - 1.0) + 2.0 * t2 * (y * y - 1.0) + 2.0 * t3 * (y * y * y - 1.0),
                2.0 * t1 * x + 4.0 * t2 * x * y + 6.0 * t3 * x * y * y});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({3.0, 0.5});
  return p;
}

Problem easom(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return -std::cos(x) * std::cos(y) * std::exp(-(x - kPi) * (x - kPi) - (y - kPi) * (y - kPi));
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double e = std::exp(-(x - kPi) * (x - kPi) - (y - kPi) * (y - kPi));
    const double cx = std::cos(x), cy = std::cos(y);
    return vec({e * cy * (std::sin(x) + 2.0 * (x - kPi) * cx),
                e * cx * (std::sin(y) + 2.0 * (y - kPi) * cy)});
  };
  p.known_min = -1.0;
  p.known_argmin = vec({kPi, kPi});
  return p;
}

constexpr double kBraninB = 5.1 / (4.0 * kPi * kPi);
constexpr double kBraninC = 5.0 / kPi;
constexpr double kBraninT = 1.0 / (8.0 * kPi);

Problem branin(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double t = y - kBraninB * x * x + kBraninC * x - 6.0;
    return t * t + 10.0 * (1.0 - kBraninT) * std::cos(x) + 10.0;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double t = y - kBraninB * x * x + kBraninC * x - 6.0;
    return vec({2.0 * t * (-2.0 * kBraninB * x + kBraninC) - 10.0 * (1.0 - kBraninT) * std::sin(x),
                2.0 * t});
  };
  p.known_min = 0.39788735772973834;
  p.known_argmin = vec({kPi, 2.275});
  return p;
}

Problem trecanni(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return x * x * x * x + 4.0 * x * x * x + 4.0 * x * x + y * y;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return vec({4.0 * x * x * x + 12.0 * x * x + 8.0 * x, 2.0 * y});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({0.0, 0.0});
  return p;
}

Problem booth(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double a = v[0] + 2.0 * v[1] - 7.0, b = 2.0 * v[0] + v[1] - 5.0;
    return a * a + b * b;
  };
  p.grad = [](const Vector& v) {
    const double a = v[0] + 2.0 * v[1] - 7.0, b = 2.0 * v[0] + v[1] - 5.0;
    return vec({2.0 * a + 4.0 * b, 4.0 * a + 2.0 * b});
  };
  p.hess = [](const Vector&) {
    Matrix h(2, 2);
    h << 10.0, 8.0, 8.0, 10.0;
    return h;
  };
  p.known_min = 0.0;
  p.known_argmin = vec({1.0, 3.0});
  return p;
}

Problem matyas(int) {
  Problem p;
  p.f = [](const Vector& v) {
    return 0.26 * (v[0] * v[0] + v[1] * v[1]) - 0.48 * v[0] * v[1];
  };
  p.grad = [](const Vector& v) {
    return vec({0.52 * v[0] - 0.48 * v[1], 0.52 * v[1] - 0.48 * v[0]});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({0.0, 0.0});
  return p;
}

Problem mccormick(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return std::sin(x + y) + (x - y) * (x - y) - 1.5 * x + 2.5 * y + 1.0;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double c = std::cos(x + y);
    return vec({c + 2.0 * (x - y) - 1.5, c - 2.0 * (x - y) + 2.5});
  };
  p.known_min = -1.9132229549810364;
  p.known_argmin = vec({-0.54719755119659775, -1.5471975511965977});
  p.box_constrained_min = true;
  return p;
}

Problem colville(int) {
  Problem p;
  p.f = [](const Vector& x) {
    const double a = x[0] * x[0] - x[1], b = x[2] * x[2] - x[3];
    return 100.0 * a * a + (x[0] - 1.0) * (x[0] - 1.0) + (x[2] - 1.0) * (x[2] - 1.0) +
           90.0 * b * b + 10.1 * ((x[1] - 1.0) * (x[1] - 1.0) + (x[3] - 1.0) * (x[3] - 1.0)) +
           19.8 * (x[1] - 1.0) * (x[3] - 1.0);
  };
  p.grad = [](const Vector& x) {
    const double a = x[0] * x[0] - x[1], b = x[2] * x[2] - x[3];
    return vec({400.0 * x[0] * a + 2.0 * (x[0] - 1.0),
                -200.0 * a + 20.2 * (x[1] - 1.0) + 19.8 * (x[3] - 1.0),
                2.0 * (x[2] - 1.0) + 360.0 * x[2] * b,
                -180.0 * b + 20.2 * (x[3] - 1.0) + 19.8 * (x[1] - 1.0)});
  };
  p.known_min = 0.0;
  p.known_argmin = Vector::Ones(4);
  return p;
}

Problem schaffer2(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double d = 1.0 + 0.001 * (x * x + y * y);
    const double s = std::sin(x * x - y * y);
    return 0.5 + (s * s - 0.5) / (d * d);
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double u = x * x - y * y;
    const double d = 1.0 + 0.001 * (x * x + y * y);
    const double s = std::sin(u);
    const double num = s * s - 0.5;
    const double s2 = std::sin(2.0 * u);
    return vec({s2 * 2.0 * x / (d * d) - num * 0.004 * x / (d * d * d),
                -s2 * 2.0 * y / (d * d) - num * 0.004 * y / (d * d * d)});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({0.0, 0.0});
  return p;
}

Problem schaffer4(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double d = 1.0 + 0.001 * (x * x + y * y);
    const double c = std::cos(std::sin(std::abs(x * x - y * y)));
    return 0.5 + (c * c - 0.5) / (d * d);
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double u = x * x - y * y;
    const double w = std::abs(u);
    const double d = 1.0 + 0.001 * (x * x + y * y);
    const double c = std::cos(std::sin(w));
    const double num = c * c - 0.5;
    // d/dw cos^2(sin w) = -sin(2 sin w) cos w, with d|u| = sgn(u) du.
    const double dn = -std::sin(2.0 * std::sin(w)) * std::cos(w) * sgn(u);
    return vec({dn * 2.0 * x / (d * d) - num * 0.004 * x / (d * d * d),
                -dn * 2.0 * y / (d * d) - num * 0.004 * y / (d * d * d)});
  };
  p.known_min = 0.29257863203598055;
  p.known_argmin = vec({0.0, 1.2531318314637332});
  return p;
}

Problem bohachevsky(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return x * x + 2.0 * y * y - 0.3 * std::cos(3.0 * kPi * x) - 0.4 * std::cos(4.0 * kPi * y) + 0.7;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return vec({2.0 * x + 0.9 * kPi * std::sin(3.0 * kPi * x),
                4.0 * y + 1.6 * kPi * std::sin(4.0 * kPi * y)});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({0.0, 0.0});
  return p;
}

Problem three_hump(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double x2 = x * x;
    return 2.0 * x2 - 1.05 * x2 * x2 + x2 * x2 * x2 / 6.0 + x * y + y * y;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double x2 = x * x;
    return vec({4.0 * x - 4.2 * x2 * x + x2 * x2 * x + y, x + 2.0 * y});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({0.0, 0.0});
  return p;
}

Problem six_hump(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double x2 = x * x, y2 = y * y;
    return (4.0 - 2.1 * x2 + x2 * x2 / 3.0) * x2 + x * y + (-4.0 + 4.0 * y2) * y2;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double x2 = x * x;
    return vec({8.0 * x - 8.4 * x2 * x + 2.0 * x2 * x2 * x + y, x - 8.0 * y + 16.0 * y * y * y});
  };
  p.known_min = -1.0316284534898774;
  p.known_argmin = vec({0.089842013100318062, -0.71265640302073963});
  return p;
}

Problem drop_wave(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double r2 = v[0] * v[0] + v[1] * v[1];
    return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
  };
  p.grad = [](const Vector& v) {
    const double r2 = v[0] * v[0] + v[1] * v[1];
    const double r = std::sqrt(r2);
    const double num = 1.0 + std::cos(12.0 * r);
    const double den = 0.5 * r2 + 2.0;
    // sin(12 r) / r -> 12 as r -> 0
    const double sinc = r > 0.0 ? std::sin(12.0 * r) / r : 12.0;
    const double k = (12.0 * sinc * den + num) / (den * den);
    return vec({k * v[0], k * v[1]});
  };
  p.known_min = -1.0;
  p.known_argmin = vec({0.0, 0.0});
  return p;
}

constexpr double kHartA[4][3] = {{3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
constexpr double kHartP[4][3] = {{0.3689, 0.1170, 0.2673},
                                 {0.4699, 0.4387, 0.7470},
                                 {0.1091, 0.8732, 0.5547},
                                 {0.0381, 0.5743, 0.8828}};
constexpr double kHartAlpha[4] = {1.0, 1.2, 3.0, 3.2};

Problem hartmann3(int) {
  Problem p;
  p.f = [](const Vector& x) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      double inner = 0.0;
      for (int j = 0; j < 3; ++j) inner += kHartA[i][j] * (x[j] - kHartP[i][j]) * (x[j] - kHartP[i][j]);
      sum -= kHartAlpha[i] * std::exp(-inner);
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g = Vector::Zero(3);
    for (int i = 0; i < 4; ++i) {
      double inner = 0.0;
      for (int j = 0; j < 3; ++j) inner += kHartA[i][j] * (x[j] - kHartP[i][j]) * (x[j] - kHartP[i][j]);
      const double e = kHartAlpha[i] * std::exp(-inner);
      for (int j = 0; j < 3; ++j) g[j] += e * 2.0 * kHartA[i][j] * (x[j] - kHartP[i][j]);
    }
    return g;
  };
  p.known_min = -3.8627797873326627;
  p.known_argmin = vec({0.11458887665506897, 0.55564889461693005, 0.85254698468667744});
  return p;
}

Problem zettl(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double q = v[0] * v[0] + v[1] * v[1] - 2.0 * v[0];
    return q * q + 0.25 * v[0];
  };
  p.grad = [](const Vector& v) {
    const double q = v[0] * v[0] + v[1] * v[1] - 2.0 * v[0];
    return vec({2.0 * q * (2.0 * v[0] - 2.0) + 0.25, 4.0 * q * v[1]});
  };
  p.known_min = -0.003791237220468898;
  p.known_argmin = vec({-0.029895985050660383, 0.0});
  return p;
}

Problem holder_table(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double r = std::sqrt(x * x + y * y);
    return -std::abs(std::sin(x) * std::cos(y) * std::exp(std::abs(1.0 - r / kPi)));
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double r = std::sqrt(x * x + y * y);
    const double e = std::exp(std::abs(1.0 - r / kPi));
    const double h = std::sin(x) * std::cos(y) * e;
    // d e / d x_k = e * sgn(1 - r/pi) * (-x_k / (pi r))
    const double de = r > 0.0 ? -sgn(1.0 - r / kPi) / (kPi * r) : 0.0;
    const double hx = std::cos(x) * std::cos(y) * e + h * de * x;
    const double hy = -std::sin(x) * std::sin(y) * e + h * de * y;
    return vec({-sgn(h) * hx, -sgn(h) * hy});
  };
  p.known_min = -19.208502567886732;
  p.known_argmin = vec({8.0550234757365634, 9.6645900192412729});
  p.box_constrained_min = true;
  return p;
}

Problem gramacy_lee(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0];
    return std::sin(10.0 * kPi * x) / (2.0 * x) + std::pow(x - 1.0, 4);
  };
  p.grad = [](const Vector& v) {
    const double x = v[0];
    return vec({10.0 * kPi * std::cos(10.0 * kPi * x) / (2.0 * x) -
                std::sin(10.0 * kPi * x) / (2.0 * x * x) + 4.0 * std::pow(x - 1.0, 3)});
  };
  p.known_min = -0.86901113498949977;
  p.known_argmin = vec({0.54856344452760518});
  p.box_constrained_min = true;
  return p;
}

Problem eggholder(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    return -(y + 47.0) * std::sin(std::sqrt(std::abs(y + x / 2.0 + 47.0))) -
           x * std::sin(std::sqrt(std::abs(x - (y + 47.0))));
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double a = y + x / 2.0 + 47.0, b = x - (y + 47.0);
    const double sa = std::sqrt(std::abs(a)), sb = std::sqrt(std::abs(b));
    // d sin(sqrt|u|) / du, taken as 0 on the kink u = 0
    const double da = sa > 0.0 ? std::cos(sa) * sgn(a) / (2.0 * sa) : 0.0;
    const double db = sb > 0.0 ? std::cos(sb) * sgn(b) / (2.0 * sb) : 0.0;
    return vec({-(y + 47.0) * da * 0.5 - std::sin(sb) - x * db,
                -std::sin(sa) - (y + 47.0) * da + x * db});
  };
  p.known_min = -959.6407;
  p.box_constrained_min = true;
  return p;
}

Problem michalewicz(int) {
  constexpr int m = 10;
  Problem p;
  p.f = [](const Vector& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      sum -= std::sin(x[i]) * std::pow(std::sin((i + 1) * x[i] * x[i] / kPi), 2 * m);
    }
    return sum;
  };
  p.grad = [](const Vector& x) {
    Vector g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double arg = (i + 1) * x[i] * x[i] / kPi;
      const double s = std::sin(arg);
      const double s19 = std::pow(s, 2 * m - 1);
      g[i] = -(std::cos(x[i]) * s19 * s +
               std::sin(x[i]) * 2.0 * m * s19 * std::cos(arg) * 2.0 * (i + 1) * x[i] / kPi);
    }
    return g;
  };
  p.known_min = -1.8013034100985525;
  p.known_argmin = vec({2.2029055201726093, kPi / 2.0});
  p.box_constrained_min = true;
  return p;
}

Problem cross_in_tray(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double r = std::sqrt(x * x + y * y);
    const double h = std::sin(x) * std::sin(y) * std::exp(std::abs(100.0 - r / kPi));
    return -1e-4 * std::pow(std::abs(h) + 1.0, 0.1);
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double r = std::sqrt(x * x + y * y);
    const double e = std::exp(std::abs(100.0 - r / kPi));
    const double h = std::sin(x) * std::sin(y) * e;
    const double de = r > 0.0 ? -sgn(100.0 - r / kPi) / (kPi * r) : 0.0;
    const double hx = std::cos(x) * std::sin(y) * e + h * de * x;
    const double hy = std::sin(x) * std::cos(y) * e + h * de * y;
    const double k = -1e-5 * std::pow(std::abs(h) + 1.0, -0.9) * sgn(h);
    return vec({k * hx, k * hy});
  };
  p.known_min = -2.0626118708227369;
  p.known_argmin = vec({1.3494066171539108, 1.3494066171539108});
  p.box_constrained_min = true;
  return p;
}

Problem himmelblau(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double a = v[0] * v[0] + v[1] - 11.0, b = v[0] + v[1] * v[1] - 7.0;
    return a * a + b * b;
  };
  p.grad = [](const Vector& v) {
    const double a = v[0] * v[0] + v[1] - 11.0, b = v[0] + v[1] * v[1] - 7.0;
    return vec({4.0 * v[0] * a + 2.0 * b, 2.0 * a + 4.0 * v[1] * b});
  };
  p.known_min = 0.0;
  p.known_argmin = vec({3.0, 2.0});
  return p;
}

Problem forrester(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0];
    return (6.0 * x - 2.0) * (6.0 * x - 2.0) * std::sin(12.0 * x - 4.0);
  };
  p.grad = [](const Vector& v) {
    const double x = v[0];
    const double a = 6.0 * x - 2.0;
    return vec({12.0 * a * std::sin(12.0 * x - 4.0) + 12.0 * a * a * std::cos(12.0 * x - 4.0)});
  };
  p.known_min = -6.0207400557670828;
  p.known_argmin = vec({0.75724875784185587});
  p.box_constrained_min = true;
  return p;
}

Problem goldstein_price(int) {
  Problem p;
  p.f = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double s = x + y + 1.0, d = 2.0 * x - 3.0 * y;
    const double a = 1.0 + s * s * (19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y);
    const double b =
        30.0 + d * d * (18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y);
    return a * b;
  };
  p.grad = [](const Vector& v) {
    const double x = v[0], y = v[1];
    const double s = x + y + 1.0, d = 2.0 * x - 3.0 * y;
    const double pp = 19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y;
    const double q = 18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y;
    const double a = 1.0 + s * s * pp;
    const double b = 30.0 + d * d * q;
    const double dp = -14.0 + 6.0 * x + 6.0 * y;  // dP/dx == dP/dy
    const double ax = 2.0 * s * pp + s * s * dp;
    const double ay = ax;
    const double bx = 4.0 * d * q + d * d * (-32.0 + 24.0 * x - 36.0 * y);
    const double by = -6.0 * d * q + d * d * (48.0 - 36.0 * x + 54.0 * y);
    return vec({ax * b + a * bx, ay * b + a * by});
  };
  p.known_min = 3.0;
  p.known_argmin = vec({0.0, -1.0});
  return p;
}

// ---------------------------------------------------------------------------
// Registry

struct Entry {
  const char* key;
  const char* name;
  int number;
  int default_dimension;  // native size for fixed problems
  bool scalable;
  int dimension_multiple;
  ProblemScale scale;
  Problem (*build)(int);
};

Problem sphere(int n) {
  return weighted_squares(n, [](int, int) { return 1.0; });
}
Problem sum_squares(int n) {
  return weighted_squares(n, [](int i, int) { return static_cast<double>(i); });
}
Problem rotated_hyper_ellipsoid(int n) {
  return weighted_squares(n, [](int i, int nn) { return static_cast<double>(nn - i + 1); });
}

constexpr int kL = kDefaultLargeDimension;
constexpr ProblemScale kS = ProblemScale::kSmall;
constexpr ProblemScale kLg = ProblemScale::kLarge;

// clang-format off
const Entry kEntries[] = {
    {"molecular-energy", "Molecular Energy", 1, kL, true, 1, kLg, molecular},
    {"ackley", "Ackley", 2, kL, true, 1, kLg, ackley},
    {"levy", "Levy", 3, kL, true, 1, kLg, levy},
    {"schwefel", "Schwefel", 4, kL, true, 1, kLg, schwefel},
    {"rastrigin", "Rastrigin", 5, kL, true, 1, kLg, rastrigin},
    {"styblinski-tang", "Styblinski-Tang", 6, kL, true, 1, kLg, styblinski_tang},
    {"trid", "Trid", 7, kL, true, 1, kLg, trid},
    {"sum-squares", "Sum Squares", 8, kL, true, 1, kLg, sum_squares},
    {"sphere", "Sphere", 9, kL, true, 1, kLg, sphere},
    {"rotated-hyper-ellipsoid", "Rotated Hyper-Ellipsoid", 10, kL, true, 1, kLg, rotated_hyper_ellipsoid},
    {"zakharov", "Zakharov", 11, kL, true, 1, kLg, zakharov},
    {"dixon-price", "Dixon-Price", 12, kL, true, 1, kLg, dixon_price},
    {"rosenbrock", "Rosenbrock", 13, kL, true, 1, kLg, rosenbrock},
    {"powell", "Powell", 14, kL, true, 4, kLg, powell},
    {"raydan-1", "Raydan 1", 17, kL, true, 1, kLg, raydan1},
    {"raydan-2", "Raydan 2", 18, kL, true, 1, kLg, raydan2},
    {"extended-tridiagonal-1", "Extended Tridiagonal 1", 19, kL, true, 2, kLg, extended_tridiagonal1},
    {"extended-psc1", "Extended PSC1", 23, kL, true, 2, kLg, extended_psc1},
    {"diagonal-1", "Diagonal 1", 29, kL, true, 1, kLg, diagonal1},
    {"diagonal-5", "Diagonal 5", 31, kL, true, 1, kLg, diagonal5},
    {"griewank", "Griewank", 35, 10, false, 1, kS, griewank},
    {"levy-n13", "Levy N.13", 36, 2, false, 1, kS, levy13},
    {"hosaki", "Hosaki", 37, 2, false, 1, kS, hosaki},
    {"beale", "Beale", 38, 2, false, 1, kS, beale},
    {"easom", "Easom", 39, 2, false, 1, kS, easom},
    {"branin", "Branin", 41, 2, false, 1, kS, branin},
    {"trecanni", "Trecanni", 42, 2, false, 1, kS, trecanni},
    {"booth", "Booth", 43, 2, false, 1, kS, booth},
    {"matyas", "Matyas", 44, 2, false, 1, kS, matyas},
    {"mccormick", "McCormick", 45, 2, false, 1, kS, mccormick},
    {"colville", "Colville", 47, 4, false, 1, kS, colville},
    {"schaffer-n2", "Schaffer N.2", 48, 2, false, 1, kS, schaffer2},
    {"bohachevsky", "Bohachevsky", 49, 2, false, 1, kS, bohachevsky},
    {"three-hump-camel", "Three-Hump Camel", 50, 2, false, 1, kS, three_hump},
    {"six-hump-camel", "Six-Hump Camel", 51, 2, false, 1, kS, six_hump},
    {"drop-wave", "Drop-Wave", 52, 2, false, 1, kS, drop_wave},
    {"hartmann-3d", "Hartmann 3-D", 54, 3, false, 1, kS, hartmann3},
    {"zettl", "Zettl", 56, 2, false, 1, kS, zettl},
    {"schaffer-n4", "Schaffer N.4", 59, 2, false, 1, kS, schaffer4},
    {"holder-table", "Holder Table", 60, 2, false, 1, kS, holder_table},
    {"gramacy-lee", "Gramacy & Lee", 61, 1, false, 1, kS, gramacy_lee},
    {"eggholder", "Eggholder", 62, 2, false, 1, kS, eggholder},
    {"michalewicz", "Michalewicz", 63, 2, false, 1, kS, michalewicz},
    {"cross-in-tray", "Cross-in-Tray", 65, 2, false, 1, kS, cross_in_tray},
    {"himmelblau", "Himmelblau", 66, 2, false, 1, kS, himmelblau},
    {"forrester", "Forrester", 67, 1, false, 1, kS, forrester},
    {"goldstein-price", "Goldstein-Price", 68, 2, false, 1, kS, goldstein_price},
};
// clang-format on

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

const Entry* find_entry(const std::string& key) {
  for (const Entry& e : kEntries) {
    if (key == e.key) return &e;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> keys() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.emplace_back(e.key);
  return out;
}

std::optional<std::string> resolve_key(const std::string& name) {
  const std::string wanted = lower(name);
  for (const Entry& e : kEntries) {
    if (wanted == e.key || wanted == lower(e.name)) return std::string(e.key);
  }
  return std::nullopt;
}

Problem make(const std::string& key, int dimension) {
  const Entry* entry = find_entry(key);
  if (entry == nullptr) {
    const auto resolved = resolve_key(key);
    if (!resolved) throw std::invalid_argument("unknown problem: " + key);
    entry = find_entry(*resolved);
  }
  const int n = dimension > 0 ? dimension : entry->default_dimension;
  if (!entry->scalable && n != entry->default_dimension) {
    throw std::invalid_argument(std::string(entry->name) + " has fixed dimension " +
                                std::to_string(entry->default_dimension));
  }
  if (n % entry->dimension_multiple != 0) {
    throw std::invalid_argument(std::string(entry->name) + " needs a dimension divisible by " +
                                std::to_string(entry->dimension_multiple));
  }
  if (entry->key == std::string("rosenbrock") && n < 2) {
    throw std::invalid_argument("Rosenbrock needs dimension >= 2");
  }
  Problem p = entry->build(n);
  p.key = entry->key;
  p.name = entry->name;
  p.number = entry->number;
  p.dimension = n;
  p.scalable = entry->scalable;
  p.scale = entry->scale;
  return p;
}

std::vector<Problem> catalog() {
  std::vector<Problem> out;
  for (const Entry& e : kEntries) out.push_back(make(e.key));
  return out;
}

}  // namespace cnmge::problems
