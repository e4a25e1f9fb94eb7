#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cnmge/cnmdt.hpp"
#include "cnmge/errors.hpp"

using namespace cnmge;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// f(x) = ((x - shift)^2 - 1)^2 / 4 with gradient u^3 - u, u = x - shift.
Problem double_well(double shift) {
  Problem p;
  p.key = "double-well";
  p.name = "double well";
  p.dimension = 1;
  p.f = [shift](const Vector& x) {
    const double u = x[0] - shift;
    return 0.25 * (u * u - 1.0) * (u * u - 1.0);
  };
  p.grad = [shift](const Vector& x) {
    const double u = x[0] - shift;
    return vec({u * u * u - u});
  };
  p.hess = [shift](const Vector& x) {
    const double u = x[0] - shift;
    Matrix h(1, 1);
    h(0, 0) = 3.0 * u * u - 1.0;
    return h;
  };
  return p;
}

// Real roots of x^3 + b x^2 + c x + d by the trigonometric method.
std::vector<double> cubic_roots(double b, double c, double d) {
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double phi = std::acos(3.0 * q / (p * r));
  std::vector<double> roots;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(r * std::cos((phi - 2.0 * M_PI * k) / 3.0) - b / 3.0);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void check_invariants(const Problem& p, const StationaryPointSet& s, const SolverConfig& c) {
  REQUIRE(s.points.size() == s.f_values.size());
  REQUIRE(s.points.size() == s.residuals.size());
  REQUIRE(s.points.size() == s.origin_start.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(linalg::inf_norm(p.grad(s.points[i])) <= c.eps);
    CHECK(s.residuals[i] <= c.eps);
    CHECK(s.f_values[i] == p.f(s.points[i]));
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      CHECK(linalg::inf_norm(s.points[i] - s.points[j]) > c.dup_tol);
    }
  }
  const double best = *std::min_element(s.f_values.begin(), s.f_values.end());
  CHECK(s.f_values[s.best_index()] == best);
}

}  // namespace

TEST_CASE("standard_starts") {
  const auto two = cnmdt::standard_starts(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0] == vec({1, 1}));
  CHECK(two[1] == vec({1, -1}));
  CHECK(two[2] == vec({-1, 1}));
  CHECK(two[3] == vec({-1, -1}));

  const auto one = cnmdt::standard_starts(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == vec({1}));
  CHECK(one[1] == vec({-1}));

  const auto four = cnmdt::standard_starts(4);
  REQUIRE(four.size() == 4);
  CHECK(four[1] == vec({1, 1, -1, -1}));
  CHECK(four[2] == vec({-1, -1, 1, 1}));

  const auto three = cnmdt::standard_starts(3);
  REQUIRE(three.size() == 4);
  CHECK(three[1] == vec({1, 1, -1}));
}

TEST_CASE("Sphere has a single stationary point") {
  const Problem p = problems::make("sphere", 4);
  const SolverConfig c;
  const StationaryPointSet s = cnmdt::enumerate_stationary_points(p, c);
  CHECK(s.size() == 1);
  CHECK(linalg::inf_norm(s.points[0]) <= 1e-6);
  check_invariants(p, s, c);
}

TEST_CASE("double well with starts on its roots") {
  // Both n=1 starts (1) and (-1) are roots: each first solve returns its start,
  // and the deflated re-solve from that same start sits on a registered root.
  const Problem p = double_well(0.0);
  const SolverConfig c;
  const StationaryPointSet s = cnmdt::enumerate_stationary_points(p, c);
  REQUIRE(s.size() == 2);
  CHECK(s.points[0][0] == 1.0);
  CHECK(s.points[1][0] == -1.0);
  check_invariants(p, s, c);
}

TEST_CASE("shifted double well: all three stationary points") {
  const double shift = 0.3;
  const Problem p = double_well(shift);
  const SolverConfig c;
  const StationaryPointSet s = cnmdt::enumerate_stationary_points(p, c);
  // x^3 + b x^2 + c x + d with roots shift - 1, shift, shift + 1
  const double b = -3.0 * shift;
  const double cc = 3.0 * shift * shift - 1.0;
  const double d = shift - shift * shift * shift;
  const std::vector<double> expected = cubic_roots(b, cc, d);
  REQUIRE(s.size() == 3);
  std::vector<double> found;
  for (const Vector& x : s.points) found.push_back(x[0]);
  std::sort(found.begin(), found.end());
  for (int i = 0; i < 3; ++i) CHECK(found[i] == doctest::Approx(expected[i]).epsilon(1e-6));
  check_invariants(p, s, c);
  CHECK(s.f_values[s.best_index()] <= 1e-12);
}

TEST_CASE("no stationary point") {
  Problem p;
  p.name = "slope";
  p.dimension = 2;
  p.f = [](const Vector& x) { return x[0] + 2.0 * x[1]; };
  p.grad = [](const Vector&) { return vec({1.0, 2.0}); };
  CHECK_THROWS_AS(cnmdt::enumerate_stationary_points(p), EmptyResultError);
}

TEST_CASE("max_stationary caps the set") {
  const Problem p = problems::make("drop-wave");
  SolverConfig c;
  c.max_stationary = 3;
  const StationaryPointSet s = cnmdt::enumerate_stationary_points(p, c);
  CHECK(s.size() == 3);
}

TEST_CASE("invariants across the small catalog") {
  const SolverConfig c;
  for (const std::string& key : problems::keys()) {
    const Problem probe = problems::make(key);
    const Problem p = probe.scalable ? problems::make(key, 4) : probe;
    CAPTURE(key);
    const StationaryPointSet s = cnmdt::enumerate_stationary_points(p, c);
    CHECK(s.size() >= 1);
    check_invariants(p, s, c);
  }
}

TEST_CASE("enumeration is deterministic") {
  for (const char* key : {"himmelblau", "six-hump-camel", "hartmann-3d", "levy-n13"}) {
    const Problem p = problems::make(key);
    const StationaryPointSet a = cnmdt::enumerate_stationary_points(p);
    const StationaryPointSet b = cnmdt::enumerate_stationary_points(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a.points[i] == b.points[i]);
      CHECK(a.origin_start[i] == b.origin_start[i]);
    }
    CHECK(a.f_evals == b.f_evals);
  }
}

TEST_CASE("deflated roots with a small raw residual are refined on F") {
  // Without refinement the n=100 Styblinski-Tang run ends each start after one
  // point: the deflated solves land on true roots with ||F|| slightly above eps.
  const Problem p = problems::make("styblinski-tang", 100);
  SolverConfig literal;
  literal.refine_tol = literal.eps;
  const StationaryPointSet without = cnmdt::enumerate_stationary_points(p, literal);
  const StationaryPointSet with = cnmdt::enumerate_stationary_points(p);
  CHECK(with.size() > without.size());
  check_invariants(p, with, SolverConfig{});
  // 1-D term (t^4 - 16 t^2 + 5 t) / 2 has derivative 2 (t^3 - 8 t + 1.25).
  double per_dim = INFINITY;
  for (double t : cubic_roots(0.0, -8.0, 1.25)) {
    per_dim = std::min(per_dim, 0.5 * (t * t * t * t - 16.0 * t * t + 5.0 * t));
  }
  const double best = with.f_values[with.best_index()];
  CHECK(best == doctest::Approx(100.0 * per_dim).epsilon(1e-10));
}
