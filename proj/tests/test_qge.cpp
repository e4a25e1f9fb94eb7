#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cnmge/errors.hpp"
#include "cnmge/qge.hpp"

using namespace cnmge;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

Population population_of(const std::vector<Vector>& members) {
  Population p;
  p.members = members;
  p.f_values.assign(members.size(), 0.0);
  return p;
}

Problem double_well() {
  Problem p;
  p.key = "double-well";
  p.dimension = 1;
  p.f = [](const Vector& x) { return 0.25 * (x[0] * x[0] - 1.0) * (x[0] * x[0] - 1.0); };
  p.grad = [](const Vector& x) { return vec({x[0] * x[0] * x[0] - x[0]}); };
  return p;
}

StationaryPointSet seeds_of(const Problem& p, const std::vector<Vector>& points) {
  StationaryPointSet s;
  for (const Vector& x : points) {
    s.points.push_back(x);
    s.f_values.push_back(p.f(x));
    s.residuals.push_back(linalg::inf_norm(p.grad(x)));
    s.origin_start.push_back(0);
  }
  return s;
}

// Minimum of the 1-D Styblinski-Tang term by a grid scan refined by ternary search.
double styblinski_1d_min() {
  const auto g = [](double t) { return 0.5 * (t * t * t * t - 16.0 * t * t + 5.0 * t); };
  double best_t = -5.0;
  for (int i = 0; i <= 100000; ++i) {
    const double t = -5.0 + 1e-4 * i;
    if (g(t) < g(best_t)) best_t = t;
  }
  double lo = best_t - 1e-4, hi = best_t + 1e-4;
  for (int k = 0; k < 200; ++k) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (g(m1) < g(m2)) hi = m2; else lo = m1;
  }
  return g(0.5 * (lo + hi));
}

Problem small_instance(const std::string& key) {
  const Problem probe = problems::make(key);
  return probe.scalable ? problems::make(key, 4) : probe;
}

}  // namespace

TEST_CASE("supplemental_seeds") {
  const auto three = qge::supplemental_seeds(2, 3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == vec({0, 0}));
  CHECK(three[1] == vec({0.1, 0.1}));
  CHECK(three[2] == vec({-0.1, -0.1}));

  const auto one = qge::supplemental_seeds(2, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == vec({0, 0}));

  const auto six = qge::supplemental_seeds(4, 6);
  REQUIRE(six.size() == 6);
  CHECK(six[0] == Vector::Zero(4));
  CHECK(six[1] == Vector::Constant(4, 0.1));
  CHECK(six[2] == Vector::Constant(4, -0.1));
  CHECK(six[3] == vec({0.1, 0.1, -0.1, -0.1}));
  CHECK(six[4] == vec({-0.1, -0.1, 0.1, 0.1}));
  CHECK(six[5] == Vector::Ones(4));

  const auto twenty = qge::supplemental_seeds(2, 20);
  REQUIRE(twenty.size() == 20);
  CHECK(twenty[13] == vec({100, 100}));
  CHECK(twenty[17] == vec({1000, 1000}));
  CHECK(qge::supplemental_seeds(3, 0).empty());
}

TEST_CASE("crossover_generation") {
  const auto pair = qge::crossover_generation(population_of({vec({0, 0}), vec({2, 4})}));
  REQUIRE(pair.size() == 1);
  CHECK(pair[0] == vec({1, 2}));

  const Vector a = vec({1, 0}), b = vec({0, 3}), c = vec({-2, 5});
  const auto abc = qge::crossover_generation(population_of({a, b, c}));
  REQUIRE(abc.size() == 3);
  CHECK(abc[0] == 0.5 * (a + b));
  CHECK(abc[1] == 0.5 * (a + c));
  CHECK(abc[2] == 0.5 * (b + c));

  const auto same = qge::crossover_generation(population_of({a, a}));
  REQUIRE(same.size() == 1);
  CHECK(same[0] == a);

  std::vector<Vector> twenty;
  for (int i = 0; i < 20; ++i) twenty.push_back(vec({static_cast<double>(i)}));
  CHECK(qge::crossover_generation(population_of(twenty)).size() == 190);
  CHECK(qge::crossover_generation(population_of({a})).empty());
}

TEST_CASE("select_best") {
  const ScalarFunction first = [](const Vector& x) { return x[0]; };

  const auto sorted = qge::select_best({vec({3}), vec({1}), vec({2})}, first, 2);
  REQUIRE(sorted.size() == 2);
  CHECK(sorted.f_values == std::vector<double>{1, 2});

  const ScalarFunction flat = [](const Vector&) { return 1.0; };
  const auto tie = qge::select_best({vec({7}), vec({8})}, flat, 1);
  REQUIRE(tie.size() == 1);
  CHECK(tie.members[0] == vec({7}));

  const auto small = qge::select_best({vec({5}), vec({4})}, first, 20);
  CHECK(small.size() == 2);

  const auto dedup = qge::select_best({vec({1}), vec({1 + 1e-13}), vec({2})}, first, 3);
  REQUIRE(dedup.size() == 2);
  CHECK(dedup.members[0] == vec({1}));

  const ScalarFunction log_f = [](const Vector& x) { return std::log(x[0]); };
  const auto finite = qge::select_best({vec({-1}), vec({2}), vec({1})}, log_f, 3);
  REQUIRE(finite.size() == 2);
  CHECK(finite.members[0] == vec({1}));
  CHECK_THROWS_AS(qge::select_best({vec({-1}), vec({-2})}, log_f, 3), NonFiniteError);

  long evals = 0;
  qge::select_best({vec({3}), vec({1}), vec({3})}, first, 2, &evals);
  CHECK(evals == 2);
}

TEST_CASE("evolve on the double well avoids the local maximum") {
  const Problem p = double_well();
  SolverConfig c;
  c.population = 3;
  c.generations = 2;
  const Evolution e = qge::evolve(seeds_of(p, {vec({-1}), vec({0}), vec({1})}), p, c);
  CHECK(std::abs(e.x_ag[0]) == 1.0);
  CHECK(e.f_ag == 0.0);
  CHECK(e.best_per_generation.size() == 3);
}

TEST_CASE("a seed at the global minimizer survives every generation") {
  const Problem p = problems::make("six-hump-camel");
  const Vector best = *p.known_argmin;
  const Evolution e = qge::evolve(seeds_of(p, {best}), p, SolverConfig{});
  CHECK(e.x_ag == best);
  for (double f : e.best_per_generation) CHECK(f == p.f(best));
}

TEST_CASE("population size is min(L, distinct candidates)") {
  const Problem p = double_well();
  SolverConfig c;
  c.supplement = false;
  c.population = 20;
  c.generations = 3;
  // Two seeds: each generation adds only their midpoint and its own midpoints.
  const Evolution e = qge::evolve(seeds_of(p, {vec({-1}), vec({1})}), p, c);
  CHECK(e.final_population.size() <= 20);
  CHECK(e.final_population.size() >= 2);
  for (std::size_t i = 1; i < e.final_population.size(); ++i) {
    CHECK(e.final_population.f_values[i - 1] <= e.final_population.f_values[i]);
  }

  const Evolution full = qge::evolve(seeds_of(p, {vec({-1}), vec({1})}), p, SolverConfig{});
  CHECK(full.final_population.size() == 20);
}

TEST_CASE("generation-best f is non-increasing on every catalog problem") {
  for (const std::string& key : problems::keys()) {
    const Problem p = small_instance(key);
    CAPTURE(key);
    const StationaryPointSet s = cnmdt::enumerate_stationary_points(p);
    const Evolution e = qge::evolve(s, p);
    REQUIRE(e.best_per_generation.size() == 11);
    for (std::size_t g = 1; g < e.best_per_generation.size(); ++g) {
      CHECK(e.best_per_generation[g] <= e.best_per_generation[g - 1]);
    }
    const auto& f = e.final_population.f_values;
    CHECK(std::is_sorted(f.begin(), f.end()));
  }
}

TEST_CASE("cnmge examples") {
  const Problem branin = problems::make("branin");
  CHECK(std::abs(qge::cnmge(branin).f_min - 0.39789) <= 1e-4);

  const Problem camel = problems::make("six-hump-camel");
  CHECK(std::abs(qge::cnmge(camel).f_min - -1.0316) <= 1e-4);

  const Problem st = problems::make("styblinski-tang", 100);
  CHECK(std::abs(qge::cnmge(st).f_min - 100.0 * styblinski_1d_min()) <= 1e-1);
}

TEST_CASE("GlobalResult invariants") {
  for (const char* key : {"himmelblau", "hartmann-3d", "levy-n13", "drop-wave", "beale"}) {
    CAPTURE(key);
    const Problem p = problems::make(key);
    const GlobalResult r = qge::cnmge(p);
    CHECK(r.f_min == std::min(r.f_ag, r.f_cn));
    CHECK(r.f_min == p.f(r.x_min));
    CHECK(r.f_ag == p.f(r.x_ag));
    for (double f : r.stationary.f_values) CHECK(r.f_min <= f);
    if (!r.polish_converged) CHECK(r.x_cn == r.x_ag);
  }
}

TEST_CASE("cnmge is deterministic") {
  for (const char* key : {"griewank", "goldstein-price", "schaffer-n4"}) {
    const Problem p = problems::make(key);
    const GlobalResult a = qge::cnmge(p);
    const GlobalResult b = qge::cnmge(p);
    CHECK(a.x_min == b.x_min);
    CHECK(a.f_min == b.f_min);
    CHECK(a.x_ag == b.x_ag);
    CHECK(a.x_cn == b.x_cn);
    CHECK(a.f_evals == b.f_evals);
    CHECK(a.jac_evals == b.jac_evals);
    CHECK(a.stationary.size() == b.stationary.size());
  }
}

TEST_CASE("cnmge propagates an empty enumeration") {
  Problem p;
  p.name = "slope";
  p.dimension = 1;
  p.f = [](const Vector& x) { return 3.0 * x[0]; };
  p.grad = [](const Vector&) { return vec({3.0}); };
  CHECK_THROWS_AS(qge::cnmge(p), EmptyResultError);
}
