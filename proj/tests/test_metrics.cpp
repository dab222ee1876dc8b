#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fracspec/benchmarks.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/metrics.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fracspec;

TEST_CASE("convergence and approximation orders") {
  CHECK_THAT(co(4e-6, 1e-6), WithinAbs(2.0, 1e-14));
  CHECK_THAT(ao(1e-4, 10), WithinAbs(4.0, 1e-14));
  CHECK(ao(0.0, 5) == kInfiniteOrder);
  CHECK(co(1e-3, 0.0) == kInfiniteOrder);
}

TEST_CASE("reductions on random samples agree with a plain loop") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> dist;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> exact(257), approx(257);
    for (std::size_t i = 0; i < exact.size(); ++i) {
      exact[i] = Complex(dist(rng), trial % 2 ? dist(rng) : 0.0);
      approx[i] = exact[i] + 1e-3 * Complex(dist(rng), dist(rng));
    }
    long double num = 0, den = 0, mx = 0, mr = 0, mi = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const Complex e = exact[i] - approx[i];
      num += std::norm(e);
      den += std::norm(exact[i]);
      mx = std::max<long double>(mx, std::abs(e));
      mr = std::max<long double>(mr, std::abs(e.real()));
      mi = std::max<long double>(mi, std::abs(e.imag()));
    }
    const double ref = static_cast<double>(std::sqrt(num / den));
    CHECK_THAT(relative_l2(exact, approx), WithinRel(ref, 1e-14));
    CHECK_THAT(rerr_squared(exact, approx), WithinRel(ref * ref, 1e-14));
    const MaxError m = max_error(exact, approx);
    CHECK_THAT(m.abs, WithinRel(static_cast<double>(mx), 1e-14));
    CHECK_THAT(m.real, WithinRel(static_cast<double>(mr), 1e-14));
    if (trial % 2) CHECK_THAT(m.imag, WithinRel(static_cast<double>(mi), 1e-14));
  }
  CHECK(relative_l2({1.0, 2.0}, {1.0, 2.0}) == 0.0);
  CHECK_THROWS_AS(relative_l2({0.0, 0.0}, {1.0, 0.0}), DomainError);
}

TEST_CASE("field metrics agree with pointwise evaluation") {
  const ExampleCase c = example4();
  PdeSolveOptions o;
  o.modes_per_dim = 20;
  o.basis_size = 4;
  const PdeSolution sol = solve_pde(c.problem, o);
  const TestGrid grid{closed_points(c.problem.domain, 0.1), uniform_times(1.0, 11)};
  double num = 0, den = 0, mx = 0;
  for (double t : grid.times) {
    for (const Point& x : grid.points) {
      const Complex e = c.exact(x, t);
      const Complex d = e - eval_pde(sol, x, t);
      num += std::norm(d);
      den += std::norm(e);
      if (t == 1.0) mx = std::max(mx, std::abs(d));
    }
  }
  CHECK_THAT(rerr(c.exact, sol, grid), WithinRel(std::sqrt(num / den), 1e-14));
  CHECK_THAT(merr(c.exact, sol, grid.points, 1.0).abs, WithinRel(mx, 1e-14));
  auto zero = [](const Point&, double) { return Complex(0.0); };
  CHECK_THROWS_AS(rerr(zero, sol, grid), DomainError);
}

TEST_CASE("test grids") {
  const BoxDomain d({1.0, 2.0});
  CHECK(interior_points(d, 0.5).size() == 1 * 3);
  CHECK(closed_points(d, 0.5).size() == 3 * 5);
  const auto pts = closed_points(BoxDomain({2.0}), 0.05);
  REQUIRE(pts.size() == 41);
  CHECK(pts.front()[0] == 0.0);
  CHECK(pts.back()[0] == 2.0);
  const auto u = uniform_interior(BoxDomain({1.0}), 3);
  CHECK(u[1][0] == 0.5);
  const auto t = uniform_times(2.0, 5);
  CHECK(t == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
  CHECK_THROWS_AS(interior_points(d, 0.0), ValidationError);
  CHECK_THROWS_AS(interior_points(d, 0.8), ValidationError);
}
