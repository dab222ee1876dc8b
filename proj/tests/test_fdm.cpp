#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fracspec/benchmarks.hpp"
#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/fdm_oracle.hpp"

using namespace fracspec;
using std::numbers::pi;

namespace {

PdeProblem diffusion(OrderFunction alpha, SpaceTimeFunction f, SpatialFunction u0, double L = 1.0) {
  PdeTerm lap{std::nullopt, constant_time_function(1.0), {SymbolKind::laplacian}, TermSide::rhs_spatial};
  return PdeProblem{BoxDomain({L}), alpha.domain_end(), alpha, {lap}, std::move(f), {}, {std::move(u0)}, false};
}

double max_error_at_T(const PdeProblem& p, const FdmGrid& g, const std::function<double(double)>& exact) {
  const FdmResult r = solve_diffusion_l1(p, g);
  const Eigen::VectorXd last = r.final_level();
  double e = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) e = std::max(e, std::abs(last(static_cast<Eigen::Index>(i)) - exact(r.nodes[i])));
  return e;
}

}  // namespace

TEST_CASE("discrete maximum principle") {
  OrderFunction alpha([](double t) { return 0.3 + 0.5 * t; }, 1, 1.0);
  auto u0 = [](const Point& x) { return Complex(std::sin(pi * x[0]) + 0.5 * std::sin(3 * pi * x[0]) + 0.6); };
  const PdeProblem p = diffusion(alpha, [](const Point&, double) { return Complex(0.0); }, u0);
  // Dirichlet data 0 at both ends, initial data within [0, max u0].
  const FdmResult r = solve_diffusion_l1(p, FdmGrid{40, 80});
  double hi = 0.0;
  for (double x : r.nodes) hi = std::max(hi, u0({x, 0.0}).real());
  CHECK(r.values.minCoeff() >= -1e-14);
  CHECK(r.values.bottomRows(r.values.rows() - 1).maxCoeff() <= hi + 1e-14);
}

TEST_CASE("zero data gives the zero solution") {
  OrderFunction alpha([](double) { return 0.7; }, 1, 1.0);
  const PdeProblem p = diffusion(alpha, [](const Point&, double) { return Complex(0.0); },
                                 [](const Point&) { return Complex(0.0); });
  CHECK(solve_diffusion_l1(p, FdmGrid{10, 10}).values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("self-convergence under joint refinement") {
  OrderFunction alpha([](double t) { return 0.4 + 0.2 * t; }, 1, 1.0);
  // u = t^2 sin(pi x); the L1 weights are exact on linear-in-time data, so t^2 is needed.
  auto f = [alpha](const Point& x, double t) {
    return Complex(std::sin(pi * x[0]) * (caputo_power(2.0, alpha, t) + pi * pi * t * t));
  };
  const PdeProblem p = diffusion(alpha, f, [](const Point&) { return Complex(0.0); });
  auto exact = [](double x) { return std::sin(pi * x); };
  double previous = 0.0;
  for (int n : {10, 20, 40}) {
    const double e = max_error_at_T(p, FdmGrid{n, n}, exact);
    if (previous > 0.0) {
      INFO("n=" << n << " ratio " << previous / e);
      CHECK(previous / e >= 1.8);
    }
    previous = e;
  }
}

TEST_CASE("Richardson estimate tracks the true error") {
  const ExampleCase c = example2();
  const FdmEstimate est = richardson_estimate(c.problem, FdmGrid{20, 25});
  double truth = 0.0;
  for (std::size_t i = 0; i < est.nodes.size(); ++i) {
    truth = std::max(truth, std::abs(est.fine(static_cast<Eigen::Index>(i)) - c.exact({est.nodes[i], 0.0}, 0.5).real()));
  }
  const double e = est.error_estimate.maxCoeff();
  CHECK(e > 0.0);
  CHECK(truth <= 3.0 * e);
}

TEST_CASE("oracle scope") {
  CHECK_THROWS_AS(solve_diffusion_l1(example6(0).problem, FdmGrid{}), ValidationError);
  CHECK_THROWS_AS(solve_diffusion_l1(example7().problem, FdmGrid{}), ValidationError);
  CHECK_THROWS_AS(solve_diffusion_l1(example2().problem, FdmGrid{1, 10}), ValidationError);
}
