#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fracspec/errors.hpp"
#include "fracspec/quadrature.hpp"
#include "fracspec/spectral.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fracspec;
using std::numbers::pi;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(6, 0.0, 2.0);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 11);
  CHECK_THAT(s, WithinRel(std::pow(2.0, 12) / 12.0, 1e-14));
}

TEST_CASE("single-mode projection") {
  const BoxDomain unit({1.0});
  auto f = [](const Point& x) { return Complex(10.0 * x[0] * x[0] * (1.0 - x[0])); };
  CHECK_THAT(project_onto_mode(f, SineMode{{1, 1}, 1}, unit, 64).real(), WithinRel(40.0 / (pi * pi * pi), 1e-13));
}

TEST_CASE("sine synthesis and projection round trip") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> dist;
  for (const BoxDomain& domain : {BoxDomain({1.7}), BoxDomain({1.0, 2.5})}) {
    const int per_dim = domain.dim() == 1 ? 40 : 8;
    const auto modes = enumerate_modes(domain, per_dim);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(modes.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = Complex(dist(rng), dist(rng));
    auto f = [&](const Point& x) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < modes.size(); ++i) s += c(static_cast<Eigen::Index>(i)) * mode_value(modes[i], domain, x);
      return s;
    };
    SineProjector proj(domain, per_dim, 2 * per_dim + 32);
    const Eigen::VectorXcd back = proj.project(proj.sample(f));
    INFO("dim " << domain.dim());
    CHECK((back - c).cwiseAbs().maxCoeff() <= 1e-12 * c.cwiseAbs().maxCoeff());
    // The single-mode routine agrees with the batched one.
    CHECK(std::abs(project_onto_mode(f, modes[3], domain, 2 * per_dim + 32) - back(3)) <= 1e-12);
  }
}

TEST_CASE("mode enumeration order") {
  const auto modes = enumerate_modes(BoxDomain({1.0, 1.0}), 3);
  REQUIRE(modes.size() == 9);
  CHECK(modes[0].index == std::array<int, 2>{1, 1});
  CHECK(modes[1].index == std::array<int, 2>{1, 2});
  CHECK(modes[8].index == std::array<int, 2>{3, 3});
}

namespace {

// Fourth-order central Laplacian.
template <class F>
double fd_laplacian(F f, const Point& x, int dim, double h) {
  double s = 0.0;
  for (int a = 0; a < dim; ++a) {
    auto at = [&](double off) {
      Point y = x;
      y[static_cast<std::size_t>(a)] += off;
      return f(y);
    };
    s += (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
  }
  return s;
}

}  // namespace

TEST_CASE("spatial symbols match finite differences") {
  const BoxDomain domain({1.3, 0.8});
  const Point x{0.41, 0.27};
  const double h = 1e-2;
  for (const auto& mode : enumerate_modes(domain, 3)) {
    auto u = [&](const Point& y) { return mode_value(mode, domain, y); };
    const double lap = fd_laplacian(u, x, 2, h);
    const double lam = SpatialSymbol{SymbolKind::laplacian}.eigenvalue(mode, domain);
    CHECK_THAT(lap, WithinRel(lam * u(x), 1e-5));
    const double bilap = fd_laplacian([&](const Point& y) { return fd_laplacian(u, y, 2, h); }, x, 2, h);
    const double mu = SpatialSymbol{SymbolKind::bilaplacian}.eigenvalue(mode, domain);
    CHECK_THAT(bilap, WithinRel(mu * u(x), 1e-5));
    CHECK(SpatialSymbol{SymbolKind::identity}.eigenvalue(mode, domain) == 1.0);
    for (int axis = 0; axis < 2; ++axis) {
      Point a = x, b = x;
      a[static_cast<std::size_t>(axis)] += 1e-6;
      b[static_cast<std::size_t>(axis)] -= 1e-6;
      CHECK_THAT(mode_gradient(mode, domain, x, axis), WithinRel((u(a) - u(b)) / 2e-6, 1e-5));
    }
  }
}

TEST_CASE("box domain") {
  CHECK_THROWS_AS(BoxDomain({}), ValidationError);
  CHECK_THROWS_AS(BoxDomain({1.0, -1.0}), ValidationError);
  CHECK_THROWS_AS(BoxDomain({1.0, 1.0, 1.0}), ValidationError);
  const BoxDomain d({2.0, 3.0});
  CHECK(d.volume() == 6.0);
  CHECK(d.contains({2.0, 0.0}));
  CHECK_FALSE(d.contains({2.1, 0.0}));
}
