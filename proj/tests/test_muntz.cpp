#include <catch_amalgamated.hpp>

#include <cmath>

#include "fracspec/errors.hpp"
#include "fracspec/gamma.hpp"
#include "fracspec/muntz.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fracspec;

TEST_CASE("exponents start at the ceiling") {
  MuntzBasis b(4, 0.25, 2, 1.0);
  REQUIRE(b.size() == 4);
  CHECK(b.exponent(1) == 2.0);
  CHECK(b.exponent(4) == 2.75);
  CHECK_THROWS_AS(b.exponent(0), DomainError);
  CHECK_THROWS_AS(b.exponent(5), DomainError);
  CHECK_THROWS_AS(MuntzBasis(3, 0.0, 1, 1.0), DomainError);
  CHECK_THROWS_AS(MuntzBasis(3, 1.5, 1, 1.0), DomainError);
  CHECK_THROWS_AS(MuntzBasis(0, 0.5, 1, 1.0), DomainError);
}

TEST_CASE("Gauss-Chebyshev points") {
  const auto g = gc_points(2, 1.0);
  REQUIRE(g.size() == 2);
  CHECK_THAT(g.points[0], WithinAbs(0.8535533905932737, 1e-15));
  CHECK_THAT(g.points[1], WithinAbs(0.14644660940672624, 1e-15));
  const auto h = gc_points(17, 3.0);
  for (int j = 0; j < h.size(); ++j) {
    CHECK(h.points[j] > 0.0);
    CHECK(h.points[j] < 3.0);
    if (j > 0) CHECK(h.points[j] < h.points[j - 1]);
  }
  CHECK_THROWS_AS(gc_points(0, 1.0), DomainError);
}

TEST_CASE("homogeneous part carries the initial derivatives") {
  const PowerProfile w = homogeneous_part({1.0, 2.0, 6.0});
  // 1 + 2 t + 3 t^2
  CHECK(w.coefficient_of(0.0) == Complex(1.0));
  CHECK(w.coefficient_of(1.0) == Complex(2.0));
  CHECK(w.coefficient_of(2.0) == Complex(3.0));
  CHECK(homogeneous_part({0.0, 0.0}).empty());
}

TEST_CASE("basis values and Caputo images") {
  MuntzBasis b(3, 0.5, 1, 1.0);
  OrderFunction order([](double t) { return 0.4 + 0.2 * t; }, 1, 1.0);
  const double t = 0.6;
  CHECK_THAT(phi_k(b, 2, t), WithinRel(std::pow(t, 1.5), 1e-15));
  const double a = order(t);
  CHECK_THAT(varphi_k(b, 3, order, t), WithinRel(fracspec::gamma(3.0) / fracspec::gamma(3.0 - a) * std::pow(t, 2.0 - a), 1e-14));
}
