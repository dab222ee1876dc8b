#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fracspec/errors.hpp"
#include "fracspec/gamma.hpp"

using Catch::Matchers::WithinRel;
namespace fs = fracspec;


TEST_CASE("gamma at reference points") {
  // mpmath, 30 digits
  CHECK_THAT(fs::gamma(0.1), WithinRel(9.5135076986687313, 1e-14));
  CHECK_THAT(fs::gamma(0.5), WithinRel(1.772453850905516, 1e-14));
  CHECK_THAT(fs::gamma(1.5), WithinRel(0.88622692545275801, 1e-14));
  CHECK_THAT(fs::gamma(3.3), WithinRel(2.6834373819557683, 1e-14));
  CHECK_THAT(fs::gamma(3.5), WithinRel(3.3233509704478426, 1e-14));
  CHECK_THAT(fs::gamma(10.2), WithinRel(570499.02784103506, 1e-14));
  CHECK_THAT(fs::gamma(170.5), WithinRel(5.5620924145599996e+305, 1e-13));
  CHECK(fs::gamma(1.0) == 1.0);
  CHECK(fs::gamma(5.0) == 24.0);
}

TEST_CASE("gamma recurrence") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(1e-3, 160.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(rng);
    CHECK_THAT(fs::gamma(x + 1.0), WithinRel(x * fs::gamma(x), 1e-13));
  }
}

TEST_CASE("gamma domain and overflow") {
  CHECK_THROWS_AS(fs::gamma(0.0), fracspec::DomainError);
  CHECK_THROWS_AS(fs::gamma(-1.5), fracspec::DomainError);
  CHECK_THROWS_AS(fs::gamma(std::nan("")), fracspec::DomainError);
  CHECK(std::isinf(fs::gamma(175.0)));
}

TEST_CASE("gamma ratio stays finite when both factors overflow") {
  CHECK_THAT(fs::gamma_ratio(3.5, 2.9), WithinRel(1.8186673217954601, 1e-13));
  // Gamma(201)/Gamma(200) = 200
  CHECK_THAT(fs::gamma_ratio(201.0, 200.0), WithinRel(200.0, 1e-10));
}
