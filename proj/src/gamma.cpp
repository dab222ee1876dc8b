#include "fracspec/gamma.hpp"

#include <cmath>
#include <string>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {
void require_positive(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("gamma: argument must be positive and finite, got " +
                      std::to_string(x));
  }
}
}  // namespace

double gamma(double x) {
  require_positive(x);
  return std::tgamma(x);
}

double gamma_ratio(double a, double b) {
  require_positive(a);
  require_positive(b);
  const double ga = std::tgamma(a);
  const double gb = std::tgamma(b);
  if (std::isfinite(ga) && std::isfinite(gb) && gb != 0.0) return ga / gb;
  // Both arguments are positive so Gamma is positive and lgamma is exact in sign.
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

}  // namespace fracspec
