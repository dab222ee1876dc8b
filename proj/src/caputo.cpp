#include "fracspec/caputo.hpp"

#include <cmath>
#include <sstream>

#include "fracspec/errors.hpp"
#include "fracspec/gamma.hpp"

namespace fracspec {

namespace {
// Slack for t == T computed as a sum of floating point terms.
constexpr double kDomainEndSlack = 1e-12;
}  // namespace

double caputo_power(double p, const OrderFunction& order, double t) {
  if (!(t > 0.0) || t > order.domain_end() * (1.0 + kDomainEndSlack)) {
    std::ostringstream msg;
    msg << "caputo_power: t = " << t << " outside (0, " << order.domain_end() << "]";
    throw DomainError(msg.str());
  }
  const int m = order.ceiling();
  if (is_integer_exponent(p)) {
    if (std::lround(p) < m) return 0.0;
  } else if (p <= m - 1) {
    std::ostringstream msg;
    msg << "caputo_power: non-integer exponent " << p << " <= m - 1 = " << m - 1
        << " is outside the power rule";
    throw UnsupportedExponent(msg.str(), p);
  }
  const double alpha = order(t);
  return gamma_ratio(p + 1.0, p + 1.0 - alpha) * std::pow(t, p - alpha);
}

Complex caputo_profile(const PowerProfile& profile, const OrderFunction& order, double t) {
  Complex sum = 0.0;
  for (const auto& term : profile.terms()) {
    try {
      sum += term.coefficient * caputo_power(term.exponent, order, t);
    } catch (const UnsupportedExponent&) {
      throw;
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << e.what() << " (profile exponent " << term.exponent << ")";
      throw DomainError(msg.str());
    }
  }
  return sum;
}

}  // namespace fracspec
