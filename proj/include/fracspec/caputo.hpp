#pragma once

#include "fracspec/order_function.hpp"
#include "fracspec/power_profile.hpp"

namespace fracspec {

/// Variable-order Caputo derivative of t^p at time t:
///
///   0                                          if p is an integer below m,
///   Gamma(p+1)/Gamma(p+1-alpha(t)) t^(p-alpha(t))  otherwise,
///
/// where m is the ceiling of `order`. Non-integer p <= m - 1 is not covered by
/// the power rule and throws UnsupportedExponent. t must lie in (0, T].
double caputo_power(double p, const OrderFunction& order, double t);

/// Termwise caputo_power; errors name the offending exponent.
Complex caputo_profile(const PowerProfile& profile, const OrderFunction& order, double t);

}  // namespace fracspec
