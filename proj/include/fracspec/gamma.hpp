#pragma once

namespace fracspec {

/// Gamma function for positive real arguments.
///
/// Throws DomainError for x <= 0 or non-finite x. Returns +inf once the
/// result leaves double range (x > ~171.62).
double gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0, stable when either factor overflows.
double gamma_ratio(double a, double b);

}  // namespace fracspec
