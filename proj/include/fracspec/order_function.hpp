#pragma once

#include <functional>
#include <string>

namespace fracspec {

/// A variable fractional order alpha(t) on [0, T] together with its integer
/// ceiling m, i.e. m - 1 < alpha(t) <= m.
///
/// The ceiling is checked on a uniform grid of `kValidationPoints` samples
/// covering [0, T] (both ends included). Violations strictly between
/// samples are not detected; callers with wildly oscillating orders are
/// responsible for them.
class OrderFunction {
 public:
  using Fn = std::function<double(double)>;

  static constexpr int kValidationPoints = 1024;

  /// Throws ValidationError if the ceiling is < 1 or the grid check fails.
  OrderFunction(Fn fn, int ceiling, double domain_end, std::string label = {});

  /// Ceiling inferred from the largest sampled value.
  static OrderFunction inferred(Fn fn, double domain_end, std::string label = {});

  /// alpha(t) == value. An integer value gives the classical derivative.
  static OrderFunction constant(double value, double domain_end);

  double operator()(double t) const { return fn_(t); }
  int ceiling() const noexcept { return ceiling_; }
  double domain_end() const noexcept { return domain_end_; }
  const std::string& label() const noexcept { return label_; }

  /// Largest value seen on the validation grid.
  double max_sampled() const noexcept { return max_sampled_; }

 private:
  Fn fn_;
  int ceiling_;
  double domain_end_;
  double max_sampled_ = 0.0;
  std::string label_;
};

}  // namespace fracspec
