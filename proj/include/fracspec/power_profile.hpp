#pragma once

#include <initializer_list>
#include <vector>

#include "fracspec/types.hpp"

namespace fracspec {

/// c * t^p with p >= 0.
struct PowerTerm {
  Complex coefficient;
  double exponent = 0.0;
};

/// Finite sum of power terms, kept canonical: exponents strictly increasing,
/// exponents closer than `kExponentMergeTol` merged, coefficients with
/// magnitude below `kCoefficientDropTol` dropped.
///
/// This is the closed-form time dependence on which the variable-order
/// power rule applies termwise.
class PowerProfile {
 public:
  static constexpr double kExponentMergeTol = 1e-12;
  static constexpr double kCoefficientDropTol = 1e-300;

  PowerProfile() = default;
  explicit PowerProfile(std::vector<PowerTerm> terms);
  PowerProfile(std::initializer_list<PowerTerm> terms);

  static PowerProfile monomial(double exponent, Complex coefficient = 1.0);

  const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Complex operator()(double t) const;

  /// Coefficient of t^p (zero if absent).
  Complex coefficient_of(double exponent) const;

  PowerProfile& operator+=(const PowerProfile& other);
  PowerProfile& operator*=(Complex scale);

  friend PowerProfile operator+(PowerProfile a, const PowerProfile& b) { return a += b; }
  friend PowerProfile operator-(PowerProfile a, const PowerProfile& b) {
    return a += PowerProfile(b) *= Complex(-1.0);
  }
  friend PowerProfile operator*(Complex s, PowerProfile a) { return a *= s; }
  friend PowerProfile operator*(PowerProfile a, Complex s) { return a *= s; }

 private:
  void canonicalize();
  std::vector<PowerTerm> terms_;
};

bool is_integer_exponent(double p);

/// k-th classical time derivative, termwise.
/// Integer exponents below k vanish; a non-integer exponent below k throws
/// UnsupportedExponent.
PowerProfile derivative_profile(const PowerProfile& profile, int k);

}  // namespace fracspec
