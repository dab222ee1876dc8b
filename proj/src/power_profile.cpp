#include "fracspec/power_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracspec/errors.hpp"

namespace fracspec {

PowerProfile::PowerProfile(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
  canonicalize();
}

PowerProfile::PowerProfile(std::initializer_list<PowerTerm> terms) : terms_(terms) {
  canonicalize();
}

PowerProfile PowerProfile::monomial(double exponent, Complex coefficient) {
  return PowerProfile({PowerTerm{coefficient, exponent}});
}

void PowerProfile::canonicalize() {
  for (const auto& term : terms_) {
    if (!std::isfinite(term.exponent) || term.exponent < 0.0) {
      std::ostringstream msg;
      msg << "power profile: exponent must be finite and >= 0, got " << term.exponent;
      throw ValidationError(msg.str());
    }
    if (!std::isfinite(term.coefficient.real()) || !std::isfinite(term.coefficient.imag())) {
      throw ValidationError("power profile: non-finite coefficient");
    }
  }
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
  std::vector<PowerTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (!merged.empty() && term.exponent - merged.back().exponent <= kExponentMergeTol) {
      merged.back().coefficient += term.coefficient;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [](const PowerTerm& t) { return std::abs(t.coefficient) < kCoefficientDropTol; });
  terms_ = std::move(merged);
}

Complex PowerProfile::operator()(double t) const {
  Complex sum = 0.0;
  for (const auto& term : terms_) sum += term.coefficient * std::pow(t, term.exponent);
  return sum;
}

Complex PowerProfile::coefficient_of(double exponent) const {
  for (const auto& term : terms_) {
    if (std::abs(term.exponent - exponent) <= kExponentMergeTol) return term.coefficient;
  }
  return 0.0;
}

PowerProfile& PowerProfile::operator+=(const PowerProfile& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PowerProfile& PowerProfile::operator*=(Complex scale) {
  for (auto& term : terms_) term.coefficient *= scale;
  canonicalize();
  return *this;
}

bool is_integer_exponent(double p) {
  return std::abs(p - std::round(p)) <= PowerProfile::kExponentMergeTol;
}

PowerProfile derivative_profile(const PowerProfile& profile, int k) {
  if (k < 0) throw DomainError("derivative_profile: order must be >= 0");
  std::vector<PowerTerm> out;
  out.reserve(profile.size());
  for (const auto& term : profile.terms()) {
    const double p = term.exponent;
    if (is_integer_exponent(p)) {
      if (std::lround(p) < k) continue;
    } else if (p < k) {
      std::ostringstream msg;
      msg << "derivative_profile: non-integer exponent " << p << " has an unbounded derivative of order "
          << k << " at t = 0";
      throw UnsupportedExponent(msg.str(), p);
    }
    // Falling factorial p (p-1) ... (p-k+1) == Gamma(p+1)/Gamma(p+1-k).
    double factor = 1.0;
    for (int j = 0; j < k; ++j) factor *= p - j;
    const double exponent = is_integer_exponent(p) ? std::round(p) - k : p - k;
    out.push_back({term.coefficient * factor, exponent});
  }
  return PowerProfile(std::move(out));
}

}  // namespace fracspec
