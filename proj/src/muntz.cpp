#include "fracspec/muntz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"

namespace fracspec {

MuntzBasis::MuntzBasis(int size, double delta, int alpha0, double domain_end)
    : delta_(delta), alpha0_(alpha0), domain_end_(domain_end) {
  if (size < 1) throw DomainError("muntz basis: K must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("muntz basis: delta must lie in (0, 1]");
  if (alpha0 < 1) throw DomainError("muntz basis: alpha0 must be >= 1");
  if (!(domain_end > 0.0)) throw DomainError("muntz basis: T must be positive");
  exponents_.reserve(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) exponents_.push_back(alpha0 + delta * k);
}

double MuntzBasis::exponent(int k) const {
  if (k < 1 || k > size()) {
    std::ostringstream msg;
    msg << "muntz basis: index " << k << " outside 1.." << size();
    throw DomainError(msg.str());
  }
  return exponents_[static_cast<std::size_t>(k - 1)];
}

CollocationGrid gc_points(int count, double domain_end) {
  if (count < 1) throw DomainError("gc_points: Nc must be >= 1");
  if (!(domain_end > 0.0)) throw DomainError("gc_points: T must be positive");
  CollocationGrid grid;
  grid.points.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) {
    const double angle = std::numbers::pi * (2.0 * j - 1.0) / (2.0 * count);
    grid.points.push_back(0.5 * domain_end * (1.0 + std::cos(angle)));
  }
  return grid;
}

PowerProfile homogeneous_part(const std::vector<Complex>& initial_values) {
  if (initial_values.empty()) throw DomainError("homogeneous_part: need at least one initial value");
  std::vector<PowerTerm> terms;
  double factorial = 1.0;
  for (std::size_t i = 0; i < initial_values.size(); ++i) {
    if (i > 0) factorial *= static_cast<double>(i);
    terms.push_back({initial_values[i] / factorial, static_cast<double>(i)});
  }
  return PowerProfile(std::move(terms));
}

double phi_k(const MuntzBasis& basis, int k, double t) {
  const double p = basis.exponent(k);
  if (t < 0.0 || t > basis.domain_end() * (1.0 + 1e-12)) {
    throw DomainError("phi_k: t outside [0, T]");
  }
  return std::pow(t, p);
}

double varphi_k(const MuntzBasis& basis, int k, const OrderFunction& order, double t) {
  return caputo_power(basis.exponent(k), order, t);
}

}  // namespace fracspec
