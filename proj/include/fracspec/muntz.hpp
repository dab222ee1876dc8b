#pragma once

#include <vector>

#include "fracspec/order_function.hpp"
#include "fracspec/power_profile.hpp"

namespace fracspec {

/// Muntz power basis Phi_k(t) = t^{delta_k}, delta_k = alpha0 + delta (k - 1),
/// k = 1..K, with alpha0 the ceiling of the leading order. Since every
/// delta_k >= m, each Phi_k and its first m - 1 derivatives vanish at t = 0.
class MuntzBasis {
 public:
  MuntzBasis(int size, double delta, int alpha0, double domain_end);

  int size() const noexcept { return static_cast<int>(exponents_.size()); }
  double delta() const noexcept { return delta_; }
  int alpha0() const noexcept { return alpha0_; }
  double domain_end() const noexcept { return domain_end_; }
  /// delta_k for 1-based k.
  double exponent(int k) const;
  const std::vector<double>& exponents() const noexcept { return exponents_; }

 private:
  double delta_;
  int alpha0_;
  double domain_end_;
  std::vector<double> exponents_;
};

/// Gauss-Chebyshev points t_j = T/2 [1 + cos(pi (2j-1) / (2 Nc))], j = 1..Nc,
/// strictly decreasing and strictly inside (0, T).
struct CollocationGrid {
  std::vector<double> points;
  int size() const noexcept { return static_cast<int>(points.size()); }
};

CollocationGrid gc_points(int count, double domain_end);

/// sum_i h_i / i! t^i: the polynomial part annihilated by the leading operator
/// whose i-th derivative at 0 is h_i.
PowerProfile homogeneous_part(const std::vector<Complex>& initial_values);

/// Phi_k(t) = t^{delta_k}.
double phi_k(const MuntzBasis& basis, int k, double t);

/// Caputo image of Phi_k under `order`: Gamma(delta_k+1)/Gamma(delta_k+1-alpha(t)) t^{delta_k-alpha(t)}.
double varphi_k(const MuntzBasis& basis, int k, const OrderFunction& order, double t);

}  // namespace fracspec
