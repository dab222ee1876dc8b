#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fracspec/order_function.hpp"
#include "fracspec/power_profile.hpp"
#include "fracspec/spectral.hpp"
#include "fracspec/types.hpp"

namespace fracspec {

/// 1 - x/L (left) or x/L (right) on [0, L].
struct AffineShape {
  double length = 1.0;
  bool right = false;
};

/// Multiquadric psi(x) = sqrt(|x - center|^2 + c^2) in `dim` dimensions, or
/// lap^k psi for laplacian_power = k.
struct MultiquadricShape {
  Point center{};
  double shape_param = 1.0;
  int dim = 2;
  int laplacian_power = 0;
};

using LiftShape = std::variant<AffineShape, MultiquadricShape>;

double shape_value(const LiftShape& shape, const Point& x);
double shape_gradient(const LiftShape& shape, const Point& x, int axis);
/// Spatial operator of `kind` applied to the shape, evaluated at x.
double shape_apply(const LiftShape& shape, SymbolKind kind, const Point& x);

enum class LiftKind { none, linear_1d, mq_rbf };
const char* to_string(LiftKind kind);

struct LiftMetadata {
  LiftKind kind = LiftKind::none;
  std::vector<Point> centers;
  double shape_param = 0.0;
  /// Largest absolute fit residual over all (condition, exponent) rows.
  double fit_residual = 0.0;
  /// Largest absolute datum coefficient, for relative residuals.
  double data_scale = 0.0;
  int rank = 0;
  bool ill_conditioned = false;
};

/// s(x, t) = sum_i psi_i(x) gamma_i(t) with power-profile time factors.
class LiftFunction {
 public:
  LiftFunction() = default;
  LiftFunction(std::vector<LiftShape> shapes, std::vector<PowerProfile> profiles, LiftMetadata metadata);

  const std::vector<LiftShape>& shapes() const noexcept { return shapes_; }
  const std::vector<PowerProfile>& profiles() const noexcept { return profiles_; }
  const LiftMetadata& metadata() const noexcept { return metadata_; }
  bool is_zero() const noexcept { return shapes_.empty(); }

  Complex value(const Point& x, double t) const;
  Complex gradient(const Point& x, double t, int axis) const;
  /// d^i s / dt^i at t = 0.
  Complex initial_derivative(const Point& x, int order) const;

 private:
  std::vector<LiftShape> shapes_;
  std::vector<PowerProfile> profiles_;
  LiftMetadata metadata_;
};

/// s = g_left + (x / L)(g_right - g_left) on [0, L].
LiftFunction build_linear_lift_1d(const PowerProfile& left, const PowerProfile& right,
                                  const BoxDomain& domain);

enum class ConditionKind { value, laplacian };

/// One boundary condition row: at `point`, the `kind` of s equals `datum`(t).
struct BoundarySample {
  Point point{};
  ConditionKind kind = ConditionKind::value;
  PowerProfile datum;
};

/// Multiquadric lift fitted by least squares, one exponent of the data at a time.
/// With value rows only the basis is psi_i; when laplacian rows are present the
/// basis also carries lap psi_i (Hermite form), so both conditions can be met.
LiftFunction build_rbf_lift(const std::vector<BoundarySample>& samples, const std::vector<Point>& centers,
                            double shape_param, int dim = 2);

/// Boundary nodes of a uniform per_side x per_side grid on a 2D box
/// (4 per_side - 4 points, corners included), counter-clockwise from the origin.
std::vector<Point> boundary_centers(const BoxDomain& domain, int per_side);

/// sum_i [symbol psi_i](x) * D^{alpha(t)} gamma_i(t).
Complex lift_caputo_term(const LiftFunction& lift, const OrderFunction& order, SpatialSymbol symbol,
                         const Point& x, double t);

/// Same without a time derivative: sum_i [symbol psi_i](x) * gamma_i(t).
Complex lift_spatial_term(const LiftFunction& lift, SpatialSymbol symbol, const Point& x, double t);

}  // namespace fracspec
