#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fracspec/quadrature.hpp"
#include "fracspec/types.hpp"

namespace fracspec {

/// Omega = [0, L_1] x ... x [0, L_d], d in {1, 2}.
class BoxDomain {
 public:
  explicit BoxDomain(std::vector<double> lengths);

  int dim() const noexcept { return static_cast<int>(lengths_.size()); }
  double length(int axis) const { return lengths_.at(static_cast<std::size_t>(axis)); }
  const std::vector<double>& lengths() const noexcept { return lengths_; }
  double volume() const;
  /// Closed box membership with a small relative slack.
  bool contains(const Point& x) const;

 private:
  std::vector<double> lengths_;
};

/// prod_i sin(n_i pi x_i / L_i).
struct SineMode {
  std::array<int, 2> index{1, 1};
  int dim = 1;

  friend bool operator==(const SineMode&, const SineMode&) = default;
};

double mode_value(const SineMode& mode, const BoxDomain& domain, const Point& x);
double mode_gradient(const SineMode& mode, const BoxDomain& domain, const Point& x, int axis);

/// Multi-indices with 1 <= n_i <= per_dim in lexicographic order.
std::vector<SineMode> enumerate_modes(const BoxDomain& domain, int per_dim);

/// Scalar multiplier a spatial operator contributes on a sine mode.
enum class SymbolKind { identity, laplacian, bilaplacian };

struct SpatialSymbol {
  SymbolKind kind = SymbolKind::identity;

  /// identity: 1; laplacian: -sum (n_j pi / L_j)^2; bilaplacian: (sum (n_j pi / L_j)^2)^2.
  double eigenvalue(const SineMode& mode, const BoxDomain& domain) const;
};

const char* to_string(SymbolKind kind);

/// (2^d / prod L_i) * integral of f * mode over the box, tensor Gauss-Legendre
/// with `order` nodes per dimension.
Complex project_onto_mode(const SpatialFunction& f, const SineMode& mode, const BoxDomain& domain,
                          int order);

/// Batched projections: samples a field once on the tensor quadrature nodes
/// and projects it on every sine mode up to `per_dim` in each direction.
class SineProjector {
 public:
  SineProjector(const BoxDomain& domain, int per_dim, int order);

  /// Quadrature nodes, x-fastest for 2D (node index = i0 + n0 * i1).
  const std::vector<Point>& nodes() const noexcept { return nodes_; }

  /// Samples f on nodes(); throws NumericalError naming the node on a non-finite sample.
  Eigen::VectorXcd sample(const SpatialFunction& f) const;

  /// Coefficients for all modes, indexed like enumerate_modes(domain, per_dim).
  Eigen::VectorXcd project(const Eigen::VectorXcd& samples) const;

  int per_dim() const noexcept { return per_dim_; }
  int order() const noexcept { return order_; }

 private:
  BoxDomain domain_;
  int per_dim_;
  int order_;
  std::vector<Point> nodes_;
  // (per_dim x order) tables of w_q * sin(n pi x_q / L) * 2 / L per axis.
  std::vector<Eigen::MatrixXd> weighted_sines_;
};

}  // namespace fracspec
