#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fracspec/lift.hpp"
#include "fracspec/order_function.hpp"
#include "fracspec/power_profile.hpp"
#include "fracspec/spectral.hpp"
#include "fracspec/types.hpp"
#include "fracspec/votf_ode.hpp"

namespace fracspec {

/// Which side of the general equation a term is written on:
///
///   D^alpha u + sum_{lhs} a_i D^{alpha_i} u = sum_{rhs} a_i D^{alpha_i} (S_i u) + f.
///
/// A term without an order carries no time derivative (alpha_i == 0).
enum class TermSide { lhs_time, rhs_spatial };

struct PdeTerm {
  std::optional<OrderFunction> order;
  TimeFunction coefficient;
  SpatialSymbol symbol;
  TermSide side = TermSide::lhs_time;

  /// Coefficient once the term is moved to the left-hand side.
  Complex lhs_coefficient(double t) const;
};

/// spatial(x) * profile(t).
struct SeparableTerm {
  SpatialFunction shape;
  PowerProfile profile;
};

/// Boundary data as sums of separable terms. Only Dirichlet values and, for
/// fourth-order problems, laplacian values are supported by the sine basis;
/// Neumann data is carried so that validation can reject it explicitly.
struct BoundaryData {
  std::vector<SeparableTerm> dirichlet;
  std::vector<SeparableTerm> laplacian;
  std::vector<SeparableTerm> neumann;
};

/// Evaluates sum_k shape_k(x) profile_k as a profile at a fixed point.
PowerProfile boundary_datum(const std::vector<SeparableTerm>& data, const Point& x);

struct PdeProblem {
  BoxDomain domain;
  double domain_end = 1.0;
  OrderFunction leading_order;
  std::vector<PdeTerm> terms;
  SpaceTimeFunction forcing;
  BoundaryData boundary;
  /// h_0 .. h_{m-1}.
  std::vector<SpatialFunction> initial;
  bool complex_field = false;

  void validate() const;
};

/// Homogenized problem for v = u - s: forcing Theta and initial data v_i.
class HomogenizedProblem {
 public:
  HomogenizedProblem(PdeProblem problem, LiftFunction lift);

  /// Theta(x, t) = f - D^alpha s - sum_j c_j D^{alpha_j} (S_j s), c_j the lhs coefficients.
  Complex theta(const Point& x, double t) const;
  /// Theta at many points for one t; time factors are evaluated once.
  Eigen::VectorXcd theta_on(const std::vector<Point>& points, double t) const;
  /// v_i(x) = h_i(x) - d^i s / dt^i (x, 0).
  Complex initial(int i, const Point& x) const;

  const PdeProblem& problem() const noexcept { return problem_; }
  const LiftFunction& lift() const noexcept { return lift_; }

 private:
  PdeProblem problem_;
  LiftFunction lift_;
  std::vector<std::vector<PowerProfile>> initial_profiles_;
};

HomogenizedProblem homogenize(const PdeProblem& problem, const LiftFunction& lift);

/// Mode ODE: beta_j = -c_j(t) lambda_j(n) for terms with an order, the rest
/// collected into the reaction; forcing and initial values are sine projections.
VotfOdeProblem mode_problem(const HomogenizedProblem& homogenized, const SineMode& mode, int quadrature_order);

struct PdeSolveOptions {
  int modes_per_dim = 16;
  int basis_size = 5;
  double delta = 0.25;
  /// Gauss-Legendre nodes per dimension; 0 picks max(64, 2N + 32) in 1D and max(32, 2N + 32) in 2D.
  int quadrature_order = 0;
  /// Multiquadric shape parameter for 2D lifts.
  double rbf_shape = 4.0;
  /// Boundary nodes per side for 2D lifts; 0 uses modes_per_dim (N_b = 4 sqrt(N) - 4).
  int rbf_per_side = 0;
  /// 0 uses default_thread_count().
  int threads = 0;
  /// 0 keeps the 2K collocation default.
  int collocation_count = 0;
};

int effective_quadrature_order(const PdeSolveOptions& options, int dim);

struct ModeSolution {
  SineMode mode;
  VotfOdeSolution solution;
};

struct PdeDiagnostics {
  int modes_per_dim = 0;
  int basis_size = 0;
  double delta = 0.0;
  int quadrature_order = 0;
  double max_residual = 0.0;
  int ill_conditioned_modes = 0;
  LiftMetadata lift;
};

class PdeSolution {
 public:
  PdeSolution(BoxDomain domain, double domain_end, LiftFunction lift, std::vector<ModeSolution> modes,
              PdeDiagnostics diagnostics);

  const BoxDomain& domain() const noexcept { return domain_; }
  double domain_end() const noexcept { return domain_end_; }
  const LiftFunction& lift() const noexcept { return lift_; }
  const std::vector<ModeSolution>& modes() const noexcept { return modes_; }
  const PdeDiagnostics& diagnostics() const noexcept { return diagnostics_; }

  /// All mode amplitudes w_n(t), in mode order.
  std::vector<Complex> amplitudes(double t) const;

  /// u at many points for one time (batched sine tables).
  std::vector<Complex> values(const std::vector<Point>& points, double t) const;
  /// du/dx_axis at many points for one time.
  std::vector<Complex> gradients(const std::vector<Point>& points, double t, int axis) const;

 private:
  void check(const Point& x, double t) const;

  BoxDomain domain_;
  double domain_end_;
  LiftFunction lift_;
  std::vector<ModeSolution> modes_;
  PdeDiagnostics diagnostics_;
  int per_dim_ = 0;
};

/// Builds the lift for the problem's boundary data: linear in 1D, multiquadric RBF in 2D.
LiftFunction build_lift(const PdeProblem& problem, const PdeSolveOptions& options);

PdeSolution solve_pde(const PdeProblem& problem, const PdeSolveOptions& options);

Complex eval_pde(const PdeSolution& solution, const Point& x, double t);
Complex eval_pde_gradient(const PdeSolution& solution, const Point& x, double t, int axis);

/// Translation between a box [origin, origin + L] and the solver's [0, L].
struct DomainShift {
  Point origin{};

  Point to_local(const Point& x) const { return {x[0] - origin[0], x[1] - origin[1]}; }
  Point to_global(const Point& y) const { return {y[0] + origin[0], y[1] + origin[1]}; }
  /// y -> f(y + origin).
  SpatialFunction localize(SpatialFunction f) const;
  SpaceTimeFunction localize(SpaceTimeFunction f) const;
};

}  // namespace fracspec
