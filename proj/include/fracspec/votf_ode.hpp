#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fracspec/muntz.hpp"
#include "fracspec/order_function.hpp"
#include "fracspec/power_profile.hpp"
#include "fracspec/types.hpp"

namespace fracspec {

/// beta_i(t) D^{alpha_i(t)} w on the right-hand side.
struct LowerTerm {
  OrderFunction order;
  TimeFunction coefficient;
};

/// Multi-term variable-order fractional ODE on [0, T]:
///
///   D^{alpha(t)} w = sum_i beta_i(t) D^{alpha_i(t)} w + beta_0(t) w + theta(t),
///   w^{(i)}(0) = h_i,  i = 0..m-1.
struct VotfOdeProblem {
  OrderFunction leading_order;
  std::vector<LowerTerm> lower_terms;
  std::optional<TimeFunction> reaction;
  TimeFunction forcing;
  std::vector<Complex> initial_values;
  double domain_end = 1.0;

  /// Throws ValidationError on inconsistent data.
  void validate() const;
};

struct LinearSystem {
  Eigen::MatrixXcd matrix;
  Eigen::VectorXcd rhs;
};

/// Collocation rows of the substituted equation: column k holds the image of
/// Phi_k under D^alpha - sum beta_i D^{alpha_i} - beta_0, the right-hand side
/// holds theta + sum beta_i D^{alpha_i} wbar + beta_0 wbar.
LinearSystem assemble_system(const VotfOdeProblem& problem, const MuntzBasis& basis,
                             const CollocationGrid& grid);

struct SolveOptions {
  /// Collocation count; 0 selects 2K.
  int collocation_count = 0;
};

/// w(t) = wbar(t) + sum_k q_k t^{delta_k}.
struct VotfOdeSolution {
  PowerProfile homogeneous_poly;
  MuntzBasis basis;
  Eigen::VectorXcd coefficients;
  double residual_norm = 0.0;
  int rank = 0;
  /// Numerical rank below K: the least-squares fit dropped directions.
  bool ill_conditioned = false;

  /// The whole solution as a power profile.
  PowerProfile as_profile() const;
};

VotfOdeSolution solve_votfode(const VotfOdeProblem& problem, const MuntzBasis& basis,
                              const SolveOptions& options = {});

/// Solution value; t must lie in [0, T].
Complex eval_solution(const VotfOdeSolution& solution, double t);

/// i-th classical derivative, termwise.
Complex eval_solution_derivative(const VotfOdeSolution& solution, double t, int order);

/// Least squares min ||A x - b|| via column-pivoted Householder QR on the
/// column-equilibrated matrix. Rank threshold: rows * eps relative to the
/// largest pivot. Shared by the collocation and RBF fits.
struct LeastSquaresResult {
  Eigen::MatrixXcd solution;
  Eigen::VectorXd residual_norms;
  int rank = 0;
};
LeastSquaresResult solve_least_squares(const Eigen::MatrixXcd& matrix, const Eigen::MatrixXcd& rhs);

}  // namespace fracspec
