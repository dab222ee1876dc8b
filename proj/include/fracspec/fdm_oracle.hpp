#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fracspec/pipeline.hpp"

namespace fracspec {

struct FdmGrid {
  int space_steps = 10;  // N_x, h = L / N_x
  int time_steps = 100;  // N_t, tau = T / N_t
};

struct FdmResult {
  double h = 0.0;
  double tau = 0.0;
  std::vector<double> nodes;
  /// values(n, i): level n (t = n tau), node i.
  Eigen::MatrixXd values;

  Eigen::VectorXd final_level() const { return values.row(values.rows() - 1).transpose(); }
};

/// Implicit L1 scheme for D^{alpha(t)} u = a u_xx + f on [0, L] with Dirichlet
/// data, alpha frozen at the current level. Accepts a 1D real problem whose
/// leading order lies in (0, 1] and whose only term is an order-free
/// laplacian on the right.
FdmResult solve_diffusion_l1(const PdeProblem& problem, const FdmGrid& grid);

struct FdmEstimate {
  /// Fine-grid (h/2, tau/2) solution at T on the coarse nodes.
  std::vector<double> nodes;
  Eigen::VectorXd fine;
  /// |fine - coarse| at T, node by node.
  Eigen::VectorXd error_estimate;
};

FdmEstimate richardson_estimate(const PdeProblem& problem, const FdmGrid& coarse);

}  // namespace fracspec
