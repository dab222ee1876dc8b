#include "fracspec/fdm_oracle.hpp"

#include <cmath>
#include <sstream>

#include "fracspec/errors.hpp"
#include "fracspec/gamma.hpp"

namespace fracspec {

namespace {

struct Diffusion {
  double a = 0.0;
};

Diffusion check_problem(const PdeProblem& problem) {
  problem.validate();
  if (problem.domain.dim() != 1) throw ValidationError("fdm: only 1D problems are supported");
  if (problem.complex_field) throw ValidationError("fdm: complex fields are not supported");
  if (problem.leading_order.ceiling() != 1) throw ValidationError("fdm: leading order must lie in (0, 1]");
  if (!problem.boundary.laplacian.empty()) throw ValidationError("fdm: laplacian boundary data not supported");
  Diffusion out;
  for (const auto& term : problem.terms) {
    if (term.side != TermSide::rhs_spatial || term.symbol.kind != SymbolKind::laplacian || term.order) {
      throw ValidationError("fdm: only an order-free laplacian term on the right is supported");
    }
    const Complex a = term.coefficient(0.0);
    if (a.imag() != 0.0) throw ValidationError("fdm: diffusion coefficient must be real");
    out.a += a.real();
  }
  return out;
}

}  // namespace

FdmResult solve_diffusion_l1(const PdeProblem& problem, const FdmGrid& grid) {
  const Diffusion diffusion = check_problem(problem);
  if (grid.space_steps < 2 || grid.time_steps < 1) throw ValidationError("fdm: grid needs N_x >= 2 and N_t >= 1");
  const double L = problem.domain.length(0);
  const double T = problem.domain_end;
  const int nx = grid.space_steps;
  const int nt = grid.time_steps;

  FdmResult out;
  out.h = L / nx;
  out.tau = T / nt;
  out.nodes.resize(static_cast<std::size_t>(nx + 1));
  for (int i = 0; i <= nx; ++i) out.nodes[static_cast<std::size_t>(i)] = i * out.h;
  out.values.setZero(nt + 1, nx + 1);

  const auto& initial = problem.initial.front();
  for (int i = 0; i <= nx; ++i) out.values(0, i) = initial({out.nodes[static_cast<std::size_t>(i)], 0.0}).real();

  const PowerProfile left = boundary_datum(problem.boundary.dirichlet, {0.0, 0.0});
  const PowerProfile right = boundary_datum(problem.boundary.dirichlet, {L, 0.0});
  const double r = diffusion.a / (out.h * out.h);

  Eigen::VectorXd lower(nx - 1), diag(nx - 1), upper(nx - 1), rhs(nx - 1);
  std::vector<double> b(static_cast<std::size_t>(nt));
  for (int n = 1; n <= nt; ++n) {
    const double t = n * out.tau;
    const double alpha = problem.leading_order(t);
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      std::ostringstream msg;
      msg << "fdm: order " << alpha << " at t=" << t << " outside (0, 1]";
      throw ValidationError(msg.str());
    }
    const double c = std::pow(out.tau, -alpha) / gamma(2.0 - alpha);
    b[0] = 1.0;  // pow(0, 0) would zero it at alpha == 1
    for (int k = 1; k < n; ++k) {
      b[static_cast<std::size_t>(k)] = std::pow(k + 1.0, 1.0 - alpha) - std::pow(static_cast<double>(k), 1.0 - alpha);
    }
    const double g0 = left(t).real();
    const double gl = right(t).real();
    for (int i = 1; i < nx; ++i) {
      double history = 0.0;
      for (int k = 1; k < n; ++k) history += b[static_cast<std::size_t>(k)] * (out.values(n - k, i) - out.values(n - k - 1, i));
      const int row = i - 1;
      diag(row) = c * b[0] + 2.0 * r;
      lower(row) = -r;
      upper(row) = -r;
      rhs(row) = c * b[0] * out.values(n - 1, i) - c * history +
                 problem.forcing({out.nodes[static_cast<std::size_t>(i)], 0.0}, t).real();
    }
    rhs(0) += r * g0;
    rhs(nx - 2) += r * gl;

    // Thomas elimination.
    for (int row = 1; row < nx - 1; ++row) {
      if (diag(row - 1) == 0.0) throw NumericalError("fdm: zero pivot in tridiagonal solve");
      const double w = lower(row) / diag(row - 1);
      diag(row) -= w * upper(row - 1);
      rhs(row) -= w * rhs(row - 1);
    }
    if (diag(nx - 2) == 0.0) throw NumericalError("fdm: zero pivot in tridiagonal solve");
    out.values(n, nx - 1) = rhs(nx - 2) / diag(nx - 2);
    for (int row = nx - 3; row >= 0; --row) {
      out.values(n, row + 1) = (rhs(row) - upper(row) * out.values(n, row + 2)) / diag(row);
    }
    out.values(n, 0) = g0;
    out.values(n, nx) = gl;
    if (!out.values.row(n).allFinite()) throw NumericalError("fdm: non-finite values");
  }
  return out;
}

FdmEstimate richardson_estimate(const PdeProblem& problem, const FdmGrid& coarse) {
  const FdmResult c = solve_diffusion_l1(problem, coarse);
  const FdmResult f = solve_diffusion_l1(problem, {2 * coarse.space_steps, 2 * coarse.time_steps});
  FdmEstimate out;
  out.nodes = c.nodes;
  const Eigen::VectorXd cf = c.final_level();
  const Eigen::VectorXd ff = f.final_level();
  out.fine.resize(cf.size());
  for (Eigen::Index i = 0; i < cf.size(); ++i) out.fine(i) = ff(2 * i);
  out.error_estimate = (out.fine - cf).cwiseAbs();
  return out;
}

}  // namespace fracspec
