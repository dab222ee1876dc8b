#include "fracspec/votf_ode.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"

namespace fracspec {

void VotfOdeProblem::validate() const {
  const int m = leading_order.ceiling();
  if (static_cast<int>(initial_values.size()) != m) {
    std::ostringstream msg;
    msg << "votf ode: expected " << m << " initial values for ceiling " << m << ", got "
        << initial_values.size();
    throw ValidationError(msg.str());
  }
  if (!(domain_end > 0.0)) throw ValidationError("votf ode: T must be positive");
  if (!forcing) throw ValidationError("votf ode: missing forcing");
  if (leading_order.domain_end() < domain_end) throw ValidationError("votf ode: leading order not defined up to T");
  for (std::size_t i = 0; i < lower_terms.size(); ++i) {
    if (lower_terms[i].order.ceiling() > m) {
      std::ostringstream msg;
      msg << "votf ode: lower term " << i + 1 << " has ceiling " << lower_terms[i].order.ceiling()
          << " above the leading ceiling " << m;
      throw ValidationError(msg.str());
    }
    if (lower_terms[i].order.domain_end() < domain_end) {
      throw ValidationError("votf ode: lower term " + std::to_string(i + 1) + " order not defined up to T");
    }
    if (!lower_terms[i].coefficient) throw ValidationError("votf ode: lower term without coefficient");
  }
}

LinearSystem assemble_system(const VotfOdeProblem& problem, const MuntzBasis& basis,
                             const CollocationGrid& grid) {
  const int rows = grid.size();
  const int cols = basis.size();
  if (rows < cols) throw DomainError("assemble_system: need at least K collocation points");
  const PowerProfile wbar = homogeneous_part(problem.initial_values);

  LinearSystem system{Eigen::MatrixXcd(rows, cols), Eigen::VectorXcd(rows)};
  for (int j = 0; j < rows; ++j) {
    const double t = grid.points[static_cast<std::size_t>(j)];
    try {
      const Complex reaction = problem.reaction ? (*problem.reaction)(t) : Complex(0.0);
      std::vector<Complex> betas;
      betas.reserve(problem.lower_terms.size());
      for (const auto& term : problem.lower_terms) betas.push_back(term.coefficient(t));

      for (int k = 1; k <= cols; ++k) {
        const double p = basis.exponent(k);
        Complex entry = caputo_power(p, problem.leading_order, t);
        for (std::size_t i = 0; i < betas.size(); ++i) {
          entry -= betas[i] * caputo_power(p, problem.lower_terms[i].order, t);
        }
        entry -= reaction * std::pow(t, p);
        system.matrix(j, k - 1) = entry;
      }

      Complex rhs = problem.forcing(t);
      for (std::size_t i = 0; i < betas.size(); ++i) {
        rhs += betas[i] * caputo_profile(wbar, problem.lower_terms[i].order, t);
      }
      rhs += reaction * wbar(t);
      system.rhs(j) = rhs;
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << e.what() << " [collocation row " << j + 1 << ", t = " << t << "]";
      throw NumericalError(msg.str());
    }
  }
  if (!system.matrix.allFinite() || !system.rhs.allFinite()) {
    throw NumericalError("assemble_system: non-finite collocation entries");
  }
  return system;
}

LeastSquaresResult solve_least_squares(const Eigen::MatrixXcd& matrix, const Eigen::MatrixXcd& rhs) {
  const Eigen::Index cols = matrix.cols();
  Eigen::VectorXd scale(cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    const double norm = matrix.col(k).norm();
    scale(k) = norm > 0.0 ? 1.0 / norm : 1.0;
  }
  const Eigen::MatrixXcd scaled = matrix * scale.asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(scaled);
  qr.setThreshold(static_cast<double>(matrix.rows()) * std::numeric_limits<double>::epsilon());

  LeastSquaresResult result;
  result.rank = static_cast<int>(qr.rank());
  Eigen::MatrixXcd y = qr.solve(rhs);
  result.solution = scale.asDiagonal() * y;
  result.residual_norms = (matrix * result.solution - rhs).colwise().norm().transpose();
  return result;
}

VotfOdeSolution solve_votfode(const VotfOdeProblem& problem, const MuntzBasis& basis,
                              const SolveOptions& options) {
  problem.validate();
  if (basis.alpha0() != problem.leading_order.ceiling()) {
    throw ValidationError("solve_votfode: basis offset must equal the leading ceiling");
  }
  const int count = options.collocation_count > 0 ? options.collocation_count : 2 * basis.size();
  const CollocationGrid grid = gc_points(count, problem.domain_end);
  const LinearSystem system = assemble_system(problem, basis, grid);

  VotfOdeSolution solution{homogeneous_part(problem.initial_values), basis,
                           Eigen::VectorXcd::Zero(basis.size()), 0.0, basis.size(), false};
  if (system.rhs.isZero(0.0)) return solution;

  const LeastSquaresResult fit = solve_least_squares(system.matrix, system.rhs);
  solution.coefficients = fit.solution.col(0);
  solution.residual_norm = fit.residual_norms(0);
  solution.rank = fit.rank;
  solution.ill_conditioned = fit.rank < basis.size();
  if (!solution.coefficients.allFinite()) throw NumericalError("solve_votfode: non-finite coefficients");
  return solution;
}

PowerProfile VotfOdeSolution::as_profile() const {
  std::vector<PowerTerm> terms(homogeneous_poly.terms());
  for (int k = 1; k <= basis.size(); ++k) terms.push_back({coefficients(k - 1), basis.exponent(k)});
  return PowerProfile(std::move(terms));
}

namespace {
void check_time(const VotfOdeSolution& solution, double t) {
  if (t < 0.0 || t > solution.basis.domain_end() * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "eval_solution: t = " << t << " outside [0, " << solution.basis.domain_end() << "]";
    throw DomainError(msg.str());
  }
}
}  // namespace

Complex eval_solution(const VotfOdeSolution& solution, double t) {
  check_time(solution, t);
  Complex value = solution.homogeneous_poly(t);
  for (int k = 1; k <= solution.basis.size(); ++k) {
    value += solution.coefficients(k - 1) * std::pow(t, solution.basis.exponent(k));
  }
  return value;
}

Complex eval_solution_derivative(const VotfOdeSolution& solution, double t, int order) {
  check_time(solution, t);
  return derivative_profile(solution.as_profile(), order)(t);
}

}  // namespace fracspec
