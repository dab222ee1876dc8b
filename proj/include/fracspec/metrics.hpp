#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "fracspec/pipeline.hpp"
#include "fracspec/types.hpp"
#include "fracspec/votf_ode.hpp"

namespace fracspec {

/// Returned by ao/co when an error is exactly zero.
inline constexpr double kInfiniteOrder = std::numeric_limits<double>::infinity();

/// Evaluation grid for error metrics.
struct TestGrid {
  std::vector<Point> points;
  /// Time samples in [0, T] (rerr only).
  std::vector<double> times;
};

/// Interior points of the box spaced `spacing` apart in every dimension.
std::vector<Point> interior_points(const BoxDomain& domain, double spacing = 0.05);
/// Same lattice with the boundary nodes included.
std::vector<Point> closed_points(const BoxDomain& domain, double spacing = 0.05);
/// count uniform interior points per dimension: x_i = i L / (count + 1).
std::vector<Point> uniform_interior(const BoxDomain& domain, int count);
/// count uniform samples of [0, T] including both ends.
std::vector<double> uniform_times(double domain_end, int count = 101);

/// Max abs error split into components (complex fields report both parts).
struct MaxError {
  double abs = 0.0;
  double real = 0.0;
  double imag = 0.0;
};

using ExactField = std::function<Complex(const Point&, double)>;
using ExactTime = std::function<Complex(double)>;

MaxError merr(const ExactField& exact, const PdeSolution& approx, const std::vector<Point>& points, double t);

/// Relative L2 error sqrt(sum |e|^2 / sum |u|^2) over points x times.
double rerr(const ExactField& exact, const PdeSolution& approx, const TestGrid& grid);
/// Same on du/dx_axis.
double rerr_gradient(const ExactField& exact_gradient, const PdeSolution& approx, const TestGrid& grid, int axis);
/// Time-only variant for mode ODE solutions.
double rerr(const ExactTime& exact, const VotfOdeSolution& approx, const std::vector<double>& times);
double merr(const ExactTime& exact, const VotfOdeSolution& approx, const std::vector<double>& times);

/// Core reductions on paired samples, shared by all overloads above.
double rerr_squared(const std::vector<Complex>& exact, const std::vector<Complex>& approx);
double relative_l2(const std::vector<Complex>& exact, const std::vector<Complex>& approx);
MaxError max_error(const std::vector<Complex>& exact, const std::vector<Complex>& approx);

/// log(err) / log(1/K).
double ao(double err, int K);
/// log2(err_half / err_full).
double co(double err_half, double err_full);

}  // namespace fracspec
