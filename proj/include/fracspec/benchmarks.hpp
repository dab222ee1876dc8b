#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracspec/csv.hpp"
#include "fracspec/fdm_oracle.hpp"
#include "fracspec/metrics.hpp"
#include "fracspec/pipeline.hpp"
#include "fracspec/votf_ode.hpp"

namespace fracspec {

// ---- Example 1: multi-term VO ODE ------------------------------------------

/// w = t^6 + t^4 + t^2 + 1.
PowerProfile example1_exact();

/// Orders and coefficients are evaluated at t * min(1, 1/T), so that the
/// ceiling structure stays valid on long horizons.
VotfOdeProblem example1_problem(double T);

struct OdeReport {
  double rerr = 0.0;
  double merr = 0.0;
  double residual = 0.0;
};

OdeReport example1_run(double T, double delta, int K, int test_times = 101);

// ---- Examples 2-8: PDE cases ------------------------------------------------

/// A benchmark PDE in solver coordinates, with its exact solution.
struct ExampleCase {
  std::string name;
  PdeProblem problem;
  ExactField exact;
  /// du/dx_1; empty when not needed.
  ExactField exact_dx1;
  DomainShift shift;
  /// Default test-grid spacing.
  double test_spacing = 0.05;
};

ExampleCase example2(double T = 0.5);
ExampleCase example3(double T = 1.0);
ExampleCase example4(double T = 1.0);
/// Constant order.
ExampleCase example5(double alpha, double T = 1.0);
/// Variable order: 0 is 4^(t-1), 1 is e^t/3.
ExampleCase example5_variable(int which, double T = 1.0);
/// 0: alpha_1 = 1.6 + sin(t)/5, 1: alpha_1 = 0.6 + cos(t)/5.
ExampleCase example6(int pair, double T = 1.0);
ExampleCase example7(double T = 1.0);
ExampleCase example8(double T = 1.0);

/// Error-grid settings. Without a spacing the case default applies; the
/// lattice includes boundary nodes unless include_boundary is false.
struct TestSettings {
  std::optional<double> spacing;
  bool include_boundary = true;
  int test_times = 101;
};

TestGrid test_grid(const ExampleCase& c, const TestSettings& settings = {});

struct CaseReport {
  MaxError merr;
  double rerr = 0.0;
  double rerr_dx1 = 0.0;
  PdeDiagnostics diagnostics;
};

/// Solves and measures. Rerr is skipped when `with_rerr` is false.
CaseReport run_case(const ExampleCase& c, const PdeSolveOptions& options, const TestSettings& settings = {},
                    bool with_rerr = true);

/// Options for a 2D case where N counts all modes (N = n^2, n per dimension).
PdeSolveOptions options_total_modes(int N, int K, double delta = 0.25);

/// Where the error at T sits: the central quarter [L/4, 3L/4]^d against the
/// frame of test points within `frame` of the boundary.
struct ErrorPattern {
  double max_all = 0.0;
  double max_center = 0.0;
  double max_frame = 0.0;
};

ErrorPattern error_pattern(const ExampleCase& c, const PdeSolution& solution, double spacing = 0.05,
                           double frame = 0.1);

// ---- FDM cross-check ----------------------------------------------------------

struct OracleReport {
  FdmGrid grid;
  /// max |spectral - fine FDM| at T over the interior coarse nodes.
  double discrepancy = 0.0;
  /// max |fine - coarse| at T.
  double estimate = 0.0;
  /// max |fine FDM - exact| at T, for reference.
  double fdm_error = 0.0;
  bool agrees() const { return discrepancy <= 3.0 * estimate; }
};

/// Examples 2 and 3 only.
OracleReport oracle_compare(int id, const PdeSolveOptions& spectral, const FdmGrid& grid);
/// Grid and spectral settings used by `fracspec oracle`.
std::pair<PdeSolveOptions, FdmGrid> oracle_defaults(int id);

// ---- Reproduction tables ------------------------------------------------------

struct Overrides {
  std::optional<int> N;
  std::optional<int> K;
  std::optional<double> delta;
  std::optional<double> T;
  std::optional<int> quad;
  std::optional<double> spacing;
  std::optional<int> test_times;
  int threads = 0;
};

/// Keys: N, K, delta, T, quad, spacing, test_times. Unknown keys throw ValidationError.
Overrides parse_overrides(const std::map<std::string, std::string>& raw);

struct ExampleOutput {
  /// (file name, table).
  std::vector<std::pair<std::string, CsvTable>> tables;
  /// (file name, gnuplot script).
  std::vector<std::pair<std::string, std::string>> scripts;
};

ExampleOutput run_example(int id, const Overrides& overrides = {});
void write_example(const ExampleOutput& output, const std::filesystem::path& dir);

}  // namespace fracspec
