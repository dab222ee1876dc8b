#include "fracspec/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/gamma.hpp"
#include "fracspec/muntz.hpp"

namespace fracspec {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// D^a t^p for a non-annihilated power, with the t = 0 limit.
double caputo_tp(double p, double a, double t) {
  if (t == 0.0) return p > a ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  return gamma_ratio(p + 1.0, p + 1.0 - a) * std::pow(t, p - a);
}

TimeFunction constant(Complex c) { return constant_time_function(c); }

PdeTerm lhs_time_term(OrderFunction order) {
  return PdeTerm{std::move(order), constant(1.0), SpatialSymbol{SymbolKind::identity}, TermSide::lhs_time};
}

PdeTerm spatial_term(SymbolKind kind, Complex a) {
  return PdeTerm{std::nullopt, constant(a), SpatialSymbol{kind}, TermSide::rhs_spatial};
}

SpatialFunction zero_field() {
  return [](const Point&) { return Complex(0.0); };
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

// ---- Example 1 ----------------------------------------------------------------

PowerProfile example1_exact() {
  return PowerProfile({{1.0, 6.0}, {1.0, 4.0}, {1.0, 2.0}, {1.0, 0.0}});
}

VotfOdeProblem example1_problem(double T) {
  if (!(T > 0.0)) throw ValidationError("example 1: T must be positive");
  const double s = std::min(1.0, 1.0 / T);
  OrderFunction alpha([s](double t) { return 3.2 + 0.5 * std::sin(s * t); }, 4, T, "3.2+0.5sin(t)");
  std::vector<LowerTerm> lower{
      {OrderFunction([s](double t) { return 0.1 + 0.5 * std::sin(s * t); }, 1, T, "0.1+0.5sin(t)"),
       [s](double t) { return Complex(-std::sin(s * t)); }},
      {OrderFunction([s](double t) { return 1.0 + std::cos(s * t); }, 2, T, "1+cos(t)"),
       [s](double t) { return Complex(-std::cos(s * t)); }},
      {OrderFunction([s](double t) { return 2.0 + 0.1 * std::exp(s * t); }, 3, T, "2+0.1exp(t)"),
       [s](double t) { return Complex(-std::exp(-s * t)); }},
  };
  TimeFunction reaction = [s](double t) { return Complex(1.0 + s * t * s * t); };

  const PowerProfile exact = example1_exact();
  TimeFunction forcing = [alpha, lower, reaction, exact](double t) {
    Complex value = caputo_profile(exact, alpha, t);
    for (const auto& term : lower) value -= term.coefficient(t) * caputo_profile(exact, term.order, t);
    return value - reaction(t) * exact(t);
  };
  return VotfOdeProblem{alpha, lower, reaction, forcing, {1.0, 0.0, 2.0, 0.0}, T};
}

OdeReport example1_run(double T, double delta, int K, int test_times) {
  const VotfOdeProblem problem = example1_problem(T);
  const MuntzBasis basis(K, delta, 4, T);
  const VotfOdeSolution sol = solve_votfode(problem, basis);
  const PowerProfile exact = example1_exact();
  const auto times = uniform_times(T, test_times);
  auto ref = [&exact](double t) { return exact(t); };
  return OdeReport{rerr(ref, sol, times), merr(ref, sol, times), sol.residual_norm};
}

// ---- PDE examples ---------------------------------------------------------------

ExampleCase example2(double T) {
  constexpr double L = 10.0;
  constexpr double a = 0.01;
  OrderFunction alpha([T](double t) { return 0.8 + 0.2 * t / T; }, 1, T, "0.8+0.2t/T");
  ExampleCase c{"example2", PdeProblem{BoxDomain({L}), T, alpha, {spatial_term(SymbolKind::laplacian, a)}, {}, {}, {zero_field()}, false}, {}, {}, {}};
  c.problem.forcing = [alpha](const Point& x, double t) {
    const double time = caputo_tp(2.0, alpha(t), t) + a * kPi * kPi * t * t / (L * L);
    return Complex(time * std::sin(kPi * x[0] / L));
  };
  c.exact = [](const Point& x, double t) { return Complex(t * t * std::sin(kPi * x[0] / L)); };
  return c;
}

ExampleCase example3(double T) {
  OrderFunction alpha([](double t) { return (2.0 + std::sin(t)) / 4.0; }, 1, T, "(2+sin(t))/4");
  ExampleCase c{"example3", PdeProblem{BoxDomain({1.0}), T, alpha, {spatial_term(SymbolKind::laplacian, 1.0)}, {}, {},
                                       {[](const Point& x) { return Complex(10.0 * x[0] * x[0] * (1.0 - x[0])); }}, false},
                {}, {}, {}};
  c.problem.forcing = [alpha](const Point& p, double t) {
    const double x = p[0];
    const double a = alpha(t);
    // D^a (t+1)^2 = D^a t^2 + 2 D^a t.
    const double time = t == 0.0 ? 0.0 : std::pow(t, 2.0 - a) / gamma(3.0 - a) + std::pow(t, 1.0 - a) / gamma(2.0 - a);
    return Complex(20.0 * x * x * (1.0 - x) * time - 20.0 * (t + 1.0) * (t + 1.0) * (1.0 - 3.0 * x));
  };
  c.exact = [](const Point& p, double t) {
    const double x = p[0];
    return Complex(10.0 * x * x * (1.0 - x) * (t + 1.0) * (t + 1.0));
  };
  return c;
}

ExampleCase example4(double T) {
  auto sech = [](double z) { return 1.0 / std::cosh(z); };
  auto g = [sech](double x) { return sech(x - 0.1) + sech(x + 0.1); };
  // sech'' = sech - 2 sech^3.
  auto g2 = [sech](double x) {
    double out = 0.0;
    for (double z : {x - 0.1, x + 0.1}) out += sech(z) - 2.0 * std::pow(sech(z), 3);
    return out;
  };
  OrderFunction alpha([](double t) { return 1.25 + t * t / 20.0; }, 2, T, "1.25+t^2/20");
  std::vector<OrderFunction> lower{
      OrderFunction([](double t) { return 1.2 + std::cos(t) / 20.0; }, 2, T, "1.2+cos(t)/20"),
      OrderFunction([](double t) { return 1.15 + t / 20.0; }, 2, T, "1.15+t/20"),
      OrderFunction([](double t) { return 1.1 + std::sin(t) / 20.0; }, 2, T, "1.1+sin(t)/20"),
  };
  const DomainShift shift{{-1.0, 0.0}};
  ExampleCase c{"example4", PdeProblem{BoxDomain({2.0}), T, alpha, {}, {}, {}, {zero_field(), zero_field()}, false}, {}, {}, shift};
  for (const auto& o : lower) c.problem.terms.push_back(lhs_time_term(o));
  c.problem.terms.push_back(spatial_term(SymbolKind::laplacian, 1.0));
  c.problem.forcing = shift.localize(SpaceTimeFunction([=](const Point& x, double t) {
    double time = caputo_tp(2.0, alpha(t), t);
    for (const auto& o : lower) time += caputo_tp(2.0, o(t), t);
    return Complex(g(x[0]) * time - t * t * g2(x[0]));
  }));
  c.problem.boundary.dirichlet.push_back(
      {shift.localize(SpatialFunction([g](const Point& x) { return Complex(g(x[0])); })), PowerProfile::monomial(2.0)});
  c.exact = shift.localize(SpaceTimeFunction([g](const Point& x, double t) { return Complex(g(x[0]) * t * t); }));
  return c;
}

namespace {

ExampleCase example5_with(OrderFunction alpha, std::string name, double T) {
  ExampleCase c{std::move(name), PdeProblem{BoxDomain({2.0 * kPi}), T, alpha, {spatial_term(SymbolKind::laplacian, kI)}, {}, {}, {zero_field()}, true}, {}, {}, {}};
  // i D^a u + u_xx = f  <=>  D^a u = i u_xx - i f.
  c.problem.forcing = [alpha](const Point& p, double t) {
    const double x = p[0];
    const double d = caputo_tp(2.0, alpha(t), t);
    const Complex f(-d * std::sin(x) - t * t * std::cos(x), d * std::cos(x) - t * t * std::sin(x));
    return -kI * f;
  };
  c.problem.boundary.dirichlet.push_back({[](const Point&) { return Complex(1.0); }, PowerProfile::monomial(2.0)});
  c.exact = [](const Point& p, double t) { return t * t * std::exp(kI * p[0]); };
  c.test_spacing = 2.0 * kPi / 20.0;
  return c;
}

}  // namespace

ExampleCase example5(double alpha, double T) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("example 5: constant order must lie in (0, 1]");
  return example5_with(OrderFunction([alpha](double) { return alpha; }, 1, T, fmt_g(alpha)), "example5", T);
}

ExampleCase example5_variable(int which, double T) {
  if (which == 0) {
    return example5_with(OrderFunction([](double t) { return std::pow(4.0, t - 1.0); }, 1, T, "4^(t-1)"), "example5", T);
  }
  if (which == 1) {
    return example5_with(OrderFunction([](double t) { return std::exp(t) / 3.0; }, 1, T, "exp(t)/3"), "example5", T);
  }
  throw ValidationError("example 5: variable order index must be 0 or 1");
}

ExampleCase example6(int pair, double T) {
  if (pair != 0 && pair != 1) throw ValidationError("example 6: order pair must be 0 or 1");
  auto g = [](double x) { return std::exp(-100.0 * (x - 0.2) * (x - 0.2)); };
  auto g2 = [g](double x) { return (40000.0 * (x - 0.2) * (x - 0.2) - 200.0) * g(x); };
  OrderFunction alpha([](double t) { return 1.9 + t / 20.0; }, 2, T, "1.9+t/20");
  OrderFunction alpha1 = pair == 0
      ? OrderFunction([](double t) { return 1.6 + std::sin(t) / 5.0; }, 2, T, "1.6+sin(t)/5")
      : OrderFunction([](double t) { return 0.6 + std::cos(t) / 5.0; }, 1, T, "0.6+cos(t)/5");
  ExampleCase c{"example6", PdeProblem{BoxDomain({1.0}), T, alpha, {lhs_time_term(alpha1), spatial_term(SymbolKind::laplacian, 1.0)}, {}, {}, {zero_field(), zero_field()}, false}, {}, {}, {}};
  c.problem.forcing = [=](const Point& x, double t) {
    const double time = caputo_tp(2.0, alpha(t), t) + caputo_tp(2.0, alpha1(t), t);
    return Complex(g(x[0]) * time - t * t * g2(x[0]));
  };
  c.problem.boundary.dirichlet.push_back({[g](const Point& x) { return Complex(g(x[0])); }, PowerProfile::monomial(2.0)});
  c.exact = [g](const Point& x, double t) { return Complex(g(x[0]) * t * t); };
  return c;
}

ExampleCase example7(double T) {
  OrderFunction alpha([](double t) { return 1.85 + std::sin(t) / 20.0; }, 2, T, "1.85+sin(t)/20");
  ExampleCase c{"example7", PdeProblem{BoxDomain({1.0, 1.0}), T, alpha,
                                       {lhs_time_term(OrderFunction::constant(1.0, T)), spatial_term(SymbolKind::laplacian, 1.0)},
                                       {}, {}, {zero_field(), zero_field()}, false},
                {}, {}, {}};
  c.problem.forcing = [alpha](const Point& x, double t) {
    const double time = caputo_tp(3.0, alpha(t), t) + 3.0 * t * t - 2.0 * t * t * t;
    return Complex(time * std::exp(x[0] + x[1]));
  };
  c.problem.boundary.dirichlet.push_back(
      {[](const Point& x) { return Complex(std::exp(x[0] + x[1])); }, PowerProfile::monomial(3.0)});
  c.exact = [](const Point& x, double t) { return Complex(t * t * t * std::exp(x[0] + x[1])); };
  c.exact_dx1 = c.exact;
  return c;
}

ExampleCase example8(double T) {
  constexpr double p = 4.5;
  OrderFunction alpha([](double t) { return 1.4 + t / 10.0; }, 2, T, "1.4+t/10");
  auto e = [](const Point& x) { return std::exp(x[0] + x[1]); };
  ExampleCase c{"example8", PdeProblem{BoxDomain({1.0, 1.0}), T, alpha, {spatial_term(SymbolKind::bilaplacian, -1.0)}, {}, {},
                                       {zero_field(), [e](const Point& x) { return Complex(e(x)); }}, false},
                {}, {}, {}};
  // D^a u + lap^2 u = f, and D^a t vanishes for a > 1.
  c.problem.forcing = [alpha, e](const Point& x, double t) {
    const double time = caputo_tp(p, alpha(t), t) + 4.0 * std::pow(t, p) + 4.0 * t;
    return Complex(e(x) * time);
  };
  const PowerProfile profile({{1.0, p}, {1.0, 1.0}});
  c.problem.boundary.dirichlet.push_back({[e](const Point& x) { return Complex(e(x)); }, profile});
  c.problem.boundary.laplacian.push_back({[e](const Point& x) { return Complex(2.0 * e(x)); }, profile});
  c.exact = [e](const Point& x, double t) { return Complex(e(x) * (std::pow(t, p) + t)); };
  return c;
}

TestGrid test_grid(const ExampleCase& c, const TestSettings& settings) {
  const double h = settings.spacing.value_or(c.test_spacing);
  return TestGrid{settings.include_boundary ? closed_points(c.problem.domain, h) : interior_points(c.problem.domain, h),
                  uniform_times(c.problem.domain_end, settings.test_times)};
}

CaseReport run_case(const ExampleCase& c, const PdeSolveOptions& options, const TestSettings& settings,
                    bool with_rerr) {
  const PdeSolution sol = solve_pde(c.problem, options);
  CaseReport out;
  out.diagnostics = sol.diagnostics();
  const TestGrid grid = test_grid(c, settings);
  out.merr = merr(c.exact, sol, grid.points, c.problem.domain_end);
  if (with_rerr) {
    out.rerr = rerr(c.exact, sol, grid);
    if (c.exact_dx1) out.rerr_dx1 = rerr_gradient(c.exact_dx1, sol, grid, 0);
  }
  return out;
}

PdeSolveOptions options_total_modes(int N, int K, double delta) {
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(N))));
  if (N < 4 || n * n != N) throw ValidationError("2D examples need N = n^2 total modes with n >= 2, got " + std::to_string(N));
  PdeSolveOptions o;
  o.modes_per_dim = n;
  o.basis_size = K;
  o.delta = delta;
  return o;
}

ErrorPattern error_pattern(const ExampleCase& c, const PdeSolution& solution, double spacing, double frame) {
  const auto& domain = c.problem.domain;
  const double T = c.problem.domain_end;
  const auto points = interior_points(domain, spacing);
  const auto values = solution.values(points, T);
  ErrorPattern out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double err = std::abs(values[i] - c.exact(points[i], T));
    out.max_all = std::max(out.max_all, err);
    bool center = true, near_edge = false;
    for (int d = 0; d < domain.dim(); ++d) {
      const double x = points[i][static_cast<std::size_t>(d)];
      const double L = domain.length(d);
      if (x < 0.25 * L - 1e-12 || x > 0.75 * L + 1e-12) center = false;
      if (std::min(x, L - x) <= frame + 1e-12) near_edge = true;
    }
    if (center) out.max_center = std::max(out.max_center, err);
    if (near_edge) out.max_frame = std::max(out.max_frame, err);
  }
  return out;
}

// ---- FDM cross-check ------------------------------------------------------------------

std::pair<PdeSolveOptions, FdmGrid> oracle_defaults(int id) {
  PdeSolveOptions o;
  o.basis_size = 5;
  if (id == 2) {
    o.modes_per_dim = 8;
    return {o, FdmGrid{100, 50}};  // h = 0.1, tau = 0.01 at T = 0.5
  }
  if (id == 3) {
    o.modes_per_dim = 200;
    return {o, FdmGrid{20, 40}};
  }
  throw ValidationError("oracle: only examples 2 and 3 are single-term diffusion problems");
}

OracleReport oracle_compare(int id, const PdeSolveOptions& spectral, const FdmGrid& grid) {
  ExampleCase c = id == 2 ? example2(0.5) : id == 3 ? example3(1.0) : throw ValidationError("oracle: examples 2 and 3 only");
  const double T = c.problem.domain_end;
  const PdeSolution sol = solve_pde(c.problem, spectral);
  const FdmEstimate est = richardson_estimate(c.problem, grid);
  OracleReport out;
  out.grid = grid;
  std::vector<Point> nodes;
  for (std::size_t i = 1; i + 1 < est.nodes.size(); ++i) nodes.push_back({est.nodes[i], 0.0});
  const auto values = sol.values(nodes, T);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k + 1);
    out.discrepancy = std::max(out.discrepancy, std::abs(values[k].real() - est.fine(i)));
    out.estimate = std::max(out.estimate, est.error_estimate(i));
    out.fdm_error = std::max(out.fdm_error, std::abs(est.fine(i) - c.exact(nodes[k], T).real()));
  }
  return out;
}

// ---- Reproduction tables ----------------------------------------------------------------

Overrides parse_overrides(const std::map<std::string, std::string>& raw) {
  Overrides o;
  for (const auto& [key, value] : raw) {
    std::size_t used = 0;
    try {
      if (key == "N") o.N = std::stoi(value, &used);
      else if (key == "K") o.K = std::stoi(value, &used);
      else if (key == "delta") o.delta = std::stod(value, &used);
      else if (key == "T") o.T = std::stod(value, &used);
      else if (key == "quad") o.quad = std::stoi(value, &used);
      else if (key == "spacing") o.spacing = std::stod(value, &used);
      else if (key == "test_times") o.test_times = std::stoi(value, &used);
      else throw ValidationError("unknown override '" + key + "' (valid: N, K, delta, T, quad, spacing, test_times)");
    } catch (const std::logic_error&) {
      throw ValidationError("override " + key + ": cannot parse '" + value + "'");
    }
    if (used != value.size()) throw ValidationError("override " + key + ": trailing characters in '" + value + "'");
  }
  if (o.N && *o.N < 1) throw ValidationError("override N must be >= 1");
  if (o.K && *o.K < 1) throw ValidationError("override K must be >= 1");
  if (o.delta && !(*o.delta > 0.0 && *o.delta <= 1.0)) throw ValidationError("override delta must lie in (0, 1]");
  if (o.T && !(*o.T > 0.0)) throw ValidationError("override T must be positive");
  if (o.quad && *o.quad < 1) throw ValidationError("override quad must be >= 1");
  if (o.spacing && !(*o.spacing > 0.0)) throw ValidationError("override spacing must be positive");
  if (o.test_times && *o.test_times < 2) throw ValidationError("override test_times must be >= 2");
  return o;
}

namespace {

template <class T>
std::vector<T> pick(const std::optional<T>& override, std::vector<T> defaults) {
  return override ? std::vector<T>{*override} : defaults;
}

PdeSolveOptions solve_options(const Overrides& o, int N, int K, double delta) {
  PdeSolveOptions opts;
  opts.modes_per_dim = N;
  opts.basis_size = K;
  opts.delta = delta;
  opts.quadrature_order = o.quad.value_or(0);
  opts.threads = o.threads;
  return opts;
}

TestSettings test_settings(const Overrides& o) {
  TestSettings s;
  s.spacing = o.spacing;
  if (o.test_times) s.test_times = *o.test_times;
  return s;
}

std::optional<double> co_against(const std::vector<std::pair<int, double>>& done, int N, double err) {
  for (const auto& [n, e] : done) {
    if (2 * n == N) return co(e, err);
  }
  return std::nullopt;
}

std::string delta_tag(double d) { return "delta=" + fmt_g(d); }

ExampleOutput run1(const Overrides& o) {
  ExampleOutput out;
  const auto deltas = pick(o.delta, {0.1, 0.25, 0.5});
  std::vector<int> Ks = o.K ? std::vector<int>{*o.K} : std::vector<int>{3, 4, 5, 6, 7, 8, 9};
  const int kt = o.test_times.value_or(101);
  for (double T : pick(o.T, {0.01, 1.0, 100.0})) {
    CsvTable table;
    table.header = {"K"};
    for (double d : deltas) {
      table.header.push_back("Rerr(" + delta_tag(d) + ")");
      table.header.push_back("AO(" + delta_tag(d) + ")");
    }
    for (int K : Ks) {
      std::vector<std::string> row{std::to_string(K)};
      for (double d : deltas) {
        const double e = example1_run(T, d, K, kt).rerr;
        row.push_back(format_sci(e));
        row.push_back(K >= 2 ? format_sci(ao(e, K)) : "-");
      }
      table.add_row(std::move(row));
    }
    out.tables.push_back({"example1_T" + fmt_g(T) + ".csv", std::move(table)});
  }
  return out;
}

ExampleOutput run2(const Overrides& o) {
  const auto Ks = pick(o.K, {3, 4, 5});
  const double delta = o.delta.value_or(0.25);
  const int N = o.N.value_or(8);
  CsvTable table;
  table.header = {"T"};
  for (int K : Ks) table.header.push_back("Merr(K=" + std::to_string(K) + ")");
  table.header.push_back("Merr(L1 FDM h=0.1 tau=0.01)");
  for (double T : pick(o.T, {0.1, 0.2, 0.3, 0.4, 0.5})) {
    const ExampleCase c = example2(T);
    std::vector<std::string> row{fmt_g(T)};
    for (int K : Ks) row.push_back(format_sci(run_case(c, solve_options(o, N, K, delta), test_settings(o), false).merr.abs));
    const int steps = std::max(1, static_cast<int>(std::lround(T / 0.01)));
    const FdmResult fdm = solve_diffusion_l1(c.problem, FdmGrid{100, steps});
    const Eigen::VectorXd last = fdm.final_level();
    double err = 0.0;
    for (std::size_t i = 1; i + 1 < fdm.nodes.size(); ++i) {
      err = std::max(err, std::abs(last(static_cast<Eigen::Index>(i)) - c.exact({fdm.nodes[i], 0.0}, T).real()));
    }
    row.push_back(format_sci(err));
    table.add_row(std::move(row));
  }
  return {{{"example2.csv", std::move(table)}}, {}};
}

ExampleOutput run3(const Overrides& o) {
  const auto Ns = pick(o.N, {100, 200, 250});
  const double delta = o.delta.value_or(0.25);
  const ExampleCase c = example3(o.T.value_or(1.0));
  CsvTable table;
  table.header = {"K"};
  for (int N : Ns) table.header.push_back("Merr(N=" + std::to_string(N) + ")");
  for (int K : pick(o.K, {4, 5, 6, 7, 8})) {
    std::vector<std::string> row{std::to_string(K)};
    for (int N : Ns) row.push_back(format_sci(run_case(c, solve_options(o, N, K, delta), test_settings(o), false).merr.abs));
    table.add_row(std::move(row));
  }
  return {{{"example3.csv", std::move(table)}}, {}};
}

ExampleOutput run4(const Overrides& o) {
  const auto deltas = pick(o.delta, {0.1, 0.25, 0.5});
  const int K = o.K.value_or(4);
  const ExampleCase c = example4(o.T.value_or(1.0));
  CsvTable table;
  table.header = {"N"};
  for (double d : deltas) {
    table.header.push_back("Rerr(" + delta_tag(d) + ")");
    table.header.push_back("CO(" + delta_tag(d) + ")");
  }
  std::vector<std::vector<std::pair<int, double>>> done(deltas.size());
  for (int N : pick(o.N, {10, 20, 40, 80, 160, 320})) {
    std::vector<std::string> row{std::to_string(N)};
    for (std::size_t j = 0; j < deltas.size(); ++j) {
      const double e = run_case(c, solve_options(o, N, K, deltas[j]), test_settings(o)).rerr;
      row.push_back(format_sci(e));
      row.push_back(format_sci(co_against(done[j], N, e)));
      done[j].push_back({N, e});
    }
    table.add_row(std::move(row));
  }
  return {{{"example4.csv", std::move(table)}}, {}};
}

const char* kFig1Script = R"(set datafile separator ','
set logscale xy
set format y '%.0e'
set xlabel 'N'
set ylabel 'Merr at T'
set key top right
set terminal pngcairo size 800,600
set output 'example5_fig1.png'
plot 'example5_fig1.csv' using 1:2 skip 1 with linespoints title 'alpha(t)=4^(t-1)', \
     'example5_fig1.csv' using 1:3 skip 1 with linespoints title 'alpha(t)=exp(t)/3'
)";

ExampleOutput run5(const Overrides& o) {
  ExampleOutput out;
  const double T = o.T.value_or(1.0);
  const double delta = o.delta.value_or(0.25);
  const int K = o.K.value_or(5);
  const auto settings = test_settings(o);
  CsvTable table;
  table.header = {"alpha", "N", "K", "Merr(Re u)", "Merr(Im u)"};
  for (double a : {0.1, 0.3, 0.5}) {
    const ExampleCase c = example5(a, T);
    for (int N : pick(o.N, {5, 20, 45, 80})) {
      const MaxError e = run_case(c, solve_options(o, N, K, delta), settings, false).merr;
      table.add_row({fmt_g(a), std::to_string(N), std::to_string(K), format_sci(e.real), format_sci(e.imag)});
    }
  }
  out.tables.push_back({"example5.csv", std::move(table)});

  CsvTable fig;
  fig.header = {"N", "Merr(alpha=4^(t-1))", "Merr(alpha=exp(t)/3)"};
  std::vector<int> Ns;
  if (o.N) Ns = {*o.N};
  else for (int N = 5; N <= 80; N += 5) Ns.push_back(N);
  const ExampleCase v0 = example5_variable(0, T);
  const ExampleCase v1 = example5_variable(1, T);
  for (int N : Ns) {
    fig.add_row({std::to_string(N), format_sci(run_case(v0, solve_options(o, N, K, delta), settings, false).merr.abs),
                 format_sci(run_case(v1, solve_options(o, N, K, delta), settings, false).merr.abs)});
  }
  out.tables.push_back({"example5_fig1.csv", std::move(fig)});
  out.scripts.push_back({"example5_fig1.gp", kFig1Script});
  return out;
}

ExampleOutput run6(const Overrides& o) {
  const int K = o.K.value_or(5);
  const double delta = o.delta.value_or(0.25);
  const double T = o.T.value_or(1.0);
  const ExampleCase cases[2] = {example6(0, T), example6(1, T)};
  CsvTable table;
  table.header = {"N", "Rerr(alpha1=1.6+sin(t)/5)", "CO(alpha1=1.6+sin(t)/5)", "Rerr(alpha1=0.6+cos(t)/5)",
                  "CO(alpha1=0.6+cos(t)/5)"};
  std::vector<std::pair<int, double>> done[2];
  for (int N : pick(o.N, {16, 32, 64, 128, 256})) {
    std::vector<std::string> row{std::to_string(N)};
    for (int j = 0; j < 2; ++j) {
      const double e = run_case(cases[j], solve_options(o, N, K, delta), test_settings(o)).rerr;
      row.push_back(format_sci(e));
      row.push_back(format_sci(co_against(done[j], N, e)));
      done[j].push_back({N, e});
    }
    table.add_row(std::move(row));
  }
  return {{{"example6.csv", std::move(table)}}, {}};
}

ExampleOutput run7(const Overrides& o) {
  const auto Ks = pick(o.K, {4, 5});
  const ExampleCase c = example7(o.T.value_or(1.0));
  CsvTable table;
  table.header = {"N"};
  for (int K : Ks) {
    table.header.push_back("Rerr(u)(K=" + std::to_string(K) + ")");
    table.header.push_back("Rerr(du/dx1)(K=" + std::to_string(K) + ")");
  }
  for (int N : pick(o.N, {25, 100, 225})) {
    std::vector<std::string> row{std::to_string(N)};
    for (int K : Ks) {
      PdeSolveOptions opts = options_total_modes(N, K, o.delta.value_or(0.25));
      opts.rbf_shape = 4.0;
      opts.quadrature_order = o.quad.value_or(0);
      opts.threads = o.threads;
      const CaseReport r = run_case(c, opts, test_settings(o));
      row.push_back(format_sci(r.rerr));
      row.push_back(format_sci(r.rerr_dx1));
    }
    table.add_row(std::move(row));
  }
  return {{{"example7.csv", std::move(table)}}, {}};
}

const char* kFig2Script = R"(set datafile separator ','
set xlabel 'x1'
set ylabel 'x2'
set dgrid3d 21,21
set pm3d
set terminal pngcairo size 1200,500
set output 'example8_fig2.png'
set multiplot layout 1,2
set title 'numerical solution at T'
splot 'example8_fig2.csv' using 1:2:3 skip 1 with pm3d notitle
set title 'absolute error at T'
set format z '%.0e'
splot 'example8_fig2.csv' using 1:2:5 skip 1 with pm3d notitle
unset multiplot
)";

ExampleOutput run8(const Overrides& o) {
  ExampleOutput out;
  const int N = o.N.value_or(36);
  const int K = o.K.value_or(5);
  const ExampleCase c = example8(o.T.value_or(1.0));
  PdeSolveOptions opts = options_total_modes(N, K, o.delta.value_or(0.25));
  opts.rbf_shape = 8.0;
  opts.quadrature_order = o.quad.value_or(0);
  opts.threads = o.threads;
  const PdeSolution sol = solve_pde(c.problem, opts);
  const double T = c.problem.domain_end;
  const double spacing = o.spacing.value_or(0.05);
  const ErrorPattern pattern = error_pattern(c, sol, spacing);

  CsvTable summary;
  summary.header = {"N", "K", "Merr", "Merr(center quarter)", "Merr(boundary frame)"};
  summary.add_row({std::to_string(N), std::to_string(K), format_sci(pattern.max_all), format_sci(pattern.max_center),
                   format_sci(pattern.max_frame)});
  out.tables.push_back({"example8.csv", std::move(summary)});

  // Closed grid for plotting; the solution includes the lift on the boundary.
  const int steps = std::max(2, static_cast<int>(std::lround(1.0 / spacing)));
  std::vector<Point> points;
  for (int j = 0; j <= steps; ++j)
    for (int i = 0; i <= steps; ++i) points.push_back({static_cast<double>(i) / steps, static_cast<double>(j) / steps});
  const auto values = sol.values(points, T);
  CsvTable fig;
  fig.header = {"x1", "x2", "u_numerical", "u_exact", "abs_error"};
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Complex ex = c.exact(points[k], T);
    fig.add_row({fmt_g(points[k][0]), fmt_g(points[k][1]), format_sci(values[k].real()), format_sci(ex.real()),
                 format_sci(std::abs(values[k] - ex))});
  }
  out.tables.push_back({"example8_fig2.csv", std::move(fig)});
  out.scripts.push_back({"example8_fig2.gp", kFig2Script});
  return out;
}

}  // namespace

ExampleOutput run_example(int id, const Overrides& overrides) {
  switch (id) {
    case 1: return run1(overrides);
    case 2: return run2(overrides);
    case 3: return run3(overrides);
    case 4: return run4(overrides);
    case 5: return run5(overrides);
    case 6: return run6(overrides);
    case 7: return run7(overrides);
    case 8: return run8(overrides);
    default: throw ValidationError("unknown example " + std::to_string(id) + " (valid: 1-8)");
  }
}

void write_example(const ExampleOutput& output, const std::filesystem::path& dir) {
  for (const auto& [name, table] : output.tables) write_csv(dir / name, table);
  for (const auto& [name, script] : output.scripts) write_text(dir / name, script);
}

}  // namespace fracspec
