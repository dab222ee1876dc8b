// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracspec/benchmarks.hpp"
#include "fracspec/caputo.hpp"
#include "fracspec/gamma.hpp"
#include "fracspec/metrics.hpp"
#include "fracspec/muntz.hpp"
#include "fracspec/spectral.hpp"

using namespace fracspec;

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "  miss: " << what << "\n";
    }
  }
  void note(const std::string& line) { log << "  " << line << "\n"; }
};

std::string sci(double v) { return format_sci(v); }

bool within_factor(double value, double ref, double factor) {
  return value > 0.0 && value <= ref * factor && value >= ref / factor;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0.0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.2f s (limit %.0f s)", secs, limit_s);
    c.expect(secs < limit_s, buf);
  }
  std::printf("criterion %2d %s: %s (%.2f s)\n", id, c.ok ? "PASS" : "FAIL", title, secs);
  std::fputs(c.log.str().c_str(), stdout);
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

PdeSolveOptions opts1d(int N, int K, double delta = 0.25) {
  PdeSolveOptions o;
  o.modes_per_dim = N;
  o.basis_size = K;
  o.delta = delta;
  return o;
}

// ---- property checks -------------------------------------------------------------

double caputo_integral(double p, double a, int m, double t) {
  double falling = 1.0;
  for (int k = 0; k < m; ++k) falling *= p - k;
  boost::math::quadrature::tanh_sinh<double> q;
  auto f = [&](double u, double uc) {
    const double lo = uc < 0.0 ? -uc : u;
    const double hi = uc < 0.0 ? 1.0 - u : uc;
    return std::pow(hi, m - a - 1.0) * std::pow(lo, p - m);
  };
  return falling * std::pow(t, p - a) * q.integrate(f, 0.0, 1.0) / std::tgamma(m - a);
}

void power_rule_property(Check& c) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int m = 1 + static_cast<int>(3.0 * u(rng));
    const double a0 = m - 1 + 0.05 + 0.9 * u(rng);
    const double p = m - 1 + 0.2 + 3.0 * u(rng);
    const double t = 0.05 + 0.95 * u(rng);
    OrderFunction order([a0](double s) { return a0 + 0.01 * s; }, m, 1.0);
    const double ref = caputo_integral(p, order(t), m, t);
    worst = std::max(worst, std::abs(caputo_power(p, order, t) - ref) / std::max(std::abs(ref), 1e-4));
  }
  c.note("power rule vs quadrature: worst rel " + sci(worst));
  c.expect(worst <= 1e-8, "power rule vs quadrature <= 1e-8");
}

void gamma_property(Check& c) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-3, 160.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    worst = std::max(worst, std::abs(fracspec::gamma(x + 1.0) - x * fracspec::gamma(x)) / fracspec::gamma(x + 1.0));
  }
  c.note("gamma recurrence: worst rel " + sci(worst));
  c.expect(worst <= 1e-13, "gamma recurrence <= 1e-13");
}

VotfOdeProblem manufactured_ode(const PowerProfile& exact, std::vector<Complex> h) {
  OrderFunction a([](double t) { return 1.5 + 0.3 * std::sin(t); }, 2, 1.0);
  OrderFunction a1([](double t) { return 0.4 + 0.1 * t; }, 1, 1.0);
  TimeFunction b1 = [](double t) { return Complex(-1.0 - t); };
  TimeFunction b0 = [](double t) { return Complex(std::cos(t), 0.5); };
  auto f = [=](double t) {
    return caputo_profile(exact, a, t) - b1(t) * caputo_profile(exact, a1, t) - b0(t) * exact(t);
  };
  return VotfOdeProblem{a, {{a1, b1}}, b0, f, std::move(h), 1.0};
}

void bsm_properties(Check& c) {
  const PowerProfile outside{{Complex(0.3, -1.0), 0.0}, {2.0, 1.0}, {1.0, 2.2}, {Complex(0.0, 1.0), 3.7}};
  double ic = 0.0;
  for (int K : {2, 4, 7}) {
    const auto sol = solve_votfode(manufactured_ode(outside, {Complex(0.3, -1.0), 2.0}), MuntzBasis(K, 0.3, 2, 1.0));
    ic = std::max(ic, std::abs(eval_solution(sol, 0.0) - Complex(0.3, -1.0)));
    ic = std::max(ic, std::abs(eval_solution_derivative(sol, 0.0, 1) - 2.0));
  }
  c.note("initial-condition defect " + sci(ic));
  c.expect(ic <= 1e-12, "BSM initial conditions <= 1e-12");

  const MuntzBasis basis(5, 0.25, 2, 1.0);
  std::vector<Complex> q{{0.7, -0.2}, {-1.1, 0.4}, {0.3, 0.9}, {1.6, 0.0}, {-0.5, -1.2}};
  PowerProfile exact{{1.0, 0.0}, {-0.5, 1.0}};
  for (int k = 1; k <= 5; ++k) exact += PowerProfile::monomial(basis.exponent(k), q[static_cast<std::size_t>(k - 1)]);
  const auto sol = solve_votfode(manufactured_ode(exact, {1.0, -0.5}), basis);
  double err = 0.0, norm = 0.0;
  for (int k = 0; k < 5; ++k) {
    err = std::max(err, std::abs(sol.coefficients(k) - q[static_cast<std::size_t>(k)]));
    norm = std::max(norm, std::abs(q[static_cast<std::size_t>(k)]));
  }
  c.note("exact-span coefficient recovery rel " + sci(err / norm));
  c.expect(err <= 1e-10 * norm, "exact-span recovery <= 1e-10");
}

void sine_properties(Check& c) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> dist;
  double worst = 0.0;
  for (const BoxDomain& d : {BoxDomain({1.7}), BoxDomain({1.0, 2.5})}) {
    const int per = d.dim() == 1 ? 40 : 8;
    const auto modes = enumerate_modes(d, per);
    Eigen::VectorXcd coef(static_cast<Eigen::Index>(modes.size()));
    for (Eigen::Index i = 0; i < coef.size(); ++i) coef(i) = Complex(dist(rng), dist(rng));
    auto f = [&](const Point& x) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < modes.size(); ++i) s += coef(static_cast<Eigen::Index>(i)) * mode_value(modes[i], d, x);
      return s;
    };
    SineProjector proj(d, per, 2 * per + 32);
    worst = std::max(worst, (proj.project(proj.sample(f)) - coef).cwiseAbs().maxCoeff() / coef.cwiseAbs().maxCoeff());
  }
  c.note("sine round trip rel " + sci(worst));
  c.expect(worst <= 1e-12, "sine orthogonality round trip <= 1e-12");

  const BoxDomain d({1.3, 0.8});
  const Point x{0.41, 0.27};
  const double h = 1e-2;
  auto lap = [&](const std::function<double(const Point&)>& u, const Point& y) {
    double s = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
      auto at = [&](double off) {
        Point z = y;
        z[a] += off;
        return u(z);
      };
      s += (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
    }
    return s;
  };
  double sym = 0.0;
  for (const auto& mode : enumerate_modes(d, 3)) {
    std::function<double(const Point&)> u = [&](const Point& y) { return mode_value(mode, d, y); };
    const double l = SpatialSymbol{SymbolKind::laplacian}.eigenvalue(mode, d) * u(x);
    const double b = SpatialSymbol{SymbolKind::bilaplacian}.eigenvalue(mode, d) * u(x);
    sym = std::max(sym, std::abs(lap(u, x) - l) / std::abs(l));
    std::function<double(const Point&)> lu = [&](const Point& y) { return lap(u, y); };
    sym = std::max(sym, std::abs(lap(lu, x) - b) / std::abs(b));
  }
  c.note("symbol finite-difference rel " + sci(sym));
  c.expect(sym <= 1e-5, "symbol finite-difference check <= 1e-5");
}

void schedule_property(Check& c) {
  bool same = true;
  for (const ExampleCase& ex : {example3(), example7()}) {
    PdeSolveOptions o = ex.problem.domain.dim() == 1 ? opts1d(64, 5) : options_total_modes(25, 4);
    o.rbf_shape = 4.0;
    o.threads = 1;
    const PdeSolution serial = solve_pde(ex.problem, o);
    for (int threads : {2, 4, 7}) {
      o.threads = threads;
      const PdeSolution par = solve_pde(ex.problem, o);
      for (std::size_t i = 0; i < par.modes().size(); ++i) {
        const auto& a = par.modes()[i].solution.coefficients;
        const auto& b = serial.modes()[i].solution.coefficients;
        same = same && a.size() == b.size() &&
               std::memcmp(a.data(), b.data(), sizeof(Complex) * static_cast<std::size_t>(a.size())) == 0;
      }
    }
  }
  c.expect(same, "mode-schedule determinism (bitwise)");
}

void metric_property(Check& c) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> dist;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> e(300), a(300);
    long double num = 0, den = 0, mx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = Complex(dist(rng), dist(rng));
      a[i] = e[i] + 1e-3 * Complex(dist(rng), dist(rng));
      num += std::norm(e[i] - a[i]);
      den += std::norm(e[i]);
      mx = std::max<long double>(mx, std::abs(e[i] - a[i]));
    }
    const double r = static_cast<double>(std::sqrt(num / den));
    worst = std::max(worst, std::abs(relative_l2(e, a) - r) / r);
    worst = std::max(worst, std::abs(max_error(e, a).abs - static_cast<double>(mx)) / static_cast<double>(mx));
  }
  c.note("metric cross-check rel " + sci(worst));
  c.expect(worst <= 1e-14, "metric cross-check <= 1e-14");
}

}  // namespace

int main() {
  criterion(1, "Example 1 spectral floor and decay (T=1, delta=0.25)", 1.0, [](Check& c) {
    const double table[] = {2.14e-2, 1.80e-3, 1.16e-4, 2.14e-5, 2.93e-6, 1.20e-7};
    double previous = 1.0;
    for (int K = 3; K <= 9; ++K) {
      const double e = example1_run(1.0, 0.25, K).rerr;
      c.note("K=" + std::to_string(K) + " Rerr " + sci(e));
      c.expect(e < previous, "monotone decay at K=" + std::to_string(K));
      if (K <= 8) c.expect(within_factor(e, table[K - 3], 5.0), "factor 5 of reference at K=" + std::to_string(K));
      previous = e;
    }
    c.expect(example1_run(1.0, 0.25, 9).rerr <= 1e-13, "Rerr(K=9) <= 1e-13");
  });

  criterion(2, "Example 1 at T=0.01 and T=100", 2.0, [](Check& c) {
    const double short_h = example1_run(0.01, 0.25, 3).rerr;
    const double long_h = example1_run(100.0, 0.25, 9).rerr;
    c.note("T=0.01 K=3 Rerr " + sci(short_h) + ", T=100 K=9 Rerr " + sci(long_h));
    c.expect(short_h <= 1e-12, "T=0.01 Rerr(K=3) <= 1e-12");
    c.expect(long_h <= 1e-12, "T=100 Rerr(K=9) <= 1e-12");
  });

  criterion(3, "Example 2 exact span and K=4 magnitudes", 1.0, [](Check& c) {
    const double k4[] = {7.43e-4, 8.17e-4, 1.58e-4, 2.70e-4, 4.19e-4};
    int row = 0;
    for (double T : {0.1, 0.2, 0.3, 0.4, 0.5}) {
      const ExampleCase ex = example2(T);
      const double e5 = run_case(ex, opts1d(8, 5), {}, false).merr.abs;
      const double e4 = run_case(ex, opts1d(8, 4), {}, false).merr.abs;
      c.note("T=" + std::to_string(T).substr(0, 3) + " K=5 " + sci(e5) + " K=4 " + sci(e4) + " (ref " + sci(k4[row]) + ")");
      c.expect(e5 <= 1e-13, "K=5 Merr <= 1e-13");
      c.expect(within_factor(e4, k4[row], 5.0), "K=4 Merr within factor 5 of reference");
      ++row;
    }
  });

  criterion(4, "Example 3 spatial truncation", 30.0, [](Check& c) {
    const ExampleCase ex = example3();
    const std::pair<int, double> rows[] = {{100, 6.25e-5}, {200, 8.07e-6}, {250, 2.05e-6}};
    for (const auto& [N, ref] : rows) {
      const double e = run_case(ex, opts1d(N, 5), {}, false).merr.abs;
      c.note("N=" + std::to_string(N) + " Merr " + sci(e) + " (ref " + sci(ref) + ")");
      c.expect(within_factor(e, ref, 3.0), "factor 3 at N=" + std::to_string(N));
    }
  });

  criterion(5, "Example 4 convergence and delta insensitivity", 60.0, [](Check& c) {
    const ExampleCase ex = example4();
    std::vector<std::vector<double>> errs;
    for (double delta : {0.1, 0.25, 0.5}) {
      std::vector<double> row;
      for (int N : {10, 20, 40, 80, 160, 320}) row.push_back(run_case(ex, opts1d(N, 4, delta)).rerr);
      errs.push_back(row);
    }
    const auto& mid = errs[1];
    for (std::size_t i = 1; i < mid.size(); ++i) {
      const double order = co(mid[i - 1], mid[i]);
      c.note("N=" + std::to_string(10 << i) + " Rerr " + sci(mid[i]) + " CO " + sci(order));
      c.expect(order >= 2.3, "CO >= 2.3 at N=" + std::to_string(10 << i));
    }
    c.expect(mid.back() <= 1e-8, "Rerr(320) <= 1e-8");
    char a[16], b[16];
    for (std::size_t d = 0; d < 3; d += 2) {
      for (std::size_t i = 0; i < mid.size(); ++i) {
        std::snprintf(a, sizeof a, "%.2e", errs[d][i]);
        std::snprintf(b, sizeof b, "%.2e", mid[i]);
        c.expect(std::strcmp(a, b) == 0, std::string("delta insensitivity: ") + a + " vs " + b);
      }
    }
  });

  criterion(6, "Example 5 complex field", 30.0, [](Check& c) {
    const std::pair<int, double> rows[] = {{5, 2.82e-2}, {20, 1.20e-3}, {45, 1.26e-4}, {80, 2.98e-5}};
    for (double a : {0.1, 0.3, 0.5}) {
      const ExampleCase ex = example5(a);
      for (const auto& [N, ref] : rows) {
        const MaxError e = run_case(ex, opts1d(N, 5), {}, false).merr;
        c.expect(within_factor(e.real, ref, 3.0), "Re Merr factor 3 at alpha=" + std::to_string(a) + " N=" + std::to_string(N) + ": " + sci(e.real));
        c.expect(e.imag <= 1e-12, "Im Merr <= 1e-12: " + sci(e.imag));
      }
    }
    c.note("constant orders, N=80: Re Merr " + sci(run_case(example5(0.3), opts1d(80, 5), {}, false).merr.real));
    for (int which : {0, 1}) {
      const ExampleCase ex = example5_variable(which);
      double previous = 1e300;
      std::string trace;
      for (const auto& [N, ref] : rows) {
        const double e = run_case(ex, opts1d(N, 5), {}, false).merr.abs;
        trace += " " + sci(e);
        c.expect(e < previous, "variable order decay with N");
        previous = e;
      }
      c.note(std::string(which == 0 ? "4^(t-1)" : "exp(t)/3") + " N=5,20,45,80:" + trace);
    }
  });

  criterion(7, "Example 6 accuracy and order-pair invariance", 60.0, [](Check& c) {
    const double e0 = run_case(example6(0), opts1d(256, 5)).rerr;
    const double e1 = run_case(example6(1), opts1d(256, 5)).rerr;
    c.note("N=256 Rerr " + sci(e0) + " / " + sci(e1) + " (ref 5.04e-07)");
    c.expect(within_factor(e0, 5.04e-7, 3.0), "factor 3 of reference");
    for (int N : {16, 32, 64, 128, 256}) {
      char a[16], b[16];
      std::snprintf(a, sizeof a, "%.2e", run_case(example6(0), opts1d(N, 5)).rerr);
      std::snprintf(b, sizeof b, "%.2e", run_case(example6(1), opts1d(N, 5)).rerr);
      c.expect(std::strcmp(a, b) == 0, std::string("pair invariance at N=") + std::to_string(N) + ": " + a + " vs " + b);
    }
  });

  criterion(8, "Example 7 2D with multiquadric lift", 120.0, [](Check& c) {
    PdeSolveOptions o = options_total_modes(25, 4);
    o.rbf_shape = 4.0;
    const CaseReport r = run_case(example7(), o);
    c.note("N=25 K=4 Rerr(u) " + sci(r.rerr) + " (ref 2.03e-05), Rerr(du/dx1) " + sci(r.rerr_dx1) + " (ref 1.80e-03)");
    c.expect(within_factor(r.rerr, 2.03e-5, 3.0), "Rerr(u) within factor 3");
    c.expect(within_factor(r.rerr_dx1, 1.80e-3, 3.0), "Rerr(du/dx1) within factor 3");
  });

  criterion(9, "Example 8 biharmonic error level and pattern", 120.0, [](Check& c) {
    const ExampleCase ex = example8();
    PdeSolveOptions o = options_total_modes(36, 5);
    o.rbf_shape = 8.0;
    const PdeSolution sol = solve_pde(ex.problem, o);
    const ErrorPattern p = error_pattern(ex, sol);
    c.note("Merr " + sci(p.max_all) + ", central quarter " + sci(p.max_center) + ", boundary frame " + sci(p.max_frame));
    c.expect(p.max_all <= 1e-3, "Merr <= 1e-3");
    c.expect(p.max_center >= p.max_frame, "central maximum >= frame maximum");
  });

  criterion(10, "property suites", 0.0, [](Check& c) {
    power_rule_property(c);
    gamma_property(c);
    bsm_properties(c);
    sine_properties(c);
    schedule_property(c);
    metric_property(c);
  });

  criterion(11, "L1 finite-difference oracle agreement", 0.0, [](Check& c) {
    for (int id : {2, 3}) {
      const auto [spectral, grid] = oracle_defaults(id);
      const OracleReport r = oracle_compare(id, spectral, grid);
      c.note("example " + std::to_string(id) + ": discrepancy " + sci(r.discrepancy) + ", 3x estimate " + sci(3.0 * r.estimate));
      c.expect(r.agrees(), "example " + std::to_string(id) + " within 3x Richardson estimate");
    }
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
