#include "fracspec/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

std::vector<Point> lattice(const BoxDomain& domain, double spacing, bool closed) {
  if (!(spacing > 0.0)) throw ValidationError("test grid: spacing must be positive");
  std::vector<std::vector<double>> axes;
  for (int d = 0; d < domain.dim(); ++d) {
    const int steps = static_cast<int>(std::lround(domain.length(d) / spacing));
    if (steps < 2) throw ValidationError("test grid: spacing too coarse for the domain");
    std::vector<double> axis;
    const int first = closed ? 0 : 1;
    const int last = closed ? steps : steps - 1;
    for (int i = first; i <= last; ++i) axis.push_back(i * domain.length(d) / steps);
    axes.push_back(std::move(axis));
  }
  std::vector<Point> out;
  if (domain.dim() == 1) {
    for (double x : axes[0]) out.push_back({x, 0.0});
  } else {
    for (double y : axes[1])
      for (double x : axes[0]) out.push_back({x, y});
  }
  return out;
}

}  // namespace

std::vector<Point> interior_points(const BoxDomain& domain, double spacing) {
  return lattice(domain, spacing, false);
}

std::vector<Point> closed_points(const BoxDomain& domain, double spacing) {
  return lattice(domain, spacing, true);
}

std::vector<Point> uniform_interior(const BoxDomain& domain, int count) {
  if (count < 1) throw ValidationError("uniform_interior: count must be >= 1");
  std::vector<Point> out;
  auto coord = [&](int d, int i) { return i * domain.length(d) / (count + 1); };
  if (domain.dim() == 1) {
    for (int i = 1; i <= count; ++i) out.push_back({coord(0, i), 0.0});
  } else {
    for (int j = 1; j <= count; ++j)
      for (int i = 1; i <= count; ++i) out.push_back({coord(0, i), coord(1, j)});
  }
  return out;
}

std::vector<double> uniform_times(double domain_end, int count) {
  if (count < 2) throw ValidationError("uniform_times: count must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = domain_end * k / (count - 1);
  out.back() = domain_end;
  return out;
}

double rerr_squared(const std::vector<Complex>& exact, const std::vector<Complex>& approx) {
  if (exact.size() != approx.size()) throw ValidationError("rerr: sample count mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    num += std::norm(exact[i] - approx[i]);
    den += std::norm(exact[i]);
  }
  if (den == 0.0) throw DomainError("rerr: exact field vanishes on the test grid");
  return num / den;
}

double relative_l2(const std::vector<Complex>& exact, const std::vector<Complex>& approx) {
  return std::sqrt(rerr_squared(exact, approx));
}

MaxError max_error(const std::vector<Complex>& exact, const std::vector<Complex>& approx) {
  if (exact.size() != approx.size()) throw ValidationError("merr: sample count mismatch");
  MaxError out;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const Complex e = exact[i] - approx[i];
    out.abs = std::max(out.abs, std::abs(e));
    out.real = std::max(out.real, std::abs(e.real()));
    out.imag = std::max(out.imag, std::abs(e.imag()));
  }
  return out;
}

MaxError merr(const ExactField& exact, const PdeSolution& approx, const std::vector<Point>& points, double t) {
  std::vector<Complex> ref;
  ref.reserve(points.size());
  for (const auto& x : points) ref.push_back(exact(x, t));
  return max_error(ref, approx.values(points, t));
}

namespace {

double field_rerr(const ExactField& exact, const TestGrid& grid,
                  const std::function<std::vector<Complex>(double)>& approx_at) {
  std::vector<Complex> ref, got;
  for (double t : grid.times) {
    for (const auto& x : grid.points) ref.push_back(exact(x, t));
    const auto row = approx_at(t);
    got.insert(got.end(), row.begin(), row.end());
  }
  return relative_l2(ref, got);
}

}  // namespace

double rerr(const ExactField& exact, const PdeSolution& approx, const TestGrid& grid) {
  return field_rerr(exact, grid, [&](double t) { return approx.values(grid.points, t); });
}

double rerr_gradient(const ExactField& exact_gradient, const PdeSolution& approx, const TestGrid& grid, int axis) {
  return field_rerr(exact_gradient, grid, [&](double t) { return approx.gradients(grid.points, t, axis); });
}

double rerr(const ExactTime& exact, const VotfOdeSolution& approx, const std::vector<double>& times) {
  std::vector<Complex> ref, got;
  for (double t : times) {
    ref.push_back(exact(t));
    got.push_back(eval_solution(approx, t));
  }
  return relative_l2(ref, got);
}

double merr(const ExactTime& exact, const VotfOdeSolution& approx, const std::vector<double>& times) {
  std::vector<Complex> ref, got;
  for (double t : times) {
    ref.push_back(exact(t));
    got.push_back(eval_solution(approx, t));
  }
  return max_error(ref, got).abs;
}

double ao(double err, int K) {
  if (K < 2) throw ValidationError("ao: K must be >= 2");
  if (err < 0.0 || !std::isfinite(err)) throw ValidationError("ao: error must be finite and non-negative");
  if (err == 0.0) return kInfiniteOrder;
  return std::log(err) / std::log(1.0 / K);
}

double co(double err_half, double err_full) {
  if (!(err_half > 0.0) || err_full < 0.0) throw ValidationError("co: errors must be positive");
  if (err_full == 0.0) return kInfiniteOrder;
  return std::log2(err_half / err_full);
}

}  // namespace fracspec
