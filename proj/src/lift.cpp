#include "fracspec/lift.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/votf_ode.hpp"

namespace fracspec {

namespace {

double squared_distance(const MultiquadricShape& s, const Point& x) {
  double r2 = 0.0;
  for (int a = 0; a < s.dim; ++a) {
    const double d = x[static_cast<std::size_t>(a)] - s.center[static_cast<std::size_t>(a)];
    r2 += d * d;
  }
  return r2;
}

// Radial functions are kept as sums a rho^p with rho = r^2 + c^2. In d dimensions
//   lap rho^p = (2 d p + 4 p (p-1)) rho^{p-1} - 4 c^2 p (p-1) rho^{p-2},
// so lap psi = (d-1) rho^{-1/2} + c^2 rho^{-3/2} for psi = rho^{1/2}, and so on.
using RadialTerms = std::vector<std::pair<double, double>>;  // (exponent, coefficient)

RadialTerms radial_laplacian(const RadialTerms& in, double c2, int d) {
  RadialTerms out;
  auto add = [&out](double p, double a) {
    if (a == 0.0) return;
    for (auto& [q, b] : out) {
      if (q == p) {
        b += a;
        return;
      }
    }
    out.emplace_back(p, a);
  };
  for (const auto& [p, a] : in) {
    add(p - 1.0, a * (2.0 * d * p + 4.0 * p * (p - 1.0)));
    add(p - 2.0, -a * 4.0 * c2 * p * (p - 1.0));
  }
  return out;
}

RadialTerms mq_terms(const MultiquadricShape& s, int extra_laplacians) {
  RadialTerms terms{{0.5, 1.0}};
  const double c2 = s.shape_param * s.shape_param;
  for (int k = 0; k < s.laplacian_power + extra_laplacians; ++k) terms = radial_laplacian(terms, c2, s.dim);
  return terms;
}

double mq_apply(const MultiquadricShape& s, SymbolKind kind, const Point& x) {
  const int extra = kind == SymbolKind::identity ? 0 : kind == SymbolKind::laplacian ? 1 : 2;
  const double rho = squared_distance(s, x) + s.shape_param * s.shape_param;
  double sum = 0.0;
  for (const auto& [p, a] : mq_terms(s, extra)) sum += a * std::pow(rho, p);
  return sum;
}

}  // namespace

double shape_value(const LiftShape& shape, const Point& x) {
  return shape_apply(shape, SymbolKind::identity, x);
}

double shape_gradient(const LiftShape& shape, const Point& x, int axis) {
  if (const auto* affine = std::get_if<AffineShape>(&shape)) {
    if (axis != 0) return 0.0;
    return affine->right ? 1.0 / affine->length : -1.0 / affine->length;
  }
  const auto& mq = std::get<MultiquadricShape>(shape);
  if (axis >= mq.dim) return 0.0;
  const double rho = squared_distance(mq, x) + mq.shape_param * mq.shape_param;
  const auto a = static_cast<std::size_t>(axis);
  double drho = 0.0;
  for (const auto& [p, coef] : mq_terms(mq, 0)) drho += coef * p * std::pow(rho, p - 1.0);
  return 2.0 * (x[a] - mq.center[a]) * drho;
}

double shape_apply(const LiftShape& shape, SymbolKind kind, const Point& x) {
  if (const auto* affine = std::get_if<AffineShape>(&shape)) {
    if (kind != SymbolKind::identity) return 0.0;
    const double s = x[0] / affine->length;
    return affine->right ? s : 1.0 - s;
  }
  return mq_apply(std::get<MultiquadricShape>(shape), kind, x);
}

const char* to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::none:
      return "none";
    case LiftKind::linear_1d:
      return "linear-1d";
    case LiftKind::mq_rbf:
      return "mq-rbf";
  }
  return "?";
}

LiftFunction::LiftFunction(std::vector<LiftShape> shapes, std::vector<PowerProfile> profiles,
                           LiftMetadata metadata)
    : shapes_(std::move(shapes)), profiles_(std::move(profiles)), metadata_(std::move(metadata)) {
  if (shapes_.size() != profiles_.size()) {
    throw ValidationError("lift: shape and profile counts differ");
  }
}

Complex LiftFunction::value(const Point& x, double t) const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < shapes_.size(); ++i) sum += shape_value(shapes_[i], x) * profiles_[i](t);
  return sum;
}

Complex LiftFunction::gradient(const Point& x, double t, int axis) const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    sum += shape_gradient(shapes_[i], x, axis) * profiles_[i](t);
  }
  return sum;
}

Complex LiftFunction::initial_derivative(const Point& x, int order) const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    sum += shape_value(shapes_[i], x) * derivative_profile(profiles_[i], order)(0.0);
  }
  return sum;
}

LiftFunction build_linear_lift_1d(const PowerProfile& left, const PowerProfile& right,
                                  const BoxDomain& domain) {
  if (domain.dim() != 1) throw ValidationError("linear lift: domain must be 1D");
  LiftMetadata meta;
  meta.kind = LiftKind::linear_1d;
  if (left.empty() && right.empty()) return LiftFunction({}, {}, meta);
  const double l = domain.length(0);
  return LiftFunction({AffineShape{l, false}, AffineShape{l, true}}, {left, right}, meta);
}

LiftFunction build_rbf_lift(const std::vector<BoundarySample>& samples, const std::vector<Point>& centers,
                            double shape_param, int dim) {
  if (!(shape_param > 0.0)) throw ValidationError("rbf lift: c_MQ must be positive");
  if (centers.empty()) throw ValidationError("rbf lift: no centers");
  const bool hermite = std::any_of(samples.begin(), samples.end(),
                                   [](const BoundarySample& s) { return s.kind == ConditionKind::laplacian; });
  const std::size_t unknowns = centers.size() * (hermite ? 2 : 1);
  if (samples.size() < unknowns) {
    throw ValidationError("rbf lift: fewer sample equations than unknowns");
  }
  LiftMetadata meta;
  meta.kind = LiftKind::mq_rbf;
  meta.centers = centers;
  meta.shape_param = shape_param;

  std::set<double> exponent_set;
  for (const auto& s : samples) {
    for (const auto& term : s.datum.terms()) exponent_set.insert(term.exponent);
  }
  // Exponents that differ by less than the merge tolerance collapse to one column.
  std::vector<double> exponents;
  for (double p : exponent_set) {
    if (exponents.empty() || p - exponents.back() > PowerProfile::kExponentMergeTol) exponents.push_back(p);
  }

  std::vector<LiftShape> shapes;
  for (const auto& c : centers) shapes.emplace_back(MultiquadricShape{c, shape_param, dim, 0});
  // Laplacian data: Hermite form with lap psi_i as extra basis functions.
  if (hermite) {
    for (const auto& c : centers) shapes.emplace_back(MultiquadricShape{c, shape_param, dim, 1});
  }
  if (exponents.empty()) {
    meta.rank = static_cast<int>(shapes.size());
    return LiftFunction(shapes, std::vector<PowerProfile>(shapes.size()), meta);
  }

  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(shapes.size());
  Eigen::MatrixXcd matrix(rows, cols);
  Eigen::MatrixXcd rhs(rows, static_cast<Eigen::Index>(exponents.size()));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& s = samples[static_cast<std::size_t>(r)];
    const SymbolKind kind = s.kind == ConditionKind::value ? SymbolKind::identity : SymbolKind::laplacian;
    for (Eigen::Index c = 0; c < cols; ++c) matrix(r, c) = shape_apply(shapes[static_cast<std::size_t>(c)], kind, s.point);
    for (std::size_t e = 0; e < exponents.size(); ++e) {
      const Complex v = s.datum.coefficient_of(exponents[e]);
      rhs(r, static_cast<Eigen::Index>(e)) = v;
      meta.data_scale = std::max(meta.data_scale, std::abs(v));
    }
  }

  const LeastSquaresResult fit = solve_least_squares(matrix, rhs);
  if (!fit.solution.allFinite()) throw NumericalError("rbf lift: non-finite coefficients");
  meta.rank = fit.rank;
  meta.ill_conditioned = fit.rank < cols;
  meta.fit_residual = (matrix * fit.solution - rhs).cwiseAbs().maxCoeff();

  std::vector<PowerProfile> profiles;
  profiles.reserve(shapes.size());
  for (Eigen::Index c = 0; c < cols; ++c) {
    std::vector<PowerTerm> terms;
    for (std::size_t e = 0; e < exponents.size(); ++e) {
      terms.push_back({fit.solution(c, static_cast<Eigen::Index>(e)), exponents[e]});
    }
    profiles.emplace_back(std::move(terms));
  }
  return LiftFunction(std::move(shapes), std::move(profiles), std::move(meta));
}

std::vector<Point> boundary_centers(const BoxDomain& domain, int per_side) {
  if (domain.dim() != 2) throw ValidationError("boundary_centers: domain must be 2D");
  if (per_side < 2) throw ValidationError("boundary_centers: need at least 2 nodes per side");
  const double lx = domain.length(0);
  const double ly = domain.length(1);
  const int n = per_side - 1;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < n; ++i) pts.push_back({lx * i / n, 0.0});
  for (int i = 0; i < n; ++i) pts.push_back({lx, ly * i / n});
  for (int i = 0; i < n; ++i) pts.push_back({lx * (n - i) / n, ly});
  for (int i = 0; i < n; ++i) pts.push_back({0.0, ly * (n - i) / n});
  return pts;
}

Complex lift_caputo_term(const LiftFunction& lift, const OrderFunction& order, SpatialSymbol symbol,
                         const Point& x, double t) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < lift.shapes().size(); ++i) {
    const double spatial = shape_apply(lift.shapes()[i], symbol.kind, x);
    if (spatial == 0.0) continue;
    sum += spatial * caputo_profile(lift.profiles()[i], order, t);
  }
  return sum;
}

Complex lift_spatial_term(const LiftFunction& lift, SpatialSymbol symbol, const Point& x, double t) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < lift.shapes().size(); ++i) {
    sum += shape_apply(lift.shapes()[i], symbol.kind, x) * lift.profiles()[i](t);
  }
  return sum;
}

}  // namespace fracspec
