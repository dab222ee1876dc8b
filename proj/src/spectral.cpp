#include "fracspec/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fracspec/errors.hpp"

namespace fracspec {

BoxDomain::BoxDomain(std::vector<double> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty() || lengths_.size() > 2) {
    throw ValidationError("box domain: dimension must be 1 or 2");
  }
  for (double l : lengths_) {
    if (!(l > 0.0) || !std::isfinite(l)) throw ValidationError("box domain: lengths must be positive");
  }
}

double BoxDomain::volume() const {
  double v = 1.0;
  for (double l : lengths_) v *= l;
  return v;
}

bool BoxDomain::contains(const Point& x) const {
  for (int a = 0; a < dim(); ++a) {
    const double slack = 1e-12 * length(a);
    if (x[static_cast<std::size_t>(a)] < -slack || x[static_cast<std::size_t>(a)] > length(a) + slack) {
      return false;
    }
  }
  return true;
}

double mode_value(const SineMode& mode, const BoxDomain& domain, const Point& x) {
  double v = 1.0;
  for (int a = 0; a < mode.dim; ++a) {
    const auto i = static_cast<std::size_t>(a);
    v *= std::sin(mode.index[i] * std::numbers::pi * x[i] / domain.length(a));
  }
  return v;
}

double mode_gradient(const SineMode& mode, const BoxDomain& domain, const Point& x, int axis) {
  double v = 1.0;
  for (int a = 0; a < mode.dim; ++a) {
    const auto i = static_cast<std::size_t>(a);
    const double k = mode.index[i] * std::numbers::pi / domain.length(a);
    v *= (a == axis) ? k * std::cos(k * x[i]) : std::sin(k * x[i]);
  }
  return v;
}

std::vector<SineMode> enumerate_modes(const BoxDomain& domain, int per_dim) {
  if (per_dim < 1) throw DomainError("enumerate_modes: N must be >= 1");
  std::vector<SineMode> modes;
  if (domain.dim() == 1) {
    for (int n = 1; n <= per_dim; ++n) modes.push_back({{n, 1}, 1});
  } else {
    for (int n0 = 1; n0 <= per_dim; ++n0) {
      for (int n1 = 1; n1 <= per_dim; ++n1) modes.push_back({{n0, n1}, 2});
    }
  }
  return modes;
}

double SpatialSymbol::eigenvalue(const SineMode& mode, const BoxDomain& domain) const {
  double sum = 0.0;
  for (int a = 0; a < mode.dim; ++a) {
    const double k = mode.index[static_cast<std::size_t>(a)] * std::numbers::pi / domain.length(a);
    sum += k * k;
  }
  switch (kind) {
    case SymbolKind::identity:
      return 1.0;
    case SymbolKind::laplacian:
      return -sum;
    case SymbolKind::bilaplacian:
      return sum * sum;
  }
  return 0.0;
}

const char* to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::identity:
      return "identity";
    case SymbolKind::laplacian:
      return "laplacian";
    case SymbolKind::bilaplacian:
      return "bilaplacian";
  }
  return "?";
}

namespace {

Complex checked_sample(const SpatialFunction& f, const Point& x, int dim) {
  const Complex v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream msg;
    msg << "projection: non-finite sample at x = (" << x[0];
    if (dim == 2) msg << ", " << x[1];
    msg << ")";
    throw NumericalError(msg.str());
  }
  return v;
}

}  // namespace

Complex project_onto_mode(const SpatialFunction& f, const SineMode& mode, const BoxDomain& domain,
                          int order) {
  if (mode.dim != domain.dim()) throw DomainError("project_onto_mode: mode/domain dimension mismatch");
  const QuadratureRule r0 = gauss_legendre(order, 0.0, domain.length(0));
  const double norm = std::pow(2.0, domain.dim()) / domain.volume();
  Complex sum = 0.0;
  if (domain.dim() == 1) {
    for (std::size_t i = 0; i < r0.nodes.size(); ++i) {
      const Point x{r0.nodes[i], 0.0};
      sum += r0.weights[i] * checked_sample(f, x, 1) * mode_value(mode, domain, x);
    }
  } else {
    const QuadratureRule r1 = gauss_legendre(order, 0.0, domain.length(1));
    for (std::size_t j = 0; j < r1.nodes.size(); ++j) {
      for (std::size_t i = 0; i < r0.nodes.size(); ++i) {
        const Point x{r0.nodes[i], r1.nodes[j]};
        sum += r0.weights[i] * r1.weights[j] * checked_sample(f, x, 2) * mode_value(mode, domain, x);
      }
    }
  }
  return norm * sum;
}

SineProjector::SineProjector(const BoxDomain& domain, int per_dim, int order)
    : domain_(domain), per_dim_(per_dim), order_(order) {
  if (per_dim < 1) throw DomainError("sine projector: N must be >= 1");
  std::vector<QuadratureRule> rules;
  for (int a = 0; a < domain.dim(); ++a) {
    rules.push_back(gauss_legendre(order, 0.0, domain.length(a)));
    Eigen::MatrixXd table(per_dim, order);
    const double l = domain.length(a);
    for (int n = 1; n <= per_dim; ++n) {
      for (int q = 0; q < order; ++q) {
        const auto qi = static_cast<std::size_t>(q);
        table(n - 1, q) =
            (2.0 / l) * rules.back().weights[qi] * std::sin(n * std::numbers::pi * rules.back().nodes[qi] / l);
      }
    }
    weighted_sines_.push_back(std::move(table));
  }
  if (domain.dim() == 1) {
    for (double x : rules[0].nodes) nodes_.push_back({x, 0.0});
  } else {
    for (double y : rules[1].nodes) {
      for (double x : rules[0].nodes) nodes_.push_back({x, y});
    }
  }
}

Eigen::VectorXcd SineProjector::sample(const SpatialFunction& f) const {
  Eigen::VectorXcd values(static_cast<Eigen::Index>(nodes_.size()));
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    values(static_cast<Eigen::Index>(i)) = checked_sample(f, nodes_[i], domain_.dim());
  }
  return values;
}

Eigen::VectorXcd SineProjector::project(const Eigen::VectorXcd& samples) const {
  if (samples.size() != static_cast<Eigen::Index>(nodes_.size())) {
    throw DomainError("sine projector: sample count mismatch");
  }
  if (domain_.dim() == 1) return weighted_sines_[0].cast<Complex>() * samples;
  const Eigen::Map<const Eigen::MatrixXcd> grid(samples.data(), order_, order_);
  const Eigen::MatrixXcd coeffs =
      weighted_sines_[0].cast<Complex>() * grid * weighted_sines_[1].transpose().cast<Complex>();
  // Lexicographic (n0 major) order == row-major flattening.
  Eigen::VectorXcd out(per_dim_ * per_dim_);
  for (int n0 = 0; n0 < per_dim_; ++n0) {
    for (int n1 = 0; n1 < per_dim_; ++n1) out(n0 * per_dim_ + n1) = coeffs(n0, n1);
  }
  return out;
}

}  // namespace fracspec
