#include "fracspec/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/parallel.hpp"

namespace fracspec {

Complex PdeTerm::lhs_coefficient(double t) const {
  const Complex a = coefficient(t);
  return side == TermSide::lhs_time ? a : -a;
}

PowerProfile boundary_datum(const std::vector<SeparableTerm>& data, const Point& x) {
  PowerProfile out;
  for (const auto& term : data) out += term.shape(x) * term.profile;
  return out;
}

void PdeProblem::validate() const {
  const int m = leading_order.ceiling();
  if (!(domain_end > 0.0)) throw ValidationError("pde: T must be positive");
  if (leading_order.domain_end() < domain_end * (1.0 - 1e-12)) {
    throw ValidationError("pde: leading order validated on a shorter interval than [0, T]");
  }
  if (static_cast<int>(initial.size()) != m) {
    std::ostringstream msg;
    msg << "pde: expected " << m << " initial conditions for ceiling " << m << ", got " << initial.size();
    throw ValidationError(msg.str());
  }
  for (const auto& h : initial) {
    if (!h) throw ValidationError("pde: empty initial condition");
  }
  if (!forcing) throw ValidationError("pde: missing forcing");
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& term = terms[j];
    std::ostringstream where;
    where << "pde term " << j + 1 << ": ";
    if (!term.coefficient) throw ValidationError(where.str() + "missing coefficient");
    if (term.side == TermSide::lhs_time && term.symbol.kind != SymbolKind::identity) {
      throw ValidationError(where.str() + "time terms on the left carry the identity symbol");
    }
    if (term.side == TermSide::rhs_spatial && term.symbol.kind == SymbolKind::identity) {
      throw ValidationError(where.str() + "spatial terms need a laplacian or bilaplacian symbol");
    }
    if (term.order) {
      if (term.order->ceiling() > m) throw ValidationError(where.str() + "order ceiling above the leading ceiling");
      if (term.order->domain_end() < domain_end * (1.0 - 1e-12)) {
        throw ValidationError(where.str() + "order validated on a shorter interval than [0, T]");
      }
    }
  }
  if (!boundary.neumann.empty()) {
    throw ValidationError("pde: Neumann boundary data cannot be represented by the sine basis");
  }
  if (!boundary.laplacian.empty() && domain.dim() != 2) {
    throw ValidationError("pde: laplacian boundary data is only supported for 2D multiquadric lifts");
  }
  for (const auto& group : {&boundary.dirichlet, &boundary.laplacian}) {
    for (const auto& term : *group) {
      if (!term.shape) throw ValidationError("pde: boundary term without spatial part");
    }
  }
}

HomogenizedProblem::HomogenizedProblem(PdeProblem problem, LiftFunction lift)
    : problem_(std::move(problem)), lift_(std::move(lift)) {
  const int m = problem_.leading_order.ceiling();
  initial_profiles_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (std::size_t s = 0; s < lift_.profiles().size(); ++s) {
      try {
        initial_profiles_[static_cast<std::size_t>(i)].push_back(derivative_profile(lift_.profiles()[s], i));
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "homogenize: lift profile " << s + 1 << ": " << e.what();
        throw ValidationError(msg.str());
      }
    }
  }
}

Complex HomogenizedProblem::theta(const Point& x, double t) const {
  return theta_on({x}, t)(0);
}

Eigen::VectorXcd HomogenizedProblem::theta_on(const std::vector<Point>& points, double t) const {
  const auto& shapes = lift_.shapes();
  const auto& profiles = lift_.profiles();
  const std::size_t ns = shapes.size();

  auto caputo_of = [&](const OrderFunction& order, std::size_t s) {
    try {
      return caputo_profile(profiles[s], order, t);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "homogenize: lift profile " << s + 1 << " under order '" << order.label() << "': " << e.what();
      throw ValidationError(msg.str());
    }
  };

  std::vector<Complex> lead(ns);
  for (std::size_t s = 0; s < ns; ++s) lead[s] = caputo_of(problem_.leading_order, s);

  const auto& terms = problem_.terms;
  std::vector<Complex> coeff(terms.size());
  std::vector<std::vector<Complex>> time_factor(terms.size(), std::vector<Complex>(ns));
  for (std::size_t j = 0; j < terms.size(); ++j) {
    coeff[j] = terms[j].lhs_coefficient(t);
    for (std::size_t s = 0; s < ns; ++s) {
      time_factor[j][s] = terms[j].order ? caputo_of(*terms[j].order, s) : profiles[s](t);
    }
  }

  Eigen::VectorXcd out(static_cast<Eigen::Index>(points.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Point& x = points[p];
    Complex value = problem_.forcing(x, t);
    for (std::size_t s = 0; s < ns; ++s) {
      value -= shape_value(shapes[s], x) * lead[s];
      for (std::size_t j = 0; j < terms.size(); ++j) {
        const double spatial = shape_apply(shapes[s], terms[j].symbol.kind, x);
        if (spatial != 0.0) value -= coeff[j] * spatial * time_factor[j][s];
      }
    }
    out(static_cast<Eigen::Index>(p)) = value;
  }
  return out;
}

Complex HomogenizedProblem::initial(int i, const Point& x) const {
  const auto& shapes = lift_.shapes();
  Complex value = problem_.initial.at(static_cast<std::size_t>(i))(x);
  const auto& derivs = initial_profiles_.at(static_cast<std::size_t>(i));
  for (std::size_t s = 0; s < shapes.size(); ++s) value -= shape_value(shapes[s], x) * derivs[s](0.0);
  return value;
}

HomogenizedProblem homogenize(const PdeProblem& problem, const LiftFunction& lift) {
  problem.validate();
  return HomogenizedProblem(problem, lift);
}

namespace {

// Mode-ODE coefficients for one mode. Terms with an order become lower terms,
// the others add to the reaction.
void fill_mode_operator(const PdeProblem& problem, const SineMode& mode, VotfOdeProblem& ode) {
  std::vector<std::pair<TimeFunction, double>> reactions;
  for (const auto& term : problem.terms) {
    const double lambda = term.symbol.eigenvalue(mode, problem.domain);
    auto coefficient = [term, lambda](double t) { return -term.lhs_coefficient(t) * lambda; };
    if (term.order) {
      ode.lower_terms.push_back({*term.order, coefficient});
    } else {
      reactions.emplace_back(coefficient, lambda);
    }
  }
  if (!reactions.empty()) {
    ode.reaction = [reactions](double t) {
      Complex sum = 0.0;
      for (const auto& r : reactions) sum += r.first(t);
      return sum;
    };
  }
}

}  // namespace

VotfOdeProblem mode_problem(const HomogenizedProblem& homogenized, const SineMode& mode, int quadrature_order) {
  const PdeProblem& problem = homogenized.problem();
  auto shared = std::make_shared<const HomogenizedProblem>(homogenized);
  const BoxDomain domain = problem.domain;
  VotfOdeProblem ode{problem.leading_order, {}, std::nullopt, {}, {}, problem.domain_end};
  fill_mode_operator(problem, mode, ode);
  ode.forcing = [shared, mode, domain, quadrature_order](double t) {
    return project_onto_mode([&](const Point& x) { return shared->theta(x, t); }, mode, domain,
                             quadrature_order);
  };
  const int m = problem.leading_order.ceiling();
  for (int i = 0; i < m; ++i) {
    ode.initial_values.push_back(project_onto_mode(
        [&](const Point& x) { return homogenized.initial(i, x); }, mode, domain, quadrature_order));
  }
  return ode;
}

int effective_quadrature_order(const PdeSolveOptions& options, int dim) {
  if (options.quadrature_order > 0) return options.quadrature_order;
  const int base = dim == 1 ? 64 : 32;
  return std::max(base, 2 * options.modes_per_dim + 32);
}

LiftFunction build_lift(const PdeProblem& problem, const PdeSolveOptions& options) {
  const auto& domain = problem.domain;
  const auto& bc = problem.boundary;
  if (domain.dim() == 1) {
    if (bc.dirichlet.empty()) return build_linear_lift_1d({}, {}, domain);
    return build_linear_lift_1d(boundary_datum(bc.dirichlet, {0.0, 0.0}),
                                boundary_datum(bc.dirichlet, {domain.length(0), 0.0}), domain);
  }
  if (bc.dirichlet.empty() && bc.laplacian.empty()) {
    LiftMetadata meta;
    meta.kind = LiftKind::mq_rbf;
    return LiftFunction({}, {}, meta);
  }
  const int per_side = std::max(2, options.rbf_per_side > 0 ? options.rbf_per_side : options.modes_per_dim);
  const std::vector<Point> centers = boundary_centers(domain, per_side);
  std::vector<BoundarySample> samples;
  for (const auto& c : centers) samples.push_back({c, ConditionKind::value, boundary_datum(bc.dirichlet, c)});
  if (!bc.laplacian.empty()) {
    for (const auto& c : centers) {
      samples.push_back({c, ConditionKind::laplacian, boundary_datum(bc.laplacian, c)});
    }
  }
  return build_rbf_lift(samples, centers, options.rbf_shape, 2);
}

PdeSolution solve_pde(const PdeProblem& problem, const PdeSolveOptions& options) {
  problem.validate();
  if (options.modes_per_dim < 1) throw ValidationError("solve_pde: N must be >= 1");
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  const int m = problem.leading_order.ceiling();
  const MuntzBasis basis(options.basis_size, options.delta, m, problem.domain_end);

  auto homogenized = std::make_shared<const HomogenizedProblem>(problem, build_lift(problem, options));
  const std::vector<SineMode> modes = enumerate_modes(problem.domain, options.modes_per_dim);
  const int order = effective_quadrature_order(options, problem.domain.dim());
  const SineProjector projector(problem.domain, options.modes_per_dim, order);

  const int count = options.collocation_count > 0 ? options.collocation_count : 2 * basis.size();
  const std::vector<double> times = gc_points(count, problem.domain_end).points;

  // theta_n(t_j) for every collocation time and mode: one sampling pass per time.
  auto theta_table = std::make_shared<std::vector<Eigen::VectorXcd>>(times.size());
  parallel_for(times.size(), threads, [&](std::size_t j) {
    (*theta_table)[j] = projector.project(homogenized->theta_on(projector.nodes(), times[j]));
  });
  std::vector<Eigen::VectorXcd> initial_table(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    initial_table[static_cast<std::size_t>(i)] =
        projector.project(projector.sample([&](const Point& x) { return homogenized->initial(i, x); }));
  }

  std::vector<std::optional<VotfOdeSolution>> solved(modes.size());
  SolveOptions ode_options;
  ode_options.collocation_count = count;
  parallel_for(modes.size(), threads, [&](std::size_t n) {
    const SineMode mode = modes[n];
    VotfOdeProblem ode{problem.leading_order, {}, std::nullopt, {}, {}, problem.domain_end};
    fill_mode_operator(problem, mode, ode);
    const BoxDomain domain = problem.domain;
    ode.forcing = [theta_table, times, n, homogenized, mode, domain, order](double t) -> Complex {
      const auto hit = std::find(times.begin(), times.end(), t);
      if (hit != times.end()) {
        return (*theta_table)[static_cast<std::size_t>(hit - times.begin())](static_cast<Eigen::Index>(n));
      }
      return project_onto_mode([&](const Point& x) { return homogenized->theta(x, t); }, mode, domain, order);
    };
    for (int i = 0; i < m; ++i) {
      ode.initial_values.push_back(initial_table[static_cast<std::size_t>(i)](static_cast<Eigen::Index>(n)));
    }
    try {
      solved[n] = solve_votfode(ode, basis, ode_options);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "solve_pde: mode (" << mode.index[0];
      if (mode.dim == 2) msg << ", " << mode.index[1];
      msg << "): " << e.what();
      throw NumericalError(msg.str());
    }
  });

  PdeDiagnostics diag;
  diag.modes_per_dim = options.modes_per_dim;
  diag.basis_size = options.basis_size;
  diag.delta = options.delta;
  diag.quadrature_order = order;
  diag.lift = homogenized->lift().metadata();
  std::vector<ModeSolution> mode_solutions;
  mode_solutions.reserve(modes.size());
  for (std::size_t n = 0; n < modes.size(); ++n) {
    diag.max_residual = std::max(diag.max_residual, solved[n]->residual_norm);
    if (solved[n]->ill_conditioned) ++diag.ill_conditioned_modes;
    mode_solutions.push_back({modes[n], std::move(*solved[n])});
  }
  return PdeSolution(problem.domain, problem.domain_end, homogenized->lift(), std::move(mode_solutions), diag);
}

PdeSolution::PdeSolution(BoxDomain domain, double domain_end, LiftFunction lift, std::vector<ModeSolution> modes,
                         PdeDiagnostics diagnostics)
    : domain_(std::move(domain)),
      domain_end_(domain_end),
      lift_(std::move(lift)),
      modes_(std::move(modes)),
      diagnostics_(std::move(diagnostics)) {
  for (const auto& m : modes_) per_dim_ = std::max({per_dim_, m.mode.index[0], m.mode.dim == 2 ? m.mode.index[1] : 0});
}

void PdeSolution::check(const Point& x, double t) const {
  if (!domain_.contains(x)) throw DomainError("pde solution: point outside the domain");
  if (t < 0.0 || t > domain_end_ * (1.0 + 1e-12)) throw DomainError("pde solution: t outside [0, T]");
}

std::vector<Complex> PdeSolution::amplitudes(double t) const {
  std::vector<Complex> w;
  w.reserve(modes_.size());
  for (const auto& m : modes_) w.push_back(eval_solution(m.solution, t));
  return w;
}

namespace {

// sin(n pi x / L) (or its x-derivative) for n = 1..per_dim.
void sine_table(std::vector<double>& out, int per_dim, double x, double length, bool derivative) {
  out.resize(static_cast<std::size_t>(per_dim));
  for (int n = 1; n <= per_dim; ++n) {
    const double k = n * std::numbers::pi / length;
    out[static_cast<std::size_t>(n - 1)] = derivative ? k * std::cos(k * x) : std::sin(k * x);
  }
}

}  // namespace

std::vector<Complex> PdeSolution::values(const std::vector<Point>& points, double t) const {
  for (const auto& x : points) check(x, t);
  const std::vector<Complex> w = amplitudes(t);
  std::vector<Complex> out;
  out.reserve(points.size());
  std::vector<double> s0, s1;
  for (const auto& x : points) {
    Complex sum = lift_.value(x, t);
    sine_table(s0, per_dim_, x[0], domain_.length(0), false);
    if (domain_.dim() == 2) sine_table(s1, per_dim_, x[1], domain_.length(1), false);
    for (std::size_t n = 0; n < modes_.size(); ++n) {
      const auto& mode = modes_[n].mode;
      double basis = s0[static_cast<std::size_t>(mode.index[0] - 1)];
      if (mode.dim == 2) basis *= s1[static_cast<std::size_t>(mode.index[1] - 1)];
      sum += w[n] * basis;
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<Complex> PdeSolution::gradients(const std::vector<Point>& points, double t, int axis) const {
  if (axis < 0 || axis >= domain_.dim()) throw DomainError("pde solution: gradient axis out of range");
  for (const auto& x : points) check(x, t);
  const std::vector<Complex> w = amplitudes(t);
  std::vector<Complex> out;
  out.reserve(points.size());
  std::vector<double> s0, s1;
  for (const auto& x : points) {
    Complex sum = lift_.gradient(x, t, axis);
    sine_table(s0, per_dim_, x[0], domain_.length(0), axis == 0);
    if (domain_.dim() == 2) sine_table(s1, per_dim_, x[1], domain_.length(1), axis == 1);
    for (std::size_t n = 0; n < modes_.size(); ++n) {
      const auto& mode = modes_[n].mode;
      double basis = s0[static_cast<std::size_t>(mode.index[0] - 1)];
      if (mode.dim == 2) basis *= s1[static_cast<std::size_t>(mode.index[1] - 1)];
      sum += w[n] * basis;
    }
    out.push_back(sum);
  }
  return out;
}

Complex eval_pde(const PdeSolution& solution, const Point& x, double t) {
  return solution.values({x}, t).front();
}

Complex eval_pde_gradient(const PdeSolution& solution, const Point& x, double t, int axis) {
  return solution.gradients({x}, t, axis).front();
}

SpatialFunction DomainShift::localize(SpatialFunction f) const {
  return [f = std::move(f), shift = *this](const Point& y) { return f(shift.to_global(y)); };
}

SpaceTimeFunction DomainShift::localize(SpaceTimeFunction f) const {
  return [f = std::move(f), shift = *this](const Point& y, double t) { return f(shift.to_global(y), t); };
}

}  // namespace fracspec
