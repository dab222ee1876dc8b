#include "fracspec/problem_file.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "fracspec/caputo.hpp"
#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError("problem file: " + where + ": " + what);
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing key '" + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "non-finite number");
  return v;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

/// A real number or [re, im].
Complex complex_number(const json& j, const std::string& where) {
  if (j.is_number()) return number(j, where);
  if (j.is_array() && j.size() == 2) return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
  fail(where, "expected a number or [re, im]");
}

Complex coef_of(const json& j, const std::string& where) {
  return j.contains("coef") ? complex_number(j.at("coef"), where + ".coef") : Complex(1.0);
}

/// [[coef, exponent], ...].
PowerProfile profile(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected [[coef, exponent], ...]");
  std::vector<PowerTerm> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected [coef, exponent]");
    terms.push_back({complex_number(j[i][0], w + "[0]"), number(j[i][1], w + "[1]")});
  }
  try {
    return PowerProfile(std::move(terms));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

// ---- time expressions ------------------------------------------------------------

struct TimeTerm {
  enum Kind { constant, power, sine, cosine, exponential } kind;
  Complex coef;
  double param;
};

TimeFunction time_expr(const json& j, const std::string& where) {
  const json items = j.is_array() ? j : json::array({j});
  std::vector<TimeTerm> terms;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const json& item = items[i];
    if (item.is_number() || (item.is_array() && item.size() == 2)) {
      terms.push_back({TimeTerm::constant, complex_number(item, w), 0.0});
      continue;
    }
    const json& kind = require(item, "kind", w);
    if (!kind.is_string()) fail(w + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    const Complex c = coef_of(item, w);
    if (k == "const") terms.push_back({TimeTerm::constant, c, 0.0});
    else if (k == "power") terms.push_back({TimeTerm::power, c, number(require(item, "exponent", w), w + ".exponent")});
    else if (k == "sin") terms.push_back({TimeTerm::sine, c, item.contains("rate") ? number(item["rate"], w + ".rate") : 1.0});
    else if (k == "cos") terms.push_back({TimeTerm::cosine, c, item.contains("rate") ? number(item["rate"], w + ".rate") : 1.0});
    else if (k == "exp") terms.push_back({TimeTerm::exponential, c, item.contains("rate") ? number(item["rate"], w + ".rate") : 1.0});
    else fail(w + ".kind", "unknown time term '" + k + "' (valid: const, power, sin, cos, exp)");
  }
  return [terms](double t) {
    Complex sum = 0.0;
    for (const auto& term : terms) {
      switch (term.kind) {
        case TimeTerm::constant: sum += term.coef; break;
        case TimeTerm::power: sum += term.coef * std::pow(t, term.param); break;
        case TimeTerm::sine: sum += term.coef * std::sin(term.param * t); break;
        case TimeTerm::cosine: sum += term.coef * std::cos(term.param * t); break;
        case TimeTerm::exponential: sum += term.coef * std::exp(term.param * t); break;
      }
    }
    return sum;
  };
}

OrderFunction order_expr(const json& j, double T, const std::string& where) {
  const TimeFunction f = time_expr(require(j, "expr", where), where + ".expr");
  auto real = [f](double t) { return f(t).real(); };
  const std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : where;
  try {
    if (j.contains("ceiling")) return OrderFunction(real, integer(j["ceiling"], where + ".ceiling"), T, label);
    return OrderFunction::inferred(real, T, label);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

// ---- space expressions ------------------------------------------------------------

SpatialFunction space_item(const json& item, const BoxDomain& domain, const std::string& w) {
  const json& kind = require(item, "kind", w);
  if (!kind.is_string()) fail(w + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "const") {
    const Complex c = coef_of(item, w);
    return [c](const Point&) { return c; };
  }
  if (k == "polynomial") {
    // terms: [[coef, px, py], ...], coef may be [re, im]
    const json& terms = require(item, "terms", w);
    if (!terms.is_array()) fail(w + ".terms", "expected an array");
    std::vector<std::tuple<Complex, int, int>> mono;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tw = w + ".terms[" + std::to_string(i) + "]";
      if (!terms[i].is_array() || terms[i].size() < 2 || terms[i].size() > 3) fail(tw, "expected [coef, px] or [coef, px, py]");
      const int px = integer(terms[i][1], tw + "[1]");
      const int py = terms[i].size() == 3 ? integer(terms[i][2], tw + "[2]") : 0;
      if (px < 0 || py < 0) fail(tw, "negative power");
      mono.emplace_back(complex_number(terms[i][0], tw + "[0]"), px, py);
    }
    return [mono](const Point& x) {
      Complex sum = 0.0;
      for (const auto& [c, px, py] : mono) sum += c * std::pow(x[0], px) * std::pow(x[1], py);
      return sum;
    };
  }
  if (k == "exp-sum") {
    // terms: [[coef, a1, a2, b], ...] -> coef * exp(a1 x1 + a2 x2 + b)
    const json& terms = require(item, "terms", w);
    if (!terms.is_array()) fail(w + ".terms", "expected an array");
    std::vector<std::array<Complex, 4>> list;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tw = w + ".terms[" + std::to_string(i) + "]";
      if (!terms[i].is_array() || terms[i].size() != 4) fail(tw, "expected [coef, a1, a2, b]");
      list.push_back({complex_number(terms[i][0], tw), complex_number(terms[i][1], tw), complex_number(terms[i][2], tw),
                      complex_number(terms[i][3], tw)});
    }
    return [list](const Point& x) {
      Complex sum = 0.0;
      for (const auto& e : list) sum += e[0] * std::exp(e[1] * x[0] + e[2] * x[1] + e[3]);
      return sum;
    };
  }
  if (k == "sech-sum") {
    // terms: [[coef, scale, shift], ...] -> coef * sech(scale (x1 - shift))
    const json& terms = require(item, "terms", w);
    if (!terms.is_array()) fail(w + ".terms", "expected an array");
    std::vector<std::tuple<Complex, double, double>> list;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tw = w + ".terms[" + std::to_string(i) + "]";
      if (!terms[i].is_array() || terms[i].size() != 3) fail(tw, "expected [coef, scale, shift]");
      list.emplace_back(complex_number(terms[i][0], tw), number(terms[i][1], tw), number(terms[i][2], tw));
    }
    return [list](const Point& x) {
      Complex sum = 0.0;
      for (const auto& [c, a, s] : list) sum += c / std::cosh(a * (x[0] - s));
      return sum;
    };
  }
  if (k == "gaussian") {
    const Complex c = coef_of(item, w);
    const double width = number(require(item, "width", w), w + ".width");
    const json& center = require(item, "center", w);
    if (!center.is_array() || static_cast<int>(center.size()) != domain.dim()) fail(w + ".center", "one coordinate per dimension");
    Point p{};
    for (std::size_t d = 0; d < center.size(); ++d) p[d] = number(center[d], w + ".center");
    const int dim = domain.dim();
    return [c, width, p, dim](const Point& x) {
      double r2 = 0.0;
      for (int d = 0; d < dim; ++d) r2 += (x[static_cast<std::size_t>(d)] - p[static_cast<std::size_t>(d)]) * (x[static_cast<std::size_t>(d)] - p[static_cast<std::size_t>(d)]);
      return c * std::exp(-width * r2);
    };
  }
  if (k == "sine") {
    // coef * prod_i sin(n_i pi x_i / L_i); optional "phase" shifts to cos via pi/2.
    const Complex c = coef_of(item, w);
    const json& modes = require(item, "modes", w);
    if (!modes.is_array() || static_cast<int>(modes.size()) != domain.dim()) fail(w + ".modes", "one wavenumber per dimension");
    std::array<double, 2> k_{0.0, 0.0};
    for (std::size_t d = 0; d < modes.size(); ++d) k_[d] = number(modes[d], w + ".modes") * std::numbers::pi / domain.length(static_cast<int>(d));
    const double phase = item.contains("phase") ? number(item["phase"], w + ".phase") : 0.0;
    const int dim = domain.dim();
    return [c, k_, phase, dim](const Point& x) {
      Complex v = c;
      for (int d = 0; d < dim; ++d) v *= std::sin(k_[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)] + phase);
      return v;
    };
  }
  fail(w + ".kind", "unknown space term '" + k + "' (valid: const, polynomial, exp-sum, sech-sum, gaussian, sine)");
}

SpatialFunction space_expr(const json& j, const BoxDomain& domain, const std::string& where) {
  if (j.is_null()) return [](const Point&) { return Complex(0.0); };
  if (j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number())) {
    const Complex c = complex_number(j, where);
    return [c](const Point&) { return c; };
  }
  const json items = j.is_array() ? j : json::array({j});
  std::vector<SpatialFunction> parts;
  for (std::size_t i = 0; i < items.size(); ++i) parts.push_back(space_item(items[i], domain, where + "[" + std::to_string(i) + "]"));
  if (parts.size() == 1) return parts.front();
  return [parts](const Point& x) {
    Complex sum = 0.0;
    for (const auto& p : parts) sum += p(x);
    return sum;
  };
}

std::vector<SeparableTerm> separable_list(const json& j, const BoxDomain& domain, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of {space, profile}");
  std::vector<SeparableTerm> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    out.push_back({space_expr(require(j[i], "space", w), domain, w + ".space"), profile(require(j[i], "profile", w), w + ".profile")});
  }
  return out;
}

SymbolKind symbol_kind(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  const std::string s = j.get<std::string>();
  if (s == "identity") return SymbolKind::identity;
  if (s == "laplacian") return SymbolKind::laplacian;
  if (s == "bilaplacian") return SymbolKind::bilaplacian;
  fail(where, "unknown symbol '" + s + "' (valid: identity, laplacian, bilaplacian)");
}

}  // namespace

LoadedProblem parse_problem(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("problem file: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected an object");

  const json& dom = require(root, "domain", "$");
  if (!dom.is_array() || dom.empty() || dom.size() > 2) fail("domain", "expected [L] or [L1, L2]");
  std::vector<double> lengths;
  for (std::size_t d = 0; d < dom.size(); ++d) lengths.push_back(number(dom[d], "domain"));
  std::optional<BoxDomain> domain_opt;
  try {
    domain_opt.emplace(lengths);
  } catch (const Error& e) {
    fail("domain", e.what());
  }
  const BoxDomain domain = *domain_opt;

  DomainShift shift;
  if (root.contains("origin")) {
    const json& o = root["origin"];
    if (!o.is_array() || o.size() != dom.size()) fail("origin", "one coordinate per dimension");
    for (std::size_t d = 0; d < o.size(); ++d) shift.origin[d] = number(o[d], "origin");
  }
  const BoxDomain global_domain = domain;  // space expressions see global coordinates
  auto localize = [&shift](SpatialFunction f) { return shift.localize(std::move(f)); };

  const double T = number(require(root, "T", "$"), "T");
  if (!(T > 0.0)) fail("T", "must be positive");
  const OrderFunction leading = order_expr(require(root, "leading_order", "$"), T, "leading_order");

  std::vector<PdeTerm> terms;
  if (root.contains("terms")) {
    const json& list = root["terms"];
    if (!list.is_array()) fail("terms", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string w = "terms[" + std::to_string(i) + "]";
      const json& t = list[i];
      PdeTerm term{std::nullopt, constant_time_function(1.0), SpatialSymbol{SymbolKind::identity}, TermSide::lhs_time};
      const std::string side = require(t, "side", w).is_string() ? t["side"].get<std::string>() : "";
      if (side == "lhs_time") term.side = TermSide::lhs_time;
      else if (side == "rhs_spatial") term.side = TermSide::rhs_spatial;
      else fail(w + ".side", "expected lhs_time or rhs_spatial");
      if (t.contains("symbol")) term.symbol.kind = symbol_kind(t["symbol"], w + ".symbol");
      if (t.contains("coefficient")) term.coefficient = time_expr(t["coefficient"], w + ".coefficient");
      if (t.contains("order") && !t["order"].is_null()) term.order = order_expr(t["order"], T, w + ".order");
      terms.push_back(std::move(term));
    }
  }

  // Forcing: sum of space(x) * time(t); time is a profile, the Caputo image of
  // a profile under a named order, or a time expression.
  struct ForcingPart {
    SpatialFunction space;
    std::function<Complex(double)> time;
  };
  std::vector<ForcingPart> forcing;
  const json& flist = require(root, "forcing", "$");
  if (!flist.is_array()) fail("forcing", "expected a list");
  for (std::size_t i = 0; i < flist.size(); ++i) {
    const std::string w = "forcing[" + std::to_string(i) + "]";
    const json& part = flist[i];
    SpatialFunction space = localize(space_expr(require(part, "space", w), global_domain, w + ".space"));
    const json& time = require(part, "time", w);
    TimeFunction tf;
    if (time.contains("profile")) {
      tf = [p = profile(time["profile"], w + ".time.profile")](double t) { return p(t); };
    } else if (time.contains("caputo")) {
      const json& cj = time["caputo"];
      const PowerProfile p = profile(require(cj, "profile", w + ".time.caputo"), w + ".time.caputo.profile");
      const json& oj = require(cj, "order", w + ".time.caputo");
      OrderFunction order = leading;
      if (oj.is_string() && oj.get<std::string>() == "leading") {
        order = leading;
      } else if (oj.is_number_integer()) {
        const int idx = oj.get<int>();
        if (idx < 0 || idx >= static_cast<int>(terms.size()) || !terms[static_cast<std::size_t>(idx)].order) {
          fail(w + ".time.caputo.order", "term index without an order");
        }
        order = *terms[static_cast<std::size_t>(idx)].order;
      } else {
        order = order_expr(oj, T, w + ".time.caputo.order");
      }
      tf = [p, order](double t) { return caputo_profile(p, order, t); };
    } else if (time.contains("expr")) {
      tf = time_expr(time["expr"], w + ".time.expr");
    } else {
      fail(w + ".time", "expected one of profile, caputo, expr");
    }
    forcing.push_back({std::move(space), std::move(tf)});
  }

  BoundaryData boundary;
  if (root.contains("boundary")) {
    const json& b = root["boundary"];
    auto read = [&](const char* key, std::vector<SeparableTerm>& out) {
      if (!b.contains(key)) return;
      out = separable_list(b[key], global_domain, std::string("boundary.") + key);
      for (auto& term : out) term.shape = localize(term.shape);
    };
    read("dirichlet", boundary.dirichlet);
    read("laplacian", boundary.laplacian);
    read("neumann", boundary.neumann);
  }

  std::vector<SpatialFunction> initial;
  const int m = leading.ceiling();
  if (root.contains("initial")) {
    const json& ini = root["initial"];
    if (!ini.is_array()) fail("initial", "expected a list of space expressions");
    for (std::size_t i = 0; i < ini.size(); ++i) {
      initial.push_back(localize(space_expr(ini[i], global_domain, "initial[" + std::to_string(i) + "]")));
    }
  } else {
    for (int i = 0; i < m; ++i) initial.push_back([](const Point&) { return Complex(0.0); });
  }

  LoadedProblem out{PdeProblem{domain, T, leading, std::move(terms), {}, std::move(boundary), std::move(initial), false}, {}, std::nullopt, shift};
  out.problem.forcing = [forcing](const Point& x, double t) {
    Complex sum = 0.0;
    for (const auto& part : forcing) sum += part.space(x) * part.time(t);
    return sum;
  };
  if (root.contains("complex_field")) {
    if (!root["complex_field"].is_boolean()) fail("complex_field", "expected a boolean");
    out.problem.complex_field = root["complex_field"].get<bool>();
  }

  if (root.contains("exact")) {
    const auto parts = separable_list(root["exact"], global_domain, "exact");
    std::vector<SeparableTerm> local;
    for (const auto& p : parts) local.push_back({localize(p.shape), p.profile});
    out.exact = [local](const Point& x, double t) {
      Complex sum = 0.0;
      for (const auto& p : local) sum += p.shape(x) * p.profile(t);
      return sum;
    };
  }

  if (root.contains("solver")) {
    const json& s = root["solver"];
    if (!s.is_object()) fail("solver", "expected an object");
    static const std::vector<std::string> keys{"N", "K", "delta", "quad", "rbf_shape", "rbf_per_side", "threads"};
    for (const auto& [key, _] : s.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail("solver." + key, "unknown key (valid: N, K, delta, quad, rbf_shape, rbf_per_side, threads)");
      }
    }
    auto& o = out.options;
    if (s.contains("N")) o.modes_per_dim = integer(s["N"], "solver.N");
    if (s.contains("K")) o.basis_size = integer(s["K"], "solver.K");
    if (s.contains("delta")) o.delta = number(s["delta"], "solver.delta");
    if (s.contains("quad")) o.quadrature_order = integer(s["quad"], "solver.quad");
    if (s.contains("rbf_shape")) o.rbf_shape = number(s["rbf_shape"], "solver.rbf_shape");
    if (s.contains("rbf_per_side")) o.rbf_per_side = integer(s["rbf_per_side"], "solver.rbf_per_side");
    if (s.contains("threads")) o.threads = integer(s["threads"], "solver.threads");
  }

  out.problem.validate();
  return out;
}

LoadedProblem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open problem file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return parse_problem(text.str());
}

}  // namespace fracspec
