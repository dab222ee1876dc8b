#include "fracspec/order_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

double sample_time(int i, double domain_end) {
  return domain_end * static_cast<double>(i) /
         static_cast<double>(OrderFunction::kValidationPoints - 1);
}

}  // namespace

OrderFunction::OrderFunction(Fn fn, int ceiling, double domain_end, std::string label)
    : fn_(std::move(fn)), ceiling_(ceiling), domain_end_(domain_end), label_(std::move(label)) {
  if (!fn_) throw ValidationError("order function: empty callable");
  if (ceiling_ < 1) throw ValidationError("order function: ceiling must be >= 1");
  if (!(domain_end_ > 0.0) || !std::isfinite(domain_end_)) {
    throw ValidationError("order function: domain end must be positive");
  }
  max_sampled_ = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kValidationPoints; ++i) {
    const double t = sample_time(i, domain_end_);
    const double a = fn_(t);
    if (!std::isfinite(a) || a <= ceiling_ - 1 || a > ceiling_) {
      std::ostringstream msg;
      msg << "order function" << (label_.empty() ? "" : " '" + label_ + "'") << ": alpha("
          << t << ") = " << a << " violates " << ceiling_ - 1 << " < alpha <= " << ceiling_;
      throw ValidationError(msg.str());
    }
    max_sampled_ = std::max(max_sampled_, a);
  }
}

OrderFunction OrderFunction::inferred(Fn fn, double domain_end, std::string label) {
  if (!fn) throw ValidationError("order function: empty callable");
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kValidationPoints; ++i) hi = std::max(hi, fn(sample_time(i, domain_end)));
  if (!std::isfinite(hi)) throw ValidationError("order function: non-finite samples");
  const int ceiling = std::max(1, static_cast<int>(std::ceil(hi)));
  return OrderFunction(std::move(fn), ceiling, domain_end, std::move(label));
}

OrderFunction OrderFunction::constant(double value, double domain_end) {
  std::ostringstream label;
  label << value;
  return inferred([value](double) { return value; }, domain_end, label.str());
}

}  // namespace fracspec
