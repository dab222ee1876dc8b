#pragma once

#include <array>
#include <complex>
#include <functional>

namespace fracspec {

using Complex = std::complex<double>;

/// A point of a box domain. Only the first `dim` coordinates are meaningful;
/// 1D problems leave x[1] at zero.
using Point = std::array<double, 2>;

using TimeFunction = std::function<Complex(double)>;
using SpatialFunction = std::function<Complex(const Point&)>;
using SpaceTimeFunction = std::function<Complex(const Point&, double)>;

inline TimeFunction constant_time_function(Complex c) {
  return [c](double) { return c; };
}

}  // namespace fracspec
