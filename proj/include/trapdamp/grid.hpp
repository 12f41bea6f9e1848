#pragma once

#include <cstddef>
#include <vector>

#include "trapdamp/errors.hpp"

namespace trapdamp {

// Uniform frequency grid, endpoints included.
struct FrequencyGrid {
  double f_start_hz = 0.0;
  double f_stop_hz = 0.0;
  std::size_t n_points = 0;

  void validate() const {
    if (!(f_start_hz < f_stop_hz))
      throw invalid_parameter("grid requires f_start < f_stop");
    if (n_points < 2) throw invalid_parameter("grid requires n_points >= 2");
  }

  std::vector<double> frequencies() const {
    validate();
    std::vector<double> f(n_points);
    const double step = (f_stop_hz - f_start_hz) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i)
      f[i] = f_start_hz + step * static_cast<double>(i);
    f.back() = f_stop_hz;
    return f;
  }
};

inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2)
    throw invalid_parameter("log_spaced requires 0 < lo < hi and n >= 2");
  std::vector<double> v(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

}  // namespace trapdamp
