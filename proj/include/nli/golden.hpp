#pragma once

#include <cmath>
#include <utility>

namespace nli {

/// Golden-section minimization of a unimodal scalar function on [lo, hi].
/// Shrinks the bracket until hi - lo < xtol and returns (argmin, min value).
template <typename F>
std::pair<double, double> golden_section_minimize(F&& f, double lo, double hi, double xtol) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;   // 1/phi
  static const double inv_phi2 = inv_phi * inv_phi;

  double a = lo, b = hi;
  double h = b - a;
  double c = a + inv_phi2 * h;
  double d = a + inv_phi * h;
  double fc = f(c), fd = f(d);

  while (h > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = a + inv_phi2 * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + inv_phi * h;
      fd = f(d);
    }
  }
  return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace nli
