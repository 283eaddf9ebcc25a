#pragma once

#include <cmath>
#include <utility>

namespace semihilb {

struct ScalarMinimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of a unimodal function on [lo, hi].
/// Stops when the bracket is narrower than x_tol or after max_iter steps.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                      int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

template <typename F>
ScalarMinimum golden_section_maximize(F&& f, double lo, double hi, double x_tol,
                                      int max_iter = 200) {
  auto r = golden_section_minimize([&](double x) { return -f(x); }, lo, hi, x_tol, max_iter);
  return {r.x, -r.value};
}

}  // namespace semihilb
