#pragma once

#include <cmath>

#include "beta2b/common.hpp"

namespace beta2b {

// Tanh-sinh quadrature over (0,1). The integrand receives (x, 1-x) with the
// side nearer an endpoint computed directly from the node transform, so
// endpoint-singular integrands such as (1-x)^{b-1} lose no precision.
template <class F>
double integrate_01(F&& f, double rel_tol = 1e-12, int max_level = 12) {
  constexpr double kPi = 3.14159265358979323846;
  constexpr double kHalfPi = 1.57079632679489661923;
  constexpr double kTMax = 6.0;

  auto node_pair = [&f](double t) -> double {
    const double u = kHalfPi * std::sinh(t);
    const double e2 = std::exp(-2.0 * u);  // t > 0 so u > 0
    const double near = e2 / (1.0 + e2);
    if (near == 0.0) return 0.0;
    const double far = 1.0 / (1.0 + e2);
    const double w = kPi * std::cosh(t) * e2 / ((1.0 + e2) * (1.0 + e2));
    double s = 0.0;
    const double hi = f(far, near);  // node near 1
    const double lo = f(near, far);  // node near 0
    if (hi != 0.0) s += w * hi;
    if (lo != 0.0) s += w * lo;
    return s;
  };

  double h = 1.0;
  double sum = 0.25 * kPi * f(0.5, 0.5);
  for (int k = 1; k * h <= kTMax; ++k) sum += node_pair(k * h);
  double estimate = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) sum += node_pair(t);
    const double refined = h * sum;
    const double change = std::abs(refined - estimate);
    estimate = refined;
    if (level >= 3 && change <= rel_tol * std::abs(refined) + 1e-300) break;
  }
  return estimate;
}

/// Integral of a smooth scalar function over [a, b].
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-12) {
  const double width = b - a;
  return width * integrate_01(
                     [&](double x, double) { return f(a + width * x); },
                     rel_tol);
}

}  // namespace beta2b
