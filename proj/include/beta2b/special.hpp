#pragma once

#include <cmath>
#include <cstdint>

#include "beta2b/common.hpp"

// Scalar special functions on the positive reals, double precision only.
// Digamma and trigamma shift the argument above 10 by the usual recurrences
// and finish with the Bernoulli asymptotic series; the Hurwitz zeta uses
// Euler-Maclaurin with the partial sum taken far enough out that the
// remainder bound sits below 1e-13.

namespace beta2b {

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
  require_domain(x > 0.0 && std::isfinite(x), "log_gamma: requires x > 0");
#if defined(__unix__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

/// Psi(x) = d/dx log Gamma(x) for x > 0. Absolute error ~1e-13 of magnitude.
inline double digamma(double x) {
  require_domain(x > 0.0 && std::isfinite(x), "digamma: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 -
                                              inv2 * (691.0 / 32760 -
                                                      inv2 * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

/// Psi'(x) for x > 0.
inline double trigamma(double x) {
  require_domain(x > 0.0 && std::isfinite(x), "trigamma: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      1.0 / 6 -
      inv2 * (1.0 / 30 -
              inv2 * (1.0 / 42 -
                      inv2 * (1.0 / 30 -
                              inv2 * (5.0 / 66 -
                                      inv2 * (691.0 / 2730 -
                                              inv2 * (7.0 / 6))))));
  return acc + inv * (1.0 + inv * (0.5 + inv * series));
}

/// Hurwitz zeta(s, b) = sum_{i>=0} (i+b)^{-s} for s > 1, b > 0.
inline double hurwitz_zeta(double s, double b) {
  require_domain(s > 1.0 && std::isfinite(s), "hurwitz_zeta: requires s > 1");
  require_domain(b > 0.0 && std::isfinite(b), "hurwitz_zeta: requires b > 0");
  // B_{2j}/(2j)! for the Euler-Maclaurin correction terms
  static constexpr double kBern[8] = {
      8.3333333333333333e-02,  -1.3888888888888889e-03,
      3.3068783068783069e-05,  -8.2671957671957672e-07,
      2.0876756987868099e-08,  -5.2841901386874932e-10,
      1.3382536530684679e-11,  -3.3896802963225829e-13};
  std::int64_t terms = static_cast<std::int64_t>(std::ceil(18.0 - b));
  if (terms < 0) terms = 0;
  accurate_sum sum;
  for (std::int64_t i = 0; i < terms; ++i) sum.add(std::pow(i + b, -s));
  const double a = static_cast<double>(terms) + b;
  const double inva2 = 1.0 / (a * a);
  double tail = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;                      // (s)_{2j-1}
  double apow = std::pow(a, -s - 1.0);    // a^{-s-2j+1}
  for (int j = 1; j <= 8; ++j) {
    tail += kBern[j - 1] * rising * apow;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    apow *= inva2;
  }
  return sum.value() + tail;
}

inline double log_beta(double x, double y) {
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

/// B(x, y), the beta integral over (0,1).
inline double beta_fn(double x, double y) {
  require_domain(x > 0.0 && y > 0.0, "beta_fn: requires x, y > 0");
  return std::exp(log_beta(x, y));
}

/// m_r of the measure e^{-bt}/(1-e^{-t}) dt on (0,inf): r! * zeta(r+1, b).
inline double levy_moment(int r, double b) {
  require_domain(r >= 1, "levy_moment: requires r >= 1");
  require_domain(b > 0.0 && std::isfinite(b), "levy_moment: requires b > 0");
  double factorial = 1.0;
  for (int i = 2; i <= r; ++i) factorial *= i;
  return factorial * hurwitz_zeta(r + 1.0, b);
}

/// H(n, b) = b/(b+n-1) + Psi(b+n-1) - Psi(b) - 1.
inline double h_fn(std::int64_t n, double b) {
  require_domain(n >= 1, "h_fn: requires n >= 1");
  require_domain(b > 0.0 && std::isfinite(b), "h_fn: requires b > 0");
  const double shifted = b + static_cast<double>(n) - 1.0;
  return b / shifted + digamma(shifted) - digamma(b) - 1.0;
}

/// Standard normal CDF via the complementary error function.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

}  // namespace beta2b
