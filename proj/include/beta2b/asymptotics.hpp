#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "beta2b/common.hpp"
#include "beta2b/special.hpp"

namespace beta2b {

// Constants of the two-term moment expansion
//   E X_n^k = alpha^k log^{2k} n + r_k log^{2k-1} n + O(log^{2k-2} n)
// with m1 = zeta(2,b), m2 = 2 zeta(3,b), c = -Psi(b) - 1, alpha = 1/(2 m1),
//   r_k = (2/3) k alpha^{k+1} ((2k+1) m2 + 6 c m1).
struct ExpansionCoeffs {
  double b = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  std::vector<double> r;  // r[k-1] = r_k

  double r_k(int k) const { return r.at(static_cast<std::size_t>(k - 1)); }
};

// The closed form must agree with the recursion
//   r_{k+1} = (k+1)/((2k+1) m1) * (r_k + (2k+1) alpha^{k+1} m2 - (Psi(b)+1) alpha^k),
//   r_1 = (m2/(2 m1) - Psi(b) - 1)/m1;
// both routes are evaluated and compared at construction.
inline ExpansionCoeffs expansion_coeffs(int k_max, double b) {
  require_domain(k_max >= 1, "expansion_coeffs: requires k_max >= 1");
  require_domain(b > 0.0 && std::isfinite(b), "expansion_coeffs: requires b > 0");
  ExpansionCoeffs out;
  out.b = b;
  out.m1 = hurwitz_zeta(2.0, b);
  out.m2 = 2.0 * hurwitz_zeta(3.0, b);
  out.c = -digamma(b) - 1.0;
  out.alpha = 1.0 / (2.0 * out.m1);
  out.r.resize(static_cast<std::size_t>(k_max));

  double alpha_pow = out.alpha;  // alpha^k
  double recursive = (out.m2 / (2.0 * out.m1) + out.c) / out.m1;
  for (int k = 1; k <= k_max; ++k) {
    alpha_pow *= out.alpha;  // now alpha^{k+1}
    const double closed = (2.0 / 3.0) * k * alpha_pow *
                          ((2.0 * k + 1.0) * out.m2 + 6.0 * out.c * out.m1);
    if (!(std::abs(closed - recursive) <=
          1e-12 * std::max(1.0, std::abs(closed))))
      throw std::logic_error(
          "expansion_coeffs: closed form disagrees with the recursion");
    out.r[static_cast<std::size_t>(k - 1)] = closed;
    recursive = (k + 1.0) / ((2.0 * k + 1.0) * out.m1) *
                (recursive + (2.0 * k + 1.0) * alpha_pow * out.m2 +
                 out.c * (alpha_pow / out.alpha));
  }
  return out;
}

/// The two explicit expansion terms of E X_n^k.
inline double moment_expansion(std::int64_t n, int k,
                               const ExpansionCoeffs& coeffs) {
  require_domain(n >= 1, "moment_expansion: requires n >= 1");
  const double ln = std::log(static_cast<double>(n));
  return std::pow(coeffs.alpha, k) * std::pow(ln, 2 * k) +
         coeffs.r_k(k) * std::pow(ln, 2 * k - 1);
}

/// Leading variance term (m2 / (3 m1^3)) log^3 n.
inline double variance_expansion(std::int64_t n, const ExpansionCoeffs& coeffs) {
  require_domain(n >= 1, "variance_expansion: requires n >= 1");
  const double ln = std::log(static_cast<double>(n));
  return coeffs.m2 / (3.0 * coeffs.m1 * coeffs.m1 * coeffs.m1) * ln * ln * ln;
}

/// Centers by alpha log^2 n and scales by the leading standard deviation.
inline double clt_normalize(double x, std::int64_t n,
                            const ExpansionCoeffs& coeffs) {
  require_domain(n >= 2, "clt_normalize: requires n >= 2");
  const double ln = std::log(static_cast<double>(n));
  return (x - coeffs.alpha * ln * ln) / std::sqrt(variance_expansion(n, coeffs));
}

/// (mu1, mu2) of the normal limit for a > 2:
/// mu1 = Psi(a-2+b) - Psi(b), mu2 = Psi'(b) - Psi'(a-2+b). Both positive.
inline std::pair<double, double> gt2_constants(double a, double b) {
  require_domain(a > 2.0 && std::isfinite(a), "gt2_constants: requires a > 2");
  require_domain(b > 0.0 && std::isfinite(b), "gt2_constants: requires b > 0");
  return {digamma(a - 2.0 + b) - digamma(b), trigamma(b) - trigamma(a - 2.0 + b)};
}

}  // namespace beta2b
