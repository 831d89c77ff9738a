#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "beta2b/common.hpp"
#include "beta2b/special.hpp"

// Collision rates of the restricted coalescent driven by a beta(a,b) measure,
// and the first-jump distribution I_n of the a = 2 family. Every gamma ratio
// goes through log_gamma differences; Gamma(n+1) on its own overflows a
// double already at n = 171.

namespace beta2b {

struct BetaParams {
  double a;
  double b;
  BetaParams(double a_, double b_) : a(a_), b(b_) {
    require_domain(a > 0.0 && std::isfinite(a), "BetaParams: requires a > 0");
    require_domain(b > 0.0 && std::isfinite(b), "BetaParams: requires b > 0");
  }
};

/// Rate g_nk at which n blocks collide down to k blocks, 1 <= k < n.
inline double collision_rate(const BetaParams& params, std::int64_t n,
                             std::int64_t k) {
  require_domain(k >= 1 && k < n, "collision_rate: requires 1 <= k < n");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double first = nd - kd - 1.0 + params.a;
  if (first <= 0.0)
    throw std::domain_error("collision_rate: beta integral diverges");
  const double log_choose =
      log_gamma(nd + 1.0) - log_gamma(kd) - log_gamma(nd - kd + 2.0);
  return std::exp(log_choose + log_beta(first, kd - 1.0 + params.b) -
                  log_beta(params.a, params.b));
}

/// Total first-jump rate g_n, the sum of g_nk over k.
inline double total_rate(const BetaParams& params, std::int64_t n) {
  require_domain(n >= 2, "total_rate: requires n >= 2");
  accurate_sum sum;
  for (std::int64_t k = 1; k < n; ++k) sum.add(collision_rate(params, n, k));
  return sum.value();
}

/// Closed form of g_n for a = 2: H(n, b) / B(2, b).
inline double total_rate_beta2(std::int64_t n, double b) {
  require_domain(n >= 2, "total_rate_beta2: requires n >= 2");
  return h_fn(n, b) / beta_fn(2.0, b);
}

// Walks the unnormalized first-jump terms t_k = H(n,b) * P{I_n = k} using
// the term recurrence, anchored at k = 1. One exp() per walk, no per-term
// gamma evaluations.
struct jump_term_walker {
  std::int64_t n;
  double b;
  std::int64_t k;
  double t;

  static jump_term_walker start(std::int64_t n, double b) {
    const double nd = static_cast<double>(n);
    const double log_t1 = (log_gamma(nd + b - 2.0) - log_gamma(nd - 1.0)) +
                          (log_gamma(nd + 1.0) - log_gamma(nd + b)) -
                          0.69314718055994530942;
    return {n, b, 1, std::exp(log_t1)};
  }

  // k -> k+1; valid while k <= n-2
  void advance() {
    const double num = static_cast<double>(k + 1) * static_cast<double>(n - k - 1);
    const double den =
        static_cast<double>(k + 2) * (static_cast<double>(n - k) + b - 2.0);
    t *= num / den;
    ++k;
  }
};

/// Distribution of the first-jump decrement I_n for the a = 2 coalescent.
/// probs[k-1] = P{I_n = k}, k = 1..n-1.
struct JumpPmf {
  std::int64_t n = 0;
  double b = 0.0;
  std::vector<double> probs;
};

inline JumpPmf jump_pmf(std::int64_t n, double b) {
  require_domain(n >= 2, "jump_pmf: requires n >= 2");
  require_domain(b > 0.0 && std::isfinite(b), "jump_pmf: requires b > 0");
  JumpPmf out;
  out.n = n;
  out.b = b;
  out.probs.resize(static_cast<std::size_t>(n - 1));
  auto walker = jump_term_walker::start(n, b);
  accurate_sum sum;
  for (std::int64_t k = 1; k < n; ++k) {
    out.probs[static_cast<std::size_t>(k - 1)] = walker.t;
    sum.add(walker.t);
    if (k < n - 1) walker.advance();
  }
  const double total = sum.value();
  const double h = h_fn(n, b);
  if (!(std::abs(total - h) <= 1e-9 * h))
    throw std::logic_error("jump_pmf: term sum drifted from H(n, b)");
  for (double& p : out.probs) p /= total;
  return out;
}

/// Scaled gamma-ratio error n * (j/n)^{2-b} * |G(j,n,b) - (j/n)^{b-1}| where
/// G is Gamma(j+b-1)Gamma(n+1) / (Gamma(j)Gamma(n+b)). Exactly 0 at b = 1.
inline double gamma_ratio_error(std::int64_t n, std::int64_t j, double b) {
  require_domain(j >= 1 && j <= n - 1,
                 "gamma_ratio_error: requires 1 <= j <= n-1");
  require_domain(b > 0.0 && std::isfinite(b), "gamma_ratio_error: requires b > 0");
  const double nd = static_cast<double>(n);
  const double jd = static_cast<double>(j);
  const double log_ratio = (log_gamma(jd + b - 1.0) - log_gamma(jd)) +
                           (log_gamma(nd + 1.0) - log_gamma(nd + b));
  const double log_target = (b - 1.0) * (std::log(jd) - std::log(nd));
  return jd * std::abs(std::expm1(log_ratio - log_target));
}

}  // namespace beta2b
