#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beta2b/asymptotics.hpp"
#include "beta2b/common.hpp"
#include "beta2b/rates.hpp"

// Exact moments and exact distribution of the collision count X_n by dynamic
// programming over the one-step recursion X_n = X_{n - I_n} + 1. Every value
// is a sum of positive terms, so there is no cancellation to worry about;
// double precision carries the full table.

namespace beta2b {

namespace detail {

// Fills p with the normalized first-jump pmf of I_n (length n-1).
inline void fill_jump_row(std::int64_t n, double b, std::vector<double>& p) {
  p.resize(static_cast<std::size_t>(n - 1));
  auto walker = jump_term_walker::start(n, b);
  accurate_sum sum;
  for (std::int64_t k = 1; k < n; ++k) {
    p[static_cast<std::size_t>(k - 1)] = walker.t;
    sum.add(walker.t);
    if (k < n - 1) walker.advance();
  }
  const double total = sum.value();
  const double inv = 1.0 / total;
  for (double& x : p) x *= inv;
}

}  // namespace detail

/// Exact E X_n^k for n = 1..n_max, k = 1..k_max, plus the variance when
/// second moments are available.
struct MomentTable {
  double b = 0.0;
  std::int64_t n_max = 0;
  int k_max = 0;
  std::vector<std::vector<double>> raw;  // raw[k][n], k = 0..k_max
  std::vector<double> var;               // var[n]; empty if k_max < 2

  double moment(std::int64_t n, int k) const {
    return raw.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(n));
  }
  double variance(std::int64_t n) const {
    return var.at(static_cast<std::size_t>(n));
  }
};

inline MomentTable exact_moments(std::int64_t n_max, int k_max, double b,
                                 std::int64_t cap = 20000) {
  require_domain(n_max >= 1, "exact_moments: requires n_max >= 1");
  require_domain(k_max >= 1 && k_max <= 4,
                 "exact_moments: requires 1 <= k_max <= 4");
  require_domain(b > 0.0 && std::isfinite(b), "exact_moments: requires b > 0");
  if (n_max > cap)
    throw budget_error("exact_moments: n_max " + std::to_string(n_max) +
                       " exceeds cap " + std::to_string(cap));

  // binomial coefficients up to k_max
  double choose[5][5] = {};
  for (int k = 0; k <= k_max; ++k) {
    choose[k][0] = choose[k][k] = 1.0;
    for (int j = 1; j < k; ++j)
      choose[k][j] = choose[k - 1][j - 1] + choose[k - 1][j];
  }

  MomentTable table;
  table.b = b;
  table.n_max = n_max;
  table.k_max = k_max;
  table.raw.assign(static_cast<std::size_t>(k_max) + 1,
                   std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0));
  for (auto& v : table.raw[0]) v = 1.0;

  std::vector<double> row;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    detail::fill_jump_row(n, b, row);
    double s[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
    for (int j = 1; j <= k_max; ++j) {
      const double* prev = table.raw[static_cast<std::size_t>(j)].data();
      double acc = 0.0;
      for (std::int64_t i = 1; i < n; ++i)
        acc += row[static_cast<std::size_t>(i - 1)] * prev[n - i];
      s[j] = acc;
    }
    for (int k = 1; k <= k_max; ++k) {
      double value = 0.0;
      for (int j = 0; j <= k; ++j) value += choose[k][j] * s[j];
      table.raw[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = value;
    }
  }
  if (k_max >= 2) {
    table.var.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const double mean = table.raw[1][static_cast<std::size_t>(n)];
      table.var[static_cast<std::size_t>(n)] =
          table.raw[2][static_cast<std::size_t>(n)] - mean * mean;
    }
  }
  return table;
}

/// The full law of X_n; probs[j] = P{X_n = j}, j = 0..n-1.
struct ExactPmf {
  std::int64_t n = 0;
  double b = 0.0;
  std::vector<double> probs;
};

inline ExactPmf exact_distribution(std::int64_t n, double b,
                                   std::int64_t cap = 2000) {
  require_domain(n >= 1, "exact_distribution: requires n >= 1");
  require_domain(b > 0.0 && std::isfinite(b),
                 "exact_distribution: requires b > 0");
  if (n > cap)
    throw budget_error("exact_distribution: n " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<double>> law(static_cast<std::size_t>(n) + 1);
  law[1] = {1.0};
  std::vector<double> row;
  for (std::int64_t m = 2; m <= n; ++m) {
    detail::fill_jump_row(m, b, row);
    auto& out = law[static_cast<std::size_t>(m)];
    out.assign(static_cast<std::size_t>(m), 0.0);
    for (std::int64_t i = 1; i < m; ++i) {
      const double w = row[static_cast<std::size_t>(i - 1)];
      const auto& prev = law[static_cast<std::size_t>(m - i)];
      for (std::size_t j = 0; j < prev.size(); ++j) out[j + 1] += w * prev[j];
    }
  }
  ExactPmf out;
  out.n = n;
  out.b = b;
  out.probs = std::move(law[static_cast<std::size_t>(n)]);
  return out;
}

/// Residual d_n = E X_n - alpha log^2 n - r_1 log n over a grid; the
/// expansion predicts this stays O(1).
struct ResidualDiagnostic {
  double b = 0.0;
  std::vector<std::int64_t> n;
  std::vector<double> d;
};

inline ResidualDiagnostic residual_diagnostic(const MomentTable& table,
                                              std::span<const std::int64_t> n_grid) {
  const auto coeffs = expansion_coeffs(1, table.b);
  ResidualDiagnostic out;
  out.b = table.b;
  for (std::int64_t n : n_grid) {
    require_domain(n >= 1 && n <= table.n_max,
                   "residual_diagnostic: grid point outside table");
    const double ln = std::log(static_cast<double>(n));
    out.n.push_back(n);
    out.d.push_back(table.moment(n, 1) - coeffs.alpha * ln * ln -
                    coeffs.r_k(1) * ln);
  }
  return out;
}

}  // namespace beta2b
