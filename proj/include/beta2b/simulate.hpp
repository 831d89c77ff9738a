#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "beta2b/common.hpp"
#include "beta2b/rates.hpp"
#include "beta2b/rng.hpp"
#include "beta2b/special.hpp"

namespace beta2b {

struct SimConfig {
  std::int64_t n = 1;
  double b = 1.0;
  std::int64_t replicates = 1;
  std::uint64_t seed = 0;
  double eps = 1e-6;  // subordinator jump truncation
  int workers = 1;
};

inline void validate(const SimConfig& cfg) {
  require_domain(cfg.n >= 1, "SimConfig: requires n >= 1");
  require_domain(cfg.b > 0.0 && std::isfinite(cfg.b), "SimConfig: requires b > 0");
  require_domain(cfg.replicates >= 1, "SimConfig: requires replicates >= 1");
  require_domain(cfg.eps > 0.0 && cfg.eps <= 1e-2,
                 "SimConfig: requires eps in (0, 1e-2]");
  require_domain(cfg.workers >= 1, "SimConfig: requires workers >= 1");
}

/// Inverse-CDF draw of I_n from the uniform variate u, scanning the term
/// recurrence cumulatively from k = 1. The scan length equals the drawn k,
/// so a full jump chain costs O(n) total. Returns n-1 if rounding exhausts
/// the accumulation.
inline std::int64_t sample_jump(std::int64_t n, double b, double u) {
  require_domain(n >= 2, "sample_jump: requires n >= 2");
  if (n == 2) return 1;
  const double target = u * h_fn(n, b);
  auto walker = jump_term_walker::start(n, b);
  double cum = walker.t;
  while (cum < target && walker.k < n - 1) {
    walker.advance();
    cum += walker.t;
  }
  return walker.k;
}

/// One realization of X_n: run the block-count chain from n down to 1 and
/// count its jumps.
inline std::int64_t collision_chain(std::int64_t n, double b,
                                    xoshiro256ss& rng) {
  std::int64_t m = n;
  std::int64_t collisions = 0;
  while (m >= 2) {
    m -= sample_jump(m, b, rng.uniform01());
    ++collisions;
  }
  return collisions;
}

/// replicates i.i.d. samples of X_n. Output depends only on
/// (seed, n, b, replicates); the worker count changes nothing but wall time.
inline std::vector<std::int64_t> sample_collisions(const SimConfig& cfg,
                                                   double budget = 4e9) {
  validate(cfg);
  const double cost = static_cast<double>(cfg.replicates) *
                      static_cast<double>(cfg.n);
  if (cost > budget)
    throw budget_error("sample_collisions: estimated cost " +
                       std::to_string(cost) + " exceeds budget " +
                       std::to_string(budget));
  std::vector<std::int64_t> out(static_cast<std::size_t>(cfg.replicates));
  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t r = begin; r < end; ++r) {
      auto rng = replicate_stream(cfg.seed, static_cast<std::uint64_t>(r));
      out[static_cast<std::size_t>(r)] = collision_chain(cfg.n, cfg.b, rng);
    }
  };
  const int workers = static_cast<int>(
      std::min<std::int64_t>(cfg.workers, cfg.replicates));
  if (workers <= 1) {
    run_range(0, cfg.replicates);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = cfg.replicates * w / workers;
    const std::int64_t end = cfg.replicates * (w + 1) / workers;
    pool.emplace_back(run_range, begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace beta2b
