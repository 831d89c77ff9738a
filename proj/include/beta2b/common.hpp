#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace beta2b {

inline constexpr std::string_view kVersion = "0.1.0";

/// Thrown when a computation would exceed a configured resource budget
/// (table caps, replicate budgets, path horizons). Callers are expected to
/// refuse rather than truncate.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_domain(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

/// Neumaier compensated summation.
class accurate_sum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace beta2b
