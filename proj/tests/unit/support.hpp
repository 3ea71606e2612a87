#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <random>

#include <doctest.h>

namespace testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Seeded generator for the hand-rolled property loops. A fixed seed keeps failures reproducible;
// the case index is printed through INFO by the callers.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

 private:
  std::mt19937 eng_;
};

}  // namespace testing

#define CHECK_REL(a, b, tol)                                                   \
  do {                                                                         \
    const double lhs_ = (a), rhs_ = (b);                                       \
    INFO(std::setprecision(17) << #a " = " << lhs_ << ", " #b " = " << rhs_);                           \
    CHECK(testing::rel_diff(lhs_, rhs_) <= (tol));                             \
  } while (0)
