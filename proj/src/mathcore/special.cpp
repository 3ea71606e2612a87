#include <cmath>
#include <limits>
#include <string>

#include "uncrel/errors.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::math {

namespace {

constexpr double kEuler = 0.57721566490153286061;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 2000;

}  // namespace

double omega(int d) {
  if (d < 1) throw DomainError("omega: dimension must be >= 1, got " + std::to_string(d));
  const double half = 0.5 * d;
  return 2.0 * std::exp(half * std::log(pi) - log_gamma(half));
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite");
  }
#if defined(__GLIBC__)
  // lgamma_r does not touch the global signgam, so concurrent callers do not race.
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: arguments must be positive");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double expint_en(int n, double x) {
  if (n < 0 || x < 0.0 || (x == 0.0 && n <= 1)) {
    throw DomainError("expint_en: requires n >= 0, x > 0 (x = 0 only for n >= 2)");
  }
  if (n == 0) return std::exp(-x) / x;
  const int nm1 = n - 1;
  if (x == 0.0) return 1.0 / nm1;

  if (x > 1.0) {
    // Modified Lentz evaluation of the continued fraction.
    double b = x + n;
    double c = 1.0 / std::numeric_limits<double>::min();
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
      const double an = -static_cast<double>(i) * (nm1 + i);
      b += 2.0;
      d = 1.0 / (an * d + b);
      c = b + an / c;
      const double del = c * d;
      h *= del;
      if (std::abs(del - 1.0) <= kEps) return h * std::exp(-x);
    }
    throw ConvergenceError("expint_en: continued fraction failed to converge");
  }

  double ans = (nm1 != 0) ? 1.0 / nm1 : -std::log(x) - kEuler;
  double fact = 1.0;
  for (int i = 1; i <= kMaxIter; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -kEuler;
      for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
      del = fact * (-std::log(x) + psi);
    }
    ans += del;
    if (std::abs(del) < std::abs(ans) * kEps) return ans;
  }
  throw ConvergenceError("expint_en: series failed to converge");
}

}  // namespace uncrel::math
