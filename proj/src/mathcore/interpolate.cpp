#include <algorithm>
#include <cmath>
#include <sstream>

#include "uncrel/errors.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::math {

namespace {

// Derivative at x[i] of the Lagrange polynomial through x[lo .. lo+m).
double lagrange_slope(std::span<const double> x, std::span<const double> y, std::size_t i,
                      std::size_t lo, std::size_t m) {
  double slope = 0.0;
  for (std::size_t j = lo; j < lo + m; ++j) {
    double w;
    if (j == i) {
      w = 0.0;
      for (std::size_t k = lo; k < lo + m; ++k) {
        if (k != i) w += 1.0 / (x[i] - x[k]);
      }
    } else {
      double num = 1.0;
      double den = 1.0;
      for (std::size_t k = lo; k < lo + m; ++k) {
        if (k != j) den *= x[j] - x[k];
        if (k != j && k != i) num *= x[i] - x[k];
      }
      w = num / den;
    }
    slope += w * y[j];
  }
  return slope;
}

}  // namespace

MonotoneInterpolant::MonotoneInterpolant(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
  const std::size_t n = x_.size();
  if (n != y_.size()) throw FormatError("interpolate_monotone: x and y differ in length");
  if (n < 2) throw FormatError("interpolate_monotone: need at least two samples");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
      throw FormatError("interpolate_monotone: non-finite sample");
    }
    if (y_[i] < 0.0) {
      std::ostringstream os;
      os << "interpolate_monotone: negative ordinate " << y_[i] << " at x = " << x_[i];
      throw FormatError(os.str());
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) {
      std::ostringstream os;
      os << "interpolate_monotone: abscissae not strictly increasing at index " << i;
      throw FormatError(os.str());
    }
  }

  std::vector<double> secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

  slope_.assign(n, 0.0);
  const std::size_t m = std::min<std::size_t>(n, 5);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = std::min(i >= m / 2 ? i - m / 2 : 0, n - m);
    slope_[i] = (n == 2) ? secant[0] : lagrange_slope(x_, y_, i, lo, m);
  }

  // Limit slopes so that every interval is monotone (Fritsch-Carlson region, Hyman filter).
  for (std::size_t i = 0; i < n; ++i) {
    const double left = (i > 0) ? secant[i - 1] : secant[0];
    const double right = (i + 1 < n) ? secant[i] : secant[n - 2];
    if (left * right <= 0.0) {
      slope_[i] = 0.0;
      continue;
    }
    if (slope_[i] * right <= 0.0) {
      slope_[i] = 0.0;
      continue;
    }
    const double cap = 3.0 * std::min(std::abs(left), std::abs(right));
    if (std::abs(slope_[i]) > cap) slope_[i] = std::copysign(cap, right);
  }
}

std::size_t MonotoneInterpolant::locate(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const auto idx = static_cast<std::size_t>(it - x_.begin());
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, x_.size() - 2);
}

double MonotoneInterpolant::operator()(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const std::size_t i = locate(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

double MonotoneInterpolant::derivative(double x) const {
  if (x < x_.front() || x > x_.back()) return 0.0;
  const std::size_t i = locate(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double d00 = (6 * t2 - 6 * t) / h;
  const double d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (-6 * t2 + 6 * t) / h;
  const double d11 = 3 * t2 - 2 * t;
  return d00 * y_[i] + d10 * slope_[i] + d01 * y_[i + 1] + d11 * slope_[i + 1];
}

MonotoneInterpolant interpolate_monotone(std::span<const double> x, std::span<const double> y) {
  return MonotoneInterpolant(x, y);
}

}  // namespace uncrel::math
