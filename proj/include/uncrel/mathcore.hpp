#pragma once

// Numerical substrate: special functions, half-line quadrature, scalar
// minimization, root finding and a positivity-preserving interpolant.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace uncrel::math {

using ScalarFn = std::function<double(double)>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Surface area of the unit sphere in d dimensions, 2 pi^{d/2} / Gamma(d/2).
double omega(int d);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Euler Beta function for a, b > 0.
double beta(double a, double b);

/// Exponential integral E_n(x) = int_1^inf e^{-xt} t^{-n} dt for integer n >= 0, x > 0
/// (x = 0 allowed for n >= 2). Power series below x = 1, Lentz continued fraction above.
double expint_en(int n, double x);

inline double expint_e1(double x) { return expint_en(1, x); }

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_refinements = 4000;
  // Beyond tail_cut the half line is folded onto (0, 1] by r = tail_cut + tail_scale (1-t)/t.
  double tail_cut = 20.0;
  double tail_scale = 1.0;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod integration over [a, b].
QuadratureResult integrate_interval(const ScalarFn& f, double a, double b,
                                    const QuadratureSpec& spec = {});

/// Adaptive integration over consecutive panels [breaks[i], breaks[i+1]] sharing one error budget.
QuadratureResult integrate_panels(const ScalarFn& f, std::span<const double> breaks,
                                  const QuadratureSpec& spec = {});

/// Integral over [0, inf). Throws ConvergenceError when the refinement budget is spent
/// and NonFiniteError when f is not finite at a node.
QuadratureResult integrate_halfline(const ScalarFn& f, const QuadratureSpec& spec = {});

struct Interval {
  double lo;
  double hi;
};

struct MinimizeResult {
  double argmin = 0.0;
  double min_value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct MinimizeOptions {
  double x_tol = 1e-10;
  int max_iterations = 500;
  int max_expansions = 40;
};

/// Brent minimization (golden section with parabolic steps) on a bracket. When the minimum
/// sits on a bracket edge the bracket is expanded geometrically on that side; BracketError
/// is raised if no interior minimum appears.
MinimizeResult minimize_scalar(const ScalarFn& f, Interval bracket, const MinimizeOptions& opts = {});

/// Brent-Dekker root finder. Requires a sign change over the bracket.
double solve_root(const ScalarFn& f, Interval bracket, double x_tol = 1e-14, int max_iterations = 300);

/// Monotonicity-preserving piecewise cubic Hermite interpolant. Node slopes come from a local
/// cubic fit and are then limited (Fritsch-Carlson/Hyman) so every interval is monotone;
/// non-negative data therefore yield a non-negative interpolant.
class MonotoneInterpolant {
 public:
  MonotoneInterpolant(std::span<const double> x, std::span<const double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }

 private:
  std::size_t locate(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

/// Builds the interpolant; FormatError on unordered/duplicate abscissae or negative ordinates.
MonotoneInterpolant interpolate_monotone(std::span<const double> x, std::span<const double> y);

}  // namespace uncrel::math
