#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "uncrel/errors.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::math {

namespace {

constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt 5) / 2
constexpr double kTiny = 1e-300;

double finite_or_throw(double v, const char* where) {
  if (std::isnan(v)) throw NonFiniteError(std::string(where) + ": objective returned NaN");
  return v;
}

// Brent's method on [lo, hi] starting from the interior golden point.
MinimizeResult brent(const ScalarFn& f, double lo, double hi, const MinimizeOptions& opts) {
  double a = lo;
  double b = hi;
  double x = a + kGolden * (b - a);
  double w = x;
  double v = x;
  double fx = finite_or_throw(f(x), "minimize_scalar");
  double fw = fx;
  double fv = fx;
  // Absolute floor so an iterate drifting to 0 still terminates.
  const double floor = 1e-3 * opts.x_tol * (hi - lo) + kTiny;
  double d = 0.0;
  double e = 0.0;

  MinimizeResult res;
  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = opts.x_tol * std::abs(x) + floor;
    const double tol2 = 2.0 * tol1;
    res.iterations = iter;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) {
      res.converged = true;
      break;
    }
    bool golden = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (!(std::abs(p) >= std::abs(0.5 * q * etemp) || p <= q * (a - x) || p >= q * (b - x))) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, xm - x);
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm) ? a - x : b - x;
      d = kGolden * e;
    }
    const double u = (std::abs(d) >= tol1) ? x + d : x + std::copysign(tol1, d);
    const double fu = finite_or_throw(f(u), "minimize_scalar");
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  res.argmin = x;
  res.min_value = fx;
  return res;
}

}  // namespace

MinimizeResult minimize_scalar(const ScalarFn& f, Interval bracket, const MinimizeOptions& opts) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(hi > lo)) throw DomainError("minimize_scalar: bracket must satisfy lo < hi");

  for (int expansion = 0; expansion <= opts.max_expansions; ++expansion) {
    MinimizeResult res = brent(f, lo, hi, opts);
    if (!res.converged) {
      std::ostringstream os;
      os << "minimize_scalar: no convergence after " << res.iterations << " iterations";
      throw ConvergenceError(os.str());
    }
    const double width = hi - lo;
    const double edge = 1e-6 * width;
    const bool at_lo = res.argmin - lo < edge;
    const bool at_hi = hi - res.argmin < edge;
    if (!at_lo && !at_hi) return res;
    // Edge minimum: grow the bracket outward on that side and retry.
    if (at_lo) lo -= width;
    if (at_hi) hi += width;
  }
  throw BracketError("minimize_scalar: no interior minimum found after bracket expansion");
}

double solve_root(const ScalarFn& f, Interval bracket, double x_tol, int max_iterations) {
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) throw NonFiniteError("solve_root: NaN at bracket end");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw BracketError("solve_root: no sign change over bracket");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = b;
  double fc = fb;
  double d = 0.0;
  double e = 0.0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      e = d = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * x_tol * std::max(1.0, std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
    if (std::isnan(fb)) throw NonFiniteError("solve_root: objective returned NaN");
  }
  throw ConvergenceError("solve_root: maximum iterations exceeded");
}

}  // namespace uncrel::math
