#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "uncrel/errors.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::math {

namespace {

// 21-point Kronrod abscissae/weights and the embedded 10-point Gauss weights (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600100463420, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(const ScalarFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at x = " << x;
    throw NonFiniteError(os.str());
  }
  return y;
}

Segment gauss_kronrod21(const ScalarFn& f, double a, double b) {
  constexpr double epmach = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  std::array<double, 10> fv1{};
  std::array<double, 10> fv2{};

  const double fc = checked(f, centr);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);

  for (int j = 0; j < 5; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * kXgk[jtw];
    const double f1 = checked(f, centr - absc);
    const double f2 = checked(f, centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 5; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    const double f1 = checked(f, centr - absc);
    const double f2 = checked(f, centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  if (resabs > uflow / (50.0 * epmach)) abserr = std::max(epmach * 50.0 * resabs, abserr);

  return {a, b, result, abserr};
}

QuadratureResult adaptive(const ScalarFn& f, std::span<const double> breaks, const QuadratureSpec& spec) {
  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Segment s = gauss_kronrod21(f, breaks[i], breaks[i + 1]);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }

  const auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  int refinements = 0;
  while (total_err > tolerance()) {
    if (refinements >= spec.max_refinements) {
      std::ostringstream os;
      os << "quadrature did not converge after " << refinements
         << " refinements (estimate " << total << ", error " << total_err << ")";
      throw ConvergenceError(os.str());
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Interval has collapsed to floating-point resolution; nothing left to refine.
    if (!(mid > worst.a && mid < worst.b)) {
      std::ostringstream os;
      os << "quadrature interval collapsed near x = " << worst.a << " with error " << total_err;
      throw ConvergenceError(os.str());
    }
    heap.pop();
    const Segment left = gauss_kronrod21(f, worst.a, mid);
    const Segment right = gauss_kronrod21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++refinements;
  }

  // Re-sum to shed the drift of incremental updates.
  QuadratureResult out;
  out.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    out.value += heap.top().value;
    out.abs_error += heap.top().error;
    heap.pop();
  }
  return out;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadratureSpec: abs_tol must be >= 0");
  if (max_refinements < 1) throw DomainError("QuadratureSpec: max_refinements must be >= 1");
  if (!(tail_cut > 0.0) || !(tail_scale > 0.0)) {
    throw DomainError("QuadratureSpec: tail_cut and tail_scale must be > 0");
  }
}

QuadratureResult integrate_interval(const ScalarFn& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(b >= a)) throw DomainError("integrate_interval: requires a <= b");
  if (a == b) return {};
  const std::array<double, 2> breaks{a, b};
  return adaptive(f, breaks, spec);
}

QuadratureResult integrate_panels(const ScalarFn& f, std::span<const double> breaks,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (breaks.size() < 2) return {};
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i] > breaks[i - 1])) throw DomainError("integrate_panels: breaks must increase");
  }
  return adaptive(f, breaks, spec);
}

QuadratureResult integrate_halfline(const ScalarFn& f, const QuadratureSpec& spec) {
  spec.validate();
  const double cut = spec.tail_cut;
  const double scale = spec.tail_scale;
  // x in [0,1) covers [0, cut] linearly; x in [1,2) folds the tail onto t = 2 - x in (0, 1].
  const ScalarFn mapped = [&](double x) {
    if (x < 1.0) return cut * f(cut * x);
    const double t = 2.0 - x;
    const double r = cut + scale * (1.0 - t) / t;
    if (!std::isfinite(r)) return 0.0;
    const double v = f(r);
    return v == 0.0 ? 0.0 : (v / t) / t * scale;
  };
  const std::array<double, 5> breaks{0.0, 0.5, 1.0, 1.5, 2.0};
  return adaptive(mapped, breaks, spec);
}

}  // namespace uncrel::math
