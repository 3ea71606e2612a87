#include "uncrel/varoracle.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "uncrel/constants.hpp"
#include "uncrel/errors.hpp"
#include "uncrel/functionals.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::varoracle {

namespace {

math::QuadratureSpec oracle_spec() {
  math::QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 0.0;
  spec.max_refinements = 20000;
  return spec;
}

void check_positive_params(int d, double alpha, double k, const char* who) {
  if (d < 1) throw DomainError(std::string(who) + ": dimension must be >= 1");
  if (!(alpha > 0.0)) throw DomainError(std::string(who) + ": alpha must be positive");
  if (!(k > 0.0)) throw DomainError(std::string(who) + ": k must be positive");
}

void check_negative_params(int d, double alpha, double k, const char* who) {
  if (d < 1) throw DomainError(std::string(who) + ": dimension must be >= 1");
  if (!(k < 0.0) || !(k > -d)) throw DomainError(std::string(who) + ": requires -d < k < 0");
  if (!(alpha > 0.0)) throw DomainError(std::string(who) + ": alpha must be positive");
}

// Unnormalized stationary profile with unit prefactor and its support parameter a.
struct Shape {
  int d;
  double alpha;
  double power;
  bool compact;  // true: (a^alpha - r^alpha)^power on [0, a]; false: (a^alpha + r^alpha)^power

  double operator()(double r, double a) const {
    const double aa = std::pow(a, alpha);
    const double ra = std::pow(r, alpha);
    if (compact) return r < a ? std::pow(aa - ra, power) : 0.0;
    return std::pow(aa + ra, power);
  }
};

double shape_integral(const Shape& s, double a, double extra_power) {
  const double omega = math::omega(s.d);
  const auto f = [&](double r) { return omega * std::pow(r, s.d - 1 + extra_power) * s(r, a); };
  auto spec = oracle_spec();
  if (s.compact) {
    const double breaks[] = {0.0, 0.5 * a, a};
    return math::integrate_panels(f, breaks, spec).value;
  }
  spec.tail_cut = 10.0 * a;
  spec.tail_scale = a;
  spec.rel_tol = 1e-12;
  return math::integrate_halfline(f, spec).value;
}

// Finds the support parameter a with <r^alpha>/N = target by root finding on ln a.
double fit_support(const Shape& s, double target) {
  const auto log_ratio = [&](double a) {
    return std::log(shape_integral(s, a, s.alpha)) - std::log(shape_integral(s, a, 0.0));
  };
  const double guess = std::log(target) / s.alpha - log_ratio(1.0) / s.alpha;
  const auto residual = [&](double t) { return log_ratio(std::exp(t)) - std::log(target); };
  return std::exp(math::solve_root(residual, {guess - 0.5, guess + 0.5}, 1e-14));
}

RadialDensity build(const Shape& s, double N, double r_alpha, std::string label) {
  if (!(N > 0.0) || !(r_alpha > 0.0)) throw DomainError("extremal density: N and <r^alpha> must be positive");
  const double a = fit_support(s, r_alpha / N);
  const double C = N / shape_integral(s, a, 0.0);

  RadialDensity::Parts p;
  p.d = s.d;
  p.N = N;
  p.value = [s, a, C](double r) { return C * s(r, a); };
  if (!s.compact) {
    p.derivative = [s, a, C](double r) {
      const double base = std::pow(a, s.alpha) + std::pow(r, s.alpha);
      return C * s.power * s.alpha * std::pow(r, s.alpha - 1.0) * std::pow(base, s.power - 1.0);
    };
  }
  p.scale = a;
  if (s.compact) {
    p.support_end = a;
    p.breakpoints = {0.0, 0.5 * a, a};
  }
  p.label = std::move(label);
  return RadialDensity(std::move(p));
}

enum class Approach { from_below, from_above, to_infinity };

// Increments of a truncated integral over successive cuts approaching a singular end, in log
// variables. Returns true when they shrink at a definite power-law rate.
bool increments_converge(const std::function<double(double)>& g, Approach approach, double anchor) {
  constexpr double factor = 1e4;
  const double cuts[] = {1e-2, 1e-6, 1e-10, 1e-14};
  math::QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  double inc[3];
  for (int j = 0; j < 3; ++j) {
    // delta runs over [cuts[j+1], cuts[j]]; r = anchor -/+ delta, or r = anchor / delta at infinity.
    const double lo = std::log(cuts[j + 1]);
    const double hi = std::log(cuts[j]);
    const auto h = [&](double v) {
      const double delta = std::exp(v);
      switch (approach) {
        case Approach::from_below: return g(anchor - delta) * delta;
        case Approach::from_above: return g(anchor + delta) * delta;
        case Approach::to_infinity: break;
      }
      const double r = anchor / delta;
      return g(r) * r;
    };
    try {
      inc[j] = std::abs(math::integrate_interval(h, lo, hi, spec).value);
    } catch (const ConvergenceError&) {
      return false;
    }
    if (!std::isfinite(inc[j])) return false;
  }
  if (inc[0] == 0.0) return true;
  const double rate_limit = std::pow(factor, -0.02);
  return inc[1] < rate_limit * inc[0] && inc[2] < rate_limit * inc[1];
}

}  // namespace

RadialDensity minimizer_density(int d, double alpha, double k, double N, double r_alpha) {
  check_positive_params(d, alpha, k, "minimizer_density");
  std::ostringstream os;
  os << "minimizer d=" << d << " alpha=" << alpha << " k=" << k;
  return build(Shape{d, alpha, d / k, true}, N, r_alpha, os.str());
}

ExtremalConstant extremal_F(int d, double alpha, double k) {
  const RadialDensity f = minimizer_density(d, alpha, k, 1.0, 1.0);
  ExtremalConstant out;
  out.d = d;
  out.alpha = alpha;
  out.k = k;
  out.numeric_value = functionals::entropic_moment(f, 1.0 + k / d, oracle_spec()).value;
  out.closed_form_value = constants::entropic_lower_constant(d, alpha, k);
  out.discrepancy = std::abs(out.numeric_value - *out.closed_form_value) / *out.closed_form_value;
  out.note = "compact minimizer on [0, a]";
  return out;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::compact: return "compact";
    case Branch::exterior: return "exterior";
    case Branch::unbounded: return "unbounded";
  }
  return "unknown";
}

std::vector<BranchProbe> probe_negative_branches(int d, double alpha, double k) {
  check_negative_params(d, alpha, k, "probe_negative_branches");
  const double p = d / k;
  const auto weight = [d](double r, double extra) { return std::pow(r, d - 1 + extra); };

  std::vector<BranchProbe> out;
  for (Branch b : {Branch::compact, Branch::exterior, Branch::unbounded}) {
    BranchProbe probe{b};
    for (double extra : {0.0, alpha}) {
      bool finite = true;
      switch (b) {
        case Branch::compact: {
          const auto g = [&](double r) { return weight(r, extra) * std::pow(1.0 - std::pow(r, alpha), p); };
          finite = increments_converge(g, Approach::from_below, 1.0);
          break;
        }
        case Branch::exterior: {
          const auto g = [&](double r) { return weight(r, extra) * std::pow(std::pow(r, alpha) - 1.0, p); };
          finite = increments_converge(g, Approach::from_above, 1.0) &&
                   increments_converge(g, Approach::to_infinity, 1.0);
          break;
        }
        case Branch::unbounded: {
          const auto g = [&](double r) { return weight(r, extra) * std::pow(1.0 + std::pow(r, alpha), p); };
          finite = increments_converge(g, Approach::to_infinity, 1.0);
          break;
        }
      }
      (extra == 0.0 ? probe.mass_finite : probe.moment_finite) = finite;
    }
    out.push_back(probe);
  }
  return out;
}

RadialDensity maximizer_density(int d, double alpha, double k, double N, double r_alpha) {
  check_negative_params(d, alpha, k, "maximizer_density");
  const auto probes = probe_negative_branches(d, alpha, k);
  const BranchProbe& unbounded = probes.back();
  if (!unbounded.integrable()) {
    std::ostringstream os;
    os << "no integrable extremal branch for d=" << d << " alpha=" << alpha << " k=" << k << ":";
    for (const auto& pr : probes) {
      os << ' ' << to_string(pr.branch) << "(mass " << (pr.mass_finite ? "finite" : "infinite") << ", moment "
         << (pr.moment_finite ? "finite" : "infinite") << ')';
    }
    throw DivergenceError(os.str());
  }
  std::ostringstream label;
  label << "maximizer d=" << d << " alpha=" << alpha << " k=" << k;
  return build(Shape{d, alpha, d / k, false}, N, r_alpha, label.str());
}

ExtremalConstant extremal_G(int d, double alpha, double k) {
  const RadialDensity f = maximizer_density(d, alpha, k, 1.0, 1.0);
  auto spec = oracle_spec();
  spec.rel_tol = 1e-12;
  ExtremalConstant out;
  out.d = d;
  out.alpha = alpha;
  out.k = k;
  out.numeric_value = functionals::entropic_moment(f, 1.0 + k / d, spec).value;
  const auto closed = constants::entropic_upper_closed_form(d, alpha, k);
  if (closed.valid) {
    out.closed_form_value = closed.value;
    out.discrepancy = std::abs(out.numeric_value - closed.value) / closed.value;
    out.note = "unbounded branch C (b^alpha + r^alpha)^{d/k}";
  } else {
    out.note = "unbounded branch; closed form not evaluable: " + closed.domain_note;
  }
  return out;
}

std::vector<ExtremalConstant> oracle_grid(int max) {
  if (max < 1) throw DomainError("oracle_grid: max must be >= 1");
  const int n = max * max * max;
  std::vector<ExtremalConstant> cells(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    const int d = i / (max * max) + 1;
    const int alpha = (i / max) % max + 1;
    const int k = i % max + 1;
    try {
      cells[static_cast<std::size_t>(i)] = extremal_F(d, alpha, k);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return cells;
}

std::vector<ExtremalConstant> oracle_grid_serial(int max) {
  if (max < 1) throw DomainError("oracle_grid: max must be >= 1");
  std::vector<ExtremalConstant> cells;
  cells.reserve(static_cast<std::size_t>(max * max * max));
  for (int d = 1; d <= max; ++d) {
    for (int alpha = 1; alpha <= max; ++alpha) {
      for (int k = 1; k <= max; ++k) cells.push_back(extremal_F(d, alpha, k));
    }
  }
  return cells;
}

}  // namespace uncrel::varoracle
