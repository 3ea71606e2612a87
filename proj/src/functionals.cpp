#include "uncrel/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "uncrel/errors.hpp"

namespace uncrel::functionals {

namespace {

constexpr double kTailMargin = 0.05;

// Integrates Omega_d * g(r) r^{d-1} over the support of rho, with panels at the density's
// breakpoints when it has them and a tail map scaled to the density otherwise.
math::QuadratureResult integrate_over(const RadialDensity& rho, const math::ScalarFn& g,
                                      const math::QuadratureSpec& spec) {
  const int d = rho.dimension();
  const double omega = math::omega(d);
  const auto integrand = [&](double r) { return omega * g(r) * std::pow(r, d - 1); };

  if (rho.compact()) {
    std::vector<double> breaks = rho.breakpoints();
    if (breaks.empty() || breaks.front() > 0.0) breaks.insert(breaks.begin(), 0.0);
    if (breaks.back() < rho.support_end()) breaks.push_back(rho.support_end());
    return math::integrate_panels(integrand, breaks, spec);
  }
  math::QuadratureSpec local = spec;
  local.tail_cut = 10.0 * rho.scale();
  local.tail_scale = rho.scale();
  return math::integrate_halfline(integrand, local);
}

double peak_value(const RadialDensity& rho) {
  const double hi = rho.compact() ? rho.support_end() : 40.0 * rho.scale();
  double peak = 0.0;
  constexpr int n = 800;
  for (int i = 0; i <= n; ++i) peak = std::max(peak, rho(hi * i / n));
  for (double b : rho.breakpoints()) peak = std::max(peak, rho(b));
  return peak;
}

std::string describe(const RadialDensity& rho) { return rho.label().empty() ? "density" : rho.label(); }

}  // namespace

std::string_view to_string(Method m) { return m == Method::analytic ? "analytic" : "quadrature"; }

double tail_decay_exponent(const RadialDensity& rho) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (rho.compact()) return inf;
  const double R = 40.0 * rho.scale();
  const double near = rho(R);
  const double far = rho(2.0 * R);
  if (near <= 0.0 || far <= 0.0) return inf;
  return std::log(near / far) / std::log(2.0);
}

MomentValue radial_moment(const RadialDensity& rho, double alpha, const math::QuadratureSpec& spec) {
  spec.validate();
  const int d = rho.dimension();
  if (const auto exact = rho.analytic_moment(alpha)) return {alpha, *exact, Method::analytic, 0.0};
  if (!(alpha > -d)) {
    std::ostringstream os;
    os << "<r^" << alpha << "> of " << describe(rho) << " diverges at the origin (needs alpha > -" << d << ")";
    throw DivergenceError(os.str());
  }
  const double p = tail_decay_exponent(rho);
  if (p < alpha + d + kTailMargin) {
    std::ostringstream os;
    os << "<r^" << alpha << "> of " << describe(rho) << " diverges: tail decays like r^-" << p;
    throw DivergenceError(os.str());
  }
  const auto res = integrate_over(rho, [&](double r) { return std::pow(r, alpha) * rho(r); }, spec);
  return {alpha, res.value, Method::quadrature, res.abs_error};
}

MomentValue entropic_moment(const RadialDensity& rho, double m, const math::QuadratureSpec& spec) {
  spec.validate();
  if (!(m > 0.0)) throw DomainError("entropic_moment: exponent m must be positive");
  if (m == 1.0) return {m, rho.particle_count(), Method::analytic, 0.0};
  const int d = rho.dimension();
  const double p = tail_decay_exponent(rho);
  if (m * p < d + kTailMargin) {
    std::ostringstream os;
    os << "W_" << m << " of " << describe(rho) << " diverges: rho^m decays like r^-" << m * p;
    throw DivergenceError(os.str());
  }
  const auto res = integrate_over(
      rho,
      [&](double r) {
        const double v = rho(r);
        if (v < 0.0) {
          std::ostringstream os;
          os << "negative density " << v << " at r = " << r << " in " << describe(rho);
          throw DomainError(os.str());
        }
        return v > 0.0 ? std::pow(v, m) : 0.0;
      },
      spec);
  return {m, res.value, Method::quadrature, res.abs_error};
}

MomentValue fisher_information(const RadialDensity& rho, const math::QuadratureSpec& spec) {
  spec.validate();
  if (!rho.has_derivative()) throw PreconditionError("fisher_information: " + describe(rho) + " has no derivative");
  const double floor = (rho.tabulated() ? 1e-12 : 1e-300) * peak_value(rho);
  const auto res = integrate_over(
      rho,
      [&](double r) {
        const double v = rho(r);
        if (v <= floor) return 0.0;
        const double dv = rho.derivative(r);
        return dv * dv / v;
      },
      spec);
  if (!std::isfinite(res.value)) throw DivergenceError("Fisher information of " + describe(rho) + " diverges");

  double excluded = 0.0;
  if (rho.tabulated()) {
    excluded = integrate_over(
                   rho, [&](double r) { const double v = rho(r); return v <= floor ? v : 0.0; }, spec)
                   .value;
  }
  return {0.0, res.value, Method::quadrature, res.abs_error + excluded};
}

double variance(const RadialDensity& rho, const math::QuadratureSpec& spec) {
  return radial_moment(rho, 2.0, spec).value / rho.particle_count();
}

}  // namespace uncrel::functionals
