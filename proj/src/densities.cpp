#include "uncrel/densities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uncrel/errors.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel {

namespace {

std::string fmt_label(const std::string& stem, std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os << stem;
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  return os.str();
}

}  // namespace

RadialDensity::RadialDensity(Parts parts) {
  if (parts.d < 1) throw DomainError("RadialDensity: dimension must be >= 1");
  if (!(parts.N > 0.0) || !std::isfinite(parts.N)) {
    throw NormalizationError("RadialDensity: particle count must be positive and finite");
  }
  if (!parts.value) throw DomainError("RadialDensity: value profile is required");
  if (!(parts.scale > 0.0)) throw DomainError("RadialDensity: scale must be positive");
  parts_ = std::make_shared<const Parts>(std::move(parts));
}

double RadialDensity::derivative(double r) const {
  if (!parts_->derivative) throw PreconditionError("density '" + parts_->label + "' has no derivative");
  return parts_->derivative(r);
}

std::optional<double> RadialDensity::analytic_moment(double order) const {
  if (order == 0.0) return parts_->N;
  if (!parts_->analytic_moments) return std::nullopt;
  return parts_->analytic_moments(order);
}

RadialDensity RadialDensity::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("RadialDensity::scaled: lambda must be positive");
  const auto base = parts_;
  const double jac = std::pow(lambda, base->d);
  Parts p;
  p.d = base->d;
  p.N = base->N;
  p.value = [base, lambda, jac](double r) { return jac * base->value(lambda * r); };
  if (base->derivative) {
    p.derivative = [base, lambda, jac](double r) { return jac * lambda * base->derivative(lambda * r); };
  }
  if (base->analytic_moments) {
    p.analytic_moments = [base, lambda](double order) -> std::optional<double> {
      const auto m = base->analytic_moments(order);
      if (!m) return std::nullopt;
      return *m * std::pow(lambda, -order);
    };
  }
  p.scale = base->scale / lambda;
  p.support_end = base->support_end / lambda;
  p.breakpoints.reserve(base->breakpoints.size());
  for (double b : base->breakpoints) p.breakpoints.push_back(b / lambda);
  p.tabulated = base->tabulated;
  std::ostringstream os;
  os << base->label << " x" << lambda;
  p.label = os.str();
  return RadialDensity(std::move(p));
}

DensityPair DensityPair::scaled(double lambda) const {
  DensityPair out{position.scaled(lambda), momentum.scaled(1.0 / lambda), real_wavefunction, single_orbital, {}};
  std::ostringstream os;
  os << label << " x" << lambda;
  out.label = os.str();
  return out;
}

namespace densities {

namespace {

// Isotropic Gaussian of per-axis variance s2 normalized to N, with closed-form moments.
RadialDensity gaussian_radial(int d, double s2, double N, std::string label) {
  const double norm = N * std::pow(2.0 * math::pi * s2, -0.5 * d);
  RadialDensity::Parts p;
  p.d = d;
  p.N = N;
  p.value = [norm, s2](double r) { return norm * std::exp(-r * r / (2.0 * s2)); };
  p.derivative = [norm, s2](double r) { return -r / s2 * norm * std::exp(-r * r / (2.0 * s2)); };
  p.analytic_moments = [d, s2, N](double a) -> std::optional<double> {
    if (!(a > -d)) return std::nullopt;
    return N * std::pow(2.0 * s2, 0.5 * a) *
           std::exp(math::log_gamma(0.5 * (d + a)) - math::log_gamma(0.5 * d));
  };
  p.scale = std::sqrt(s2);
  p.label = std::move(label);
  return RadialDensity(std::move(p));
}

}  // namespace

DensityPair gaussian_pair(int d, double a, double N) {
  if (d < 1) throw DomainError("gaussian_pair: dimension must be >= 1");
  if (!(a > 0.0)) throw DomainError("gaussian_pair: length scale a must be positive");
  if (!(N > 0.0)) throw DomainError("gaussian_pair: N must be positive");
  const std::string label = fmt_label("gaussian", {{"d", d}, {"a", a}, {"N", N}});
  return DensityPair{gaussian_radial(d, a * a, N, label + " position"),
                     gaussian_radial(d, 1.0 / (4.0 * a * a), N, label + " momentum"), true, true, label};
}

RadialDensity exponential_radial(int d, double lambda, double N) {
  if (d < 1) throw DomainError("exponential_radial: dimension must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("exponential_radial: lambda must be positive");
  if (!(N > 0.0)) throw DomainError("exponential_radial: N must be positive");
  const double norm = N * std::pow(lambda, d) / (math::omega(d) * std::exp(math::log_gamma(d)));
  RadialDensity::Parts p;
  p.d = d;
  p.N = N;
  p.value = [norm, lambda](double r) { return norm * std::exp(-lambda * r); };
  p.derivative = [norm, lambda](double r) { return -lambda * norm * std::exp(-lambda * r); };
  p.analytic_moments = [d, lambda, N](double a) -> std::optional<double> {
    if (!(a > -d)) return std::nullopt;
    return N * std::exp(math::log_gamma(d + a) - math::log_gamma(d)) * std::pow(lambda, -a);
  };
  p.scale = 1.0 / lambda;
  p.label = fmt_label("exponential", {{"d", d}, {"lambda", lambda}, {"N", N}});
  return RadialDensity(std::move(p));
}

DensityPair exponential_pair(int d, double lambda, double N) {
  RadialDensity position = exponential_radial(d, lambda, N);
  const double mu = 0.5 * lambda;
  const double b0 = math::beta(0.5 * d, 0.5 * d + 1.0);
  const double norm = N * 2.0 * std::pow(mu, d + 2) / (math::omega(d) * b0);
  const double power = -(d + 1.0);
  RadialDensity::Parts p;
  p.d = d;
  p.N = N;
  p.value = [norm, mu, power](double q) { return norm * std::pow(mu * mu + q * q, power); };
  p.derivative = [norm, mu, power](double q) {
    const double s = mu * mu + q * q;
    return norm * power * 2.0 * q * std::pow(s, power - 1.0);
  };
  p.analytic_moments = [d, mu, N, b0](double k) -> std::optional<double> {
    if (!(k > -d) || !(k < d + 2)) return std::nullopt;
    return N * std::pow(mu, k) * math::beta(0.5 * (d + k), 0.5 * (d + 2 - k)) / b0;
  };
  p.scale = mu;
  const std::string label = fmt_label("exponential", {{"d", d}, {"lambda", lambda}, {"N", N}});
  p.label = label + " momentum";
  return DensityPair{std::move(position), RadialDensity(std::move(p)), true, true, label};
}

DensityPair hydrogenic3d(double Z) {
  if (!(Z > 0.0)) throw DomainError("hydrogenic3d: Z must be positive");
  DensityPair pair = exponential_pair(3, 2.0 * Z, 1.0);
  pair.label = fmt_label("hydrogenic", {{"Z", Z}});
  return pair;
}

std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) throw DomainError("hermite_functions: n_max must be >= 0");
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = std::pow(math::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n_max >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int n = 1; n < n_max; ++n) {
    psi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * psi[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * psi[n - 1];
  }
  return psi;
}

DensityPair harmonic_fermions_1d(int N, int q) {
  if (N < 1) throw DomainError("harmonic_fermions_1d: N must be >= 1");
  if (q != 1 && q != 2) throw DomainError("harmonic_fermions_1d: q must be 1 or 2");

  std::vector<int> occupancy;
  for (int left = N; left > 0; left -= q) occupancy.push_back(std::min(q, left));
  const int levels = static_cast<int>(occupancy.size());

  double second_moment = 0.0;
  for (int n = 0; n < levels; ++n) second_moment += occupancy[n] * (n + 0.5);

  RadialDensity::Parts p;
  p.d = 1;
  p.N = N;
  p.value = [occupancy, levels](double x) {
    const auto psi = hermite_functions(levels - 1, x);
    double rho = 0.0;
    for (int n = 0; n < levels; ++n) rho += occupancy[n] * psi[n] * psi[n];
    return rho;
  };
  // psi_n' = sqrt(n/2) psi_{n-1} - sqrt((n+1)/2) psi_{n+1}
  p.derivative = [occupancy, levels](double x) {
    const auto psi = hermite_functions(levels, x);
    double drho = 0.0;
    for (int n = 0; n < levels; ++n) {
      const double below = n > 0 ? std::sqrt(0.5 * n) * psi[n - 1] : 0.0;
      const double dpsi = below - std::sqrt(0.5 * (n + 1)) * psi[n + 1];
      drho += 2.0 * occupancy[n] * psi[n] * dpsi;
    }
    return drho;
  };
  p.analytic_moments = [second_moment](double order) -> std::optional<double> {
    if (order == 2.0) return second_moment;
    return std::nullopt;
  };
  p.scale = std::sqrt(2.0 * levels + 1.0);
  const std::string label = fmt_label("ho1d", {{"N", N}, {"q", q}});
  p.label = label;
  RadialDensity rho(std::move(p));
  return DensityPair{rho, rho, true, levels == 1, label};
}

TabulatedLoad load_tabulated(const SystemConfig& cfg, std::span<const double> r, std::span<const double> rho) {
  cfg.validate();
  if (r.size() != rho.size()) throw FormatError("tabulated density: column lengths differ");
  if (r.size() < 8) throw FormatError("tabulated density: at least 8 samples are required");
  if (r.front() < 0.0) throw FormatError("tabulated density: radii must be non-negative");

  auto interp = std::make_shared<const math::MonotoneInterpolant>(math::interpolate_monotone(r, rho));
  const double r_lo = r.front();
  const double r_hi = r.back();
  const int d = cfg.d;

  const auto value = [interp, r_hi](double x) { return x > r_hi ? 0.0 : (*interp)(x); };
  std::vector<double> breaks;
  if (r_lo > 0.0) breaks.push_back(0.0);
  breaks.insert(breaks.end(), r.begin(), r.end());

  const double omega = math::omega(d);
  math::QuadratureSpec spec;
  const auto mass = math::integrate_panels(
      [&](double x) { return omega * value(x) * std::pow(x, d - 1); }, breaks, spec);
  if (!(mass.value > 0.0)) {
    throw NormalizationError("tabulated density normalizes to zero; N must be positive");
  }

  std::optional<std::string> warning;
  if (std::abs(mass.value - cfg.N) > 0.01 * cfg.N) {
    std::ostringstream os;
    os << "measured normalization " << mass.value << " differs from declared N = " << cfg.N << " by more than 1%";
    warning = os.str();
  }

  // Mean radius of the tabulated profile sets the quadrature length scale.
  const auto first = math::integrate_panels(
      [&](double x) { return omega * value(x) * std::pow(x, d); }, breaks, spec);

  RadialDensity::Parts p;
  p.d = d;
  p.N = mass.value;
  p.value = value;
  p.derivative = [interp, r_hi](double x) { return x > r_hi ? 0.0 : interp->derivative(x); };
  p.scale = std::max(first.value / mass.value, 1e-12 * r_hi);
  p.support_end = r_hi;
  p.breakpoints = std::move(breaks);
  p.tabulated = true;
  p.label = "tabulated";
  return TabulatedLoad{RadialDensity(std::move(p)), mass.value, warning};
}

std::vector<std::pair<double, double>> sample(const RadialDensity& rho, double r_max, int points) {
  if (points < 2 || !(r_max > 0.0)) throw DomainError("sample: need points >= 2 and r_max > 0");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = r_max * i / (points - 1);
    out.emplace_back(x, rho(x));
  }
  return out;
}

}  // namespace densities
}  // namespace uncrel
