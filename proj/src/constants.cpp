#include "uncrel/constants.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "uncrel/mathcore.hpp"
#include "uncrel/varoracle.hpp"

namespace uncrel {

void SystemConfig::validate() const {
  if (d < 1) throw DomainError("SystemConfig: dimension d must be >= 1");
  if (!(N > 0.0) || !std::isfinite(N)) throw NormalizationError("SystemConfig: N must be positive and finite");
  if (q < 1) throw DomainError("SystemConfig: spin multiplicity q must be >= 1");
}

}  // namespace uncrel

namespace uncrel::constants {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_dim(int d, const char* who) {
  if (d < 1) throw DomainError(std::string(who) + ": dimension must be >= 1");
}

}  // namespace

ConstantValue ConstantValue::invalid(std::string note) { return {kNaN, false, std::move(note)}; }

double thakkar_coefficient(double k) {
  if (!(k > -3.0)) throw DomainError("thakkar_coefficient: requires k > -3");
  return 3.0 * std::pow(3.0 * math::pi * math::pi, k / 3.0) / (k + 3.0);
}

double semiclassical_constant(int d, double k) {
  require_dim(d, "semiclassical_constant");
  if (!(k > -d)) throw DomainError("semiclassical_constant: requires k > -d");
  const double log_k = k * std::log(2.0 * math::pi) + (k / d) * math::log_gamma(1.0 + 0.5 * d) -
                       0.5 * k * std::log(math::pi);
  return d / (k + d) * std::exp(log_k);
}

double daubechies_inner_integral(double a) {
  if (!(a >= 0.0)) throw DomainError("daubechies_inner_integral: requires a >= 0");
  return math::expint_en(2, a);
}

double daubechies_factor(int d, double k) {
  require_dim(d, "daubechies_factor");
  if (!(k > 0.0)) throw DomainError("daubechies_factor: requires k > 0");
  const double x = d / k;
  // Minimize ln of a^{-x} / inner(a) over t = ln a.
  const auto objective = [x](double t) {
    const double a = std::exp(t);
    return -x * t - std::log(daubechies_inner_integral(a));
  };
  const auto res = math::minimize_scalar(objective, {-12.0, 5.0}, {1e-12, 500, 40});
  return std::exp(-(math::log_gamma(x) + res.min_value) / x);
}

double rigorous_constant(int d, double k) { return semiclassical_constant(d, k) * daubechies_factor(d, k); }

double entropic_lower_constant(int d, double alpha, double k) {
  require_dim(d, "entropic_lower_constant");
  if (!(alpha > 0.0) || !(k > 0.0)) throw DomainError("entropic_lower_constant: requires alpha > 0 and k > 0");
  const double m = 1.0 + k / d;
  const double s = m * alpha + k;
  const double log_beta = std::log(math::beta(d / alpha, 2.0 + d / k));
  const double log_f = m * std::log(m) + (1.0 + 2.0 * k / d) * std::log(alpha) -
                       (k / d) * (std::log(math::omega(d)) + log_beta) +
                       (k * std::log(k) - s * std::log(s)) / alpha;
  return std::exp(log_f);
}

double heisenberg_exponent(int d, double alpha, double k) {
  require_dim(d, "heisenberg_exponent");
  if (alpha == 0.0) throw DomainError("heisenberg_exponent: alpha must be non-zero");
  return 1.0 + k * (1.0 / alpha + 1.0 / d);
}

double heisenberg_constant(int d, double alpha, double k) {
  return semiclassical_constant(d, k) * entropic_lower_constant(d, alpha, k);
}

double heisenberg_rhs(int d, double alpha, double k, double N, int q) {
  SystemConfig{d, N, q}.validate();
  return heisenberg_constant(d, alpha, k) * std::pow(q, -k / d) * std::pow(N, heisenberg_exponent(d, alpha, k));
}

double negative_order_alpha_min(int d, double k) {
  require_dim(d, "negative_order_alpha_min");
  if (!(k < 0.0) || !(k > -d)) throw DomainError("negative order requires -d < k < 0");
  return -d * k / (d + k);
}

ConstantValue entropic_upper_closed_form(int d, double alpha, double k) {
  require_dim(d, "entropic_upper_closed_form");
  if (!(k < 0.0) || !(alpha > 0.0)) {
    return ConstantValue::invalid("closed form defined for k < 0, alpha > 0 only");
  }
  const double base = alpha + alpha * k / d + k;
  const double beta_a = -1.0 - d * (k + alpha) / (k * alpha);
  const double beta_b = d / alpha;
  const double m = 1.0 + k / d;
  if (!(base > 0.0)) return ConstantValue::invalid("fractional power of a non-positive base");
  if (!(beta_a > 0.0)) {
    std::ostringstream os;
    os << "Beta function argument " << beta_a << " is non-positive";
    return ConstantValue::invalid(os.str());
  }
  if (!(m > 0.0)) return ConstantValue::invalid("entropic order 1 + k/d is non-positive");
  const double log_g = (1.0 + 2.0 * k / d) * std::log(alpha) + (k / alpha) * std::log(-k) -
                       (k * (1.0 / alpha + 1.0 / d) + 1.0) * std::log(base) + m * std::log(m) -
                       (k / d) * (std::log(math::omega(d)) + std::log(math::beta(beta_a, beta_b)));
  return {std::exp(log_g), true, {}};
}

double negative_order_constant(int d, double alpha, double k) {
  const double lo = negative_order_alpha_min(d, k);
  if (!(alpha > lo)) {
    std::ostringstream os;
    os << "negative order window violated: need alpha > " << lo << " for d = " << d << ", k = " << k;
    throw DomainError(os.str());
  }
  return semiclassical_constant(d, k) * varoracle::extremal_G(d, alpha, k).numeric_value;
}

ConstantValue negative_order_rhs(int d, double alpha, double k, double N, int q) {
  SystemConfig{d, N, q}.validate();
  const double lo = negative_order_alpha_min(d, k);
  if (!(alpha > lo)) {
    std::ostringstream os;
    os << "negative order window violated: need alpha > " << lo << " for d = " << d << ", k = " << k;
    throw DomainError(os.str());
  }
  const auto extremal = varoracle::extremal_G(d, alpha, k);
  const double coeff = semiclassical_constant(d, k) * extremal.numeric_value;
  ConstantValue out{coeff * std::pow(q, -k / d) * std::pow(N, heisenberg_exponent(d, alpha, k)), true, {}};
  std::ostringstream os;
  if (extremal.discrepancy) {
    os << "closed form agrees to relative " << *extremal.discrepancy;
  } else {
    os << "closed form not comparable: " << extremal.note;
  }
  out.domain_note = os.str();
  return out;
}

double zumbach_constant(int d) {
  if (d < 1 || d > 5) throw DomainError("Zumbach constant is defined for 1 <= d <= 5");
  const double dd = d;
  return std::pow(4.0 * math::pi, 2) * 5.0 * dd * dd / (dd + 2.0) * std::pow(2.0 / (dd + 2.0), 2.0 / dd);
}

double heisenberg_product_constant(int d) {
  require_dim(d, "heisenberg_product_constant");
  const double v = d / (d + 1.0) * std::exp(math::log_gamma(d + 1.0) / d);
  return v * v;
}

std::string_view to_string(FisherVariant v) {
  switch (v) {
    case FisherVariant::general: return "general";
    case FisherVariant::electronic: return "electronic";
    case FisherVariant::large_N_fermion: return "large_N_fermion";
    case FisherVariant::large_N_electron: return "large_N_electron";
    case FisherVariant::d3_electron: return "d3_electron";
    case FisherVariant::d3_large_N: return "d3_large_N";
  }
  return "unknown";
}

FisherVariant parse_fisher_variant(std::string_view name) {
  for (auto v : {FisherVariant::general, FisherVariant::electronic, FisherVariant::large_N_fermion,
                 FisherVariant::large_N_electron, FisherVariant::d3_electron, FisherVariant::d3_large_N}) {
    if (to_string(v) == name) return v;
  }
  throw FormatError("unknown Fisher variant '" + std::string(name) + "'");
}

double fisher_d3_large_N_coefficient() {
  return 5.0 / (3072.0 * std::pow(math::pi, 4)) * std::cbrt(5.0 / 3.0);
}

double fisher_rhs(FisherVariant variant, const SystemConfig& cfg) {
  cfg.validate();
  const int d = cfg.d;
  const double dd = d;
  const double N = cfg.N;
  const double q = cfg.q;
  const double c = zumbach_constant(d);
  const double a2 = heisenberg_product_constant(d);
  const bool electronic = variant == FisherVariant::electronic || variant == FisherVariant::large_N_electron ||
                          variant == FisherVariant::d3_electron || variant == FisherVariant::d3_large_N;
  if (electronic && cfg.q != 2) {
    throw DomainError(std::string("Fisher variant ") + std::string(to_string(variant)) + " requires q = 2");
  }
  const bool three_d = variant == FisherVariant::d3_electron || variant == FisherVariant::d3_large_N;
  if (three_d && d != 3) {
    throw DomainError(std::string("Fisher variant ") + std::string(to_string(variant)) + " requires d = 3");
  }

  switch (variant) {
    case FisherVariant::general: {
      const double den = 1.0 + c * std::pow(N / q, 2.0 / dd);
      return 4.0 * a2 * std::pow(N, 2.0 / dd + 2.0) * std::pow(q, -2.0 / dd) / (den * den);
    }
    case FisherVariant::electronic: {
      const double den = 1.0 + std::pow(N, 2.0 / dd) * 80.0 * math::pi * math::pi * dd * dd *
                                   std::pow(dd + 2.0, -(dd + 2.0) / dd);
      return std::pow(N, 2.0 / dd + 2.0) * std::pow(2.0, 2.0 - 2.0 / dd) / (den * den) * a2;
    }
    case FisherVariant::large_N_fermion:
      return std::pow(N, 2.0 - 2.0 / dd) * std::pow(q, 2.0 / dd) * std::pow(dd + 2.0, 4.0 / dd + 2.0) /
             (25.0 * std::pow(math::pi, 4) * std::pow(4.0, 2.0 / dd + 3.0) * std::pow(dd, 4)) * a2;
    case FisherVariant::large_N_electron:
      return std::pow(N, 2.0 - 2.0 / dd) * std::pow(dd + 2.0, 4.0 / dd + 2.0) /
             (25.0 * std::pow(math::pi, 4) * std::pow(4.0, 1.0 / dd + 3.0) * std::pow(dd, 4)) * a2;
    case FisherVariant::d3_electron: {
      const double den = std::pow(N, 2.0 / 3.0) * 144.0 * math::pi * math::pi / std::pow(5.0, 2.0 / 3.0) + 1.0;
      return std::pow(N, 8.0 / 3.0) / (den * den) * std::pow(3.0, 8.0 / 3.0) / 4.0;
    }
    case FisherVariant::d3_large_N:
      return fisher_d3_large_N_coefficient() * std::pow(N, 4.0 / 3.0);
  }
  throw DomainError("unknown Fisher variant");
}

std::vector<DaubechiesCell> daubechies_table(int max_dim, int max_order) {
  if (max_dim < 1 || max_order < 1) throw DomainError("daubechies_table: sizes must be >= 1");
  std::vector<DaubechiesCell> cells(static_cast<std::size_t>(max_dim * max_order));
  const int n = max_dim * max_order;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    const int k = i / max_dim + 1;
    const int d = i % max_dim + 1;
    cells[static_cast<std::size_t>(i)] = {d, k, daubechies_factor(d, k)};
  }
  return cells;
}

std::vector<DaubechiesCell> daubechies_table_serial(int max_dim, int max_order) {
  if (max_dim < 1 || max_order < 1) throw DomainError("daubechies_table: sizes must be >= 1");
  std::vector<DaubechiesCell> cells;
  cells.reserve(static_cast<std::size_t>(max_dim * max_order));
  for (int k = 1; k <= max_order; ++k) {
    for (int d = 1; d <= max_dim; ++d) cells.push_back({d, k, daubechies_factor(d, k)});
  }
  return cells;
}

}  // namespace uncrel::constants
