#pragma once

// Closed-form and numerically defined constants of the moment, entropic-moment and
// Fisher-information uncertainty relations. Every evaluator is a pure, unit-free function.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uncrel/errors.hpp"

namespace uncrel {

/// Spatial dimension d, particle count N and spin multiplicity q = 2s + 1.
struct SystemConfig {
  int d = 3;
  double N = 1.0;
  int q = 2;

  double spin() const { return 0.5 * (q - 1); }
  void validate() const;
};

}  // namespace uncrel

namespace uncrel::constants {

/// A constant that may be undefined for the requested parameters. When valid is false the
/// value is NaN and domain_note says why.
struct ConstantValue {
  double value = 0.0;
  bool valid = true;
  std::string domain_note;

  static ConstantValue invalid(std::string note);
};

/// Runs fn and converts a DomainError into a flagged-invalid value. Batch sweeps use this to
/// record holes; single evaluations call the throwing functions directly.
template <class Fn>
ConstantValue flag_domain_errors(Fn&& fn) {
  try {
    return {static_cast<double>(fn()), true, {}};
  } catch (const DomainError& e) {
    return ConstantValue::invalid(e.what());
  }
}

/// Thakkar's three-dimensional coefficient c_k = 3 (3 pi^2)^{k/3} / (k + 3), k > -3.
double thakkar_coefficient(double k);

/// Semiclassical constant K_d(k) = d/(k+d) (2 pi)^k Gamma(1 + d/2)^{k/d} / pi^{k/2}, k > -d.
double semiclassical_constant(int d, double k);

/// int_a^inf e^{-u} (u - a)/u du, which equals e^{-a} - a E_1(a) = E_2(a).
double daubechies_inner_integral(double a);

/// Daubechies factor B(d, k) = { Gamma(d/k) inf_{a>0} a^{-d/k} / inner(a) }^{-k/d}, k > 0.
double daubechies_factor(int d, double k);

/// Rigorous constant K'_d(k) = K_d(k) B(d, k).
double rigorous_constant(int d, double k);

/// Lower-bound constant of the entropic moment W_{1+k/d} at fixed N and <r^alpha>.
double entropic_lower_constant(int d, double alpha, double k);

/// Exponent of N in the generalized Heisenberg-like relations, 1 + k (1/alpha + 1/d).
double heisenberg_exponent(int d, double alpha, double k);

/// Heisenberg-like coefficient K_d(k) times the entropic lower-bound constant.
double heisenberg_constant(int d, double alpha, double k);

/// Right-hand side of <r^alpha>^{k/alpha} <p^k> >= coefficient q^{-k/d} N^{exponent}.
double heisenberg_rhs(int d, double alpha, double k, double N, int q);

/// Lower end of the admissible alpha window for negative order k: alpha > -d k / (d + k).
double negative_order_alpha_min(int d, double k);

/// Closed form for the entropic-moment upper-bound constant at negative order k (argument is
/// the momentum order itself). Flagged invalid whenever a Beta argument or a fractional-power
/// base is non-positive.
ConstantValue entropic_upper_closed_form(int d, double alpha, double k);

/// Upper-bound coefficient for negative order: K_d(k) times the numerically reconstructed
/// extremal constant. DomainError outside the alpha window or for k not in (-d, 0).
double negative_order_constant(int d, double alpha, double k);

/// Right-hand side of <r^alpha>^{k/alpha} <p^k> <= coefficient q^{-k/d} N^{exponent}, k < 0.
/// The note carries the closed-form comparison.
ConstantValue negative_order_rhs(int d, double alpha, double k, double N, int q);

/// Zumbach's non-optimal constant C_d, defined for 1 <= d <= 5.
double zumbach_constant(int d);

/// d-dimensional Heisenberg product constant A(2, d) = { d/(d+1) Gamma(d+1)^{1/d} }^2.
double heisenberg_product_constant(int d);

enum class FisherVariant {
  general,
  electronic,
  large_N_fermion,
  large_N_electron,
  d3_electron,
  d3_large_N,
};

std::string_view to_string(FisherVariant v);
FisherVariant parse_fisher_variant(std::string_view name);

/// Lower bound on I_d[rho] I_d[gamma]. Electronic variants require q = 2; d3 variants d = 3.
double fisher_rhs(FisherVariant variant, const SystemConfig& cfg);

/// 5/(3072 pi^4) (5/3)^{1/3}, the large-N coefficient of the three-dimensional electronic bound.
double fisher_d3_large_N_coefficient();

struct DaubechiesCell {
  int d;
  int k;
  double value;
};

/// B(d, k) over d, k in 1..max. OpenMP-parallel; row-major in k then d.
std::vector<DaubechiesCell> daubechies_table(int max_dim = 4, int max_order = 4);

/// Serial reference for daubechies_table.
std::vector<DaubechiesCell> daubechies_table_serial(int max_dim = 4, int max_order = 4);

}  // namespace uncrel::constants
