#pragma once

// Radial moments, entropic moments and Fisher information of a RadialDensity. Everything is a
// total over the N particles except variance(), which is per particle.

#include <string_view>

#include "uncrel/densities.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::functionals {

enum class Method { analytic, quadrature };

std::string_view to_string(Method m);

struct MomentValue {
  double order = 0.0;
  double value = 0.0;
  Method method = Method::quadrature;
  double est_error = 0.0;
};

/// <r^alpha> = Omega_d int r^{alpha+d-1} rho dr. Uses the attached closed form when there is one.
/// DivergenceError when alpha <= -d or the tail decays too slowly.
MomentValue radial_moment(const RadialDensity& rho, double alpha, const math::QuadratureSpec& spec = {});

/// W_m = Omega_d int rho^m r^{d-1} dr, m > 0.
MomentValue entropic_moment(const RadialDensity& rho, double m, const math::QuadratureSpec& spec = {});

/// Omega_d int (rho')^2 / rho r^{d-1} dr. Points where rho is below a floor relative to its peak
/// are skipped; for tabulated densities the mass skipped that way is added to est_error.
MomentValue fisher_information(const RadialDensity& rho, const math::QuadratureSpec& spec = {});

/// Per-particle variance <r^2>/N (the centroid of a radial density is the origin).
double variance(const RadialDensity& rho, const math::QuadratureSpec& spec = {});

/// Local power-law decay exponent ln(rho(R)/rho(2R))/ln 2 at R = 40 scale. Infinite for compact
/// support or a profile that has already vanished.
double tail_decay_exponent(const RadialDensity& rho);

}  // namespace uncrel::functionals
