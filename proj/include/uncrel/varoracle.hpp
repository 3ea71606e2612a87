#pragma once

// Brute-force reconstruction of the Lagrange-multiplier extremal densities. The densities are
// built from their stationary form alone, constraints are solved numerically and the entropic
// moment is integrated by quadrature, so nothing here reuses the closed-form constants.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uncrel/densities.hpp"

namespace uncrel::varoracle {

struct ExtremalConstant {
  int d = 3;
  double alpha = 0.0;
  double k = 0.0;
  double numeric_value = 0.0;
  std::optional<double> closed_form_value;
  std::optional<double> discrepancy;  // |numeric - closed| / closed
  std::string note;
};

/// C (a^alpha - r^alpha)^{d/k} on [0, a] with C and a fitted to N and <r^alpha> = r_alpha.
RadialDensity minimizer_density(int d, double alpha, double k, double N, double r_alpha);

/// Lower-bound constant read off the minimizer at N = 1, <r^alpha> = 1.
ExtremalConstant extremal_F(int d, double alpha, double k);

/// Candidate supports of the stationary family when the exponent d/k is negative.
enum class Branch {
  compact,    // C (a^alpha - r^alpha)^{d/k} on [0, a)
  exterior,   // C (r^alpha - a^alpha)^{d/k} on (a, inf)
  unbounded,  // C (b^alpha + r^alpha)^{d/k} on [0, inf)
};

std::string_view to_string(Branch b);

struct BranchProbe {
  Branch branch;
  bool mass_finite = false;
  bool moment_finite = false;
  bool integrable() const { return mass_finite && moment_finite; }
};

/// Numerical integrability test of each branch, for -d < k < 0, from truncated integrals whose
/// increments must shrink as the cut approaches the singular end.
std::vector<BranchProbe> probe_negative_branches(int d, double alpha, double k);

/// Maximizer of W_{1+k/d} at fixed N and <r^alpha> for -d < k < 0 on the integrable branch.
/// DivergenceError when no branch is integrable.
RadialDensity maximizer_density(int d, double alpha, double k, double N, double r_alpha);

/// Upper-bound constant read off the maximizer at N = 1, <r^alpha> = 1, compared with the
/// closed form when that is real-evaluable.
ExtremalConstant extremal_G(int d, double alpha, double k);

/// extremal_F over (d, alpha, k) in {1..max}^3, OpenMP-parallel, ordered d, alpha, k.
std::vector<ExtremalConstant> oracle_grid(int max = 4);

/// Serial reference for oracle_grid.
std::vector<ExtremalConstant> oracle_grid_serial(int max = 4);

}  // namespace uncrel::varoracle
