#pragma once

// Radial probability densities in d dimensions and the model states used to exercise the
// uncertainty relations. All densities are normalized to the particle count N and are
// immutable once built, so they can be shared freely across threads.

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uncrel/constants.hpp"

namespace uncrel {

class RadialDensity {
 public:
  using Profile = std::function<double(double)>;
  using MomentTable = std::function<std::optional<double>(double)>;

  struct Parts {
    int d = 3;
    double N = 1.0;
    Profile value;
    Profile derivative;            // may be empty
    MomentTable analytic_moments;  // may be empty
    double scale = 1.0;            // characteristic decay length, used to place quadrature
    double support_end = std::numeric_limits<double>::infinity();
    std::vector<double> breakpoints;  // kinks of piecewise representations
    bool tabulated = false;
    std::string label;
  };

  explicit RadialDensity(Parts parts);

  int dimension() const { return parts_->d; }
  double particle_count() const { return parts_->N; }
  double operator()(double r) const { return parts_->value(r); }
  bool has_derivative() const { return static_cast<bool>(parts_->derivative); }
  double derivative(double r) const;
  std::optional<double> analytic_moment(double order) const;
  double scale() const { return parts_->scale; }
  double support_end() const { return parts_->support_end; }
  bool compact() const { return std::isfinite(parts_->support_end); }
  const std::vector<double>& breakpoints() const { return parts_->breakpoints; }
  bool tabulated() const { return parts_->tabulated; }
  const std::string& label() const { return parts_->label; }

  /// rho_lambda(r) = lambda^d rho(lambda r); normalization is unchanged.
  RadialDensity scaled(double lambda) const;

 private:
  std::shared_ptr<const Parts> parts_;
};

/// Conjugate position and momentum densities of one state.
struct DensityPair {
  RadialDensity position;
  RadialDensity momentum;
  bool real_wavefunction = false;
  // Density built from one orbital (possibly multiply occupied); the one-particle identities
  // I[rho] = 4 <p^2> and I[gamma] = 4 <r^2> only hold in this case.
  bool single_orbital = true;
  std::string label;

  int dimension() const { return position.dimension(); }
  double particle_count() const { return position.particle_count(); }

  /// Position density compressed by lambda, momentum density dilated by lambda.
  DensityPair scaled(double lambda) const;
};

namespace densities {

/// Minimum-uncertainty Gaussian state, wavefunction proportional to exp(-r^2 / (4 a^2)).
DensityPair gaussian_pair(int d, double a, double N = 1.0);

/// Hydrogen-like 1s state of nuclear charge Z (d = 3, N = 1).
DensityPair hydrogenic3d(double Z);

/// rho(r) = N lambda^d e^{-lambda r} / (Omega_d Gamma(d)).
RadialDensity exponential_radial(int d, double lambda, double N = 1.0);

/// exponential_radial together with its exact Fourier partner, proportional to
/// (lambda^2/4 + p^2)^{-(d+1)}. hydrogenic3d(Z) is the d = 3, lambda = 2Z member.
DensityPair exponential_pair(int d, double lambda, double N = 1.0);

/// N fermions filling one-dimensional oscillator levels bottom-up, at most q per level
/// (natural units, unit frequency). Position and momentum densities coincide.
DensityPair harmonic_fermions_1d(int N, int q);

/// Normalized oscillator eigenfunctions psi_0..psi_{n_max} at x by the three-term recurrence.
std::vector<double> hermite_functions(int n_max, double x);

struct TabulatedLoad {
  RadialDensity density;
  double measured_N;
  std::optional<std::string> warning;
};

/// Interpolant-backed density from (r, rho) samples. The measured normalization is kept as is;
/// a warning is attached when it differs from cfg.N by more than 1%.
TabulatedLoad load_tabulated(const SystemConfig& cfg, std::span<const double> r, std::span<const double> rho);

/// Samples a density on a uniform grid of `points` nodes over [0, r_max].
std::vector<std::pair<double, double>> sample(const RadialDensity& rho, double r_max, int points);

}  // namespace densities
}  // namespace uncrel
