#include <cmath>
#include <vector>

#include "support.hpp"
#include "uncrel/densities.hpp"
#include "uncrel/errors.hpp"
#include "uncrel/functionals.hpp"
#include "uncrel/mathcore.hpp"

using namespace uncrel;
using functionals::Method;
using math::pi;

namespace {

std::vector<DensityPair> models() {
  std::vector<DensityPair> out;
  for (int d = 1; d <= 5; ++d) out.push_back(densities::gaussian_pair(d, 0.7 + 0.2 * d, 1.0 + d));
  for (double Z : {1.0, 2.0, 8.0}) out.push_back(densities::hydrogenic3d(Z));
  for (int d = 1; d <= 4; ++d) out.push_back(densities::exponential_pair(d, 0.5 * d, 2.0));
  for (int N : {1, 2, 5, 12}) {
    out.push_back(densities::harmonic_fermions_1d(N, 1));
    out.push_back(densities::harmonic_fermions_1d(N, 2));
  }
  return out;
}

// Same profile with the closed forms stripped, so moments must come from quadrature.
RadialDensity without_closed_forms(const RadialDensity& rho) {
  RadialDensity::Parts p;
  p.d = rho.dimension();
  p.N = rho.particle_count();
  p.value = [rho](double r) { return rho(r); };
  if (rho.has_derivative()) p.derivative = [rho](double r) { return rho.derivative(r); };
  p.scale = rho.scale();
  p.support_end = rho.support_end();
  p.breakpoints = rho.breakpoints();
  p.label = rho.label();
  return RadialDensity(p);
}

double raw_mass(const RadialDensity& rho) {
  const int d = rho.dimension();
  math::QuadratureSpec spec;
  spec.tail_cut = 40.0 * rho.scale();
  spec.tail_scale = rho.scale();
  return math::omega(d) *
         math::integrate_halfline([&](double r) { return std::pow(r, d - 1) * rho(r); }, spec).value;
}

}  // namespace

TEST_CASE("every model is normalized to its declared N") {
  for (const auto& m : models()) {
    for (const auto* rho : {&m.position, &m.momentum}) {
      INFO(m.label << " " << (rho == &m.position ? "position" : "momentum"));
      CHECK_REL(raw_mass(*rho), rho->particle_count(), 1e-8);
      CHECK(rho->dimension() == m.dimension());
      CHECK(rho->particle_count() == m.particle_count());
    }
  }
}

TEST_CASE("analytic moments agree with quadrature") {
  for (const auto& m : models()) {
    for (const auto* rho : {&m.position, &m.momentum}) {
      const auto bare = without_closed_forms(*rho);
      for (double order : {-1.0, 0.5, 1.0, 2.0, 3.0}) {
        const auto exact = rho->analytic_moment(order);
        if (!exact) continue;
        if (order <= -rho->dimension()) continue;
        INFO(m.label << " order " << order);
        const auto num = functionals::radial_moment(bare, order);
        CHECK(num.method == Method::quadrature);
        CHECK_REL(num.value, *exact, 1e-8);
      }
    }
  }
}

TEST_CASE("closed forms where they are known") {
  const auto h = densities::hydrogenic3d(1.0);
  CHECK_REL(*h.position.analytic_moment(1.0), 1.5, 1e-15);
  CHECK_REL(*h.position.analytic_moment(2.0), 3.0, 1e-15);
  CHECK_REL(*h.momentum.analytic_moment(2.0), 1.0, 1e-15);
  CHECK_REL(*h.momentum.analytic_moment(1.0), 8.0 / (3.0 * pi), 1e-15);
  CHECK_REL(*h.momentum.analytic_moment(-1.0), 16.0 / (3.0 * pi), 1e-15);
  const auto g = densities::gaussian_pair(3, 1.0);
  CHECK_REL(*g.position.analytic_moment(2.0), 3.0, 1e-15);
  CHECK_REL(*g.momentum.analytic_moment(2.0), 0.75, 1e-15);
  // Oscillator: <x^2> = sum of occupied (n + 1/2).
  const auto ho = densities::harmonic_fermions_1d(5, 2);
  CHECK_REL(*ho.position.analytic_moment(2.0), 2 * 0.5 + 2 * 1.5 + 2.5, 1e-15);
  CHECK(densities::harmonic_fermions_1d(2, 2).single_orbital);
  CHECK_FALSE(densities::harmonic_fermions_1d(3, 2).single_orbital);
  CHECK_THROWS_AS(densities::harmonic_fermions_1d(0, 2), DomainError);
  CHECK_THROWS_AS(densities::gaussian_pair(3, -1.0), DomainError);
}

TEST_CASE("property: scaling laws of moments, entropic moments and Fisher information") {
  testing::Gen gen(31);
  const auto all = models();
  for (const double lambda : {0.5, 2.0}) {
    for (const auto& m : all) {
      const auto s = m.scaled(lambda);
      const double alpha = gen.uniform(0.5, 3.0);
      const double mm = gen.uniform(1.1, 2.5);
      INFO(m.label << " lambda " << lambda << " alpha " << alpha << " m " << mm);
      const int d = m.dimension();
      CHECK_REL(functionals::radial_moment(without_closed_forms(s.position), alpha).value,
                std::pow(lambda, -alpha) * functionals::radial_moment(m.position, alpha).value, 1e-8);
      CHECK_REL(functionals::radial_moment(without_closed_forms(s.momentum), alpha).value,
                std::pow(lambda, alpha) * functionals::radial_moment(m.momentum, alpha).value, 1e-8);
      CHECK_REL(functionals::entropic_moment(s.position, mm).value,
                std::pow(lambda, d * (mm - 1)) * functionals::entropic_moment(m.position, mm).value, 1e-8);
      CHECK_REL(functionals::fisher_information(s.position).value,
                lambda * lambda * functionals::fisher_information(m.position).value, 1e-8);
      CHECK_REL(raw_mass(s.position), m.particle_count(), 1e-8);
    }
  }
}

TEST_CASE("hermite functions are orthonormal and match psi_0") {
  const int n_max = 30;
  // Gauss-Hermite-free check: plain quadrature on [-12, 12] is ample for n <= 30.
  for (int i = 0; i <= n_max; ++i) {
    for (int j = i; j <= n_max; j += 7) {
      const double v = math::integrate_interval(
                           [&](double x) {
                             const auto psi = densities::hermite_functions(n_max, x);
                             return psi[i] * psi[j];
                           },
                           -12.0, 12.0)
                           .value;
      INFO("i=" << i << " j=" << j);
      CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
  }
  const auto psi = densities::hermite_functions(3, 0.7);
  CHECK_REL(psi[0], std::pow(pi, -0.25) * std::exp(-0.245), 1e-15);
  CHECK_REL(psi[1], std::sqrt(2.0) * 0.7 * psi[0], 1e-14);
  // Far in the tail the recurrence must not overflow or produce NaN.
  for (double v : densities::hermite_functions(50, 30.0)) CHECK(std::isfinite(v));
}

TEST_CASE("tabulated loading: warnings and format errors") {
  const auto g = densities::gaussian_pair(3, 1.0);
  std::vector<double> r, rho;
  for (const auto& [x, v] : densities::sample(g.position, 14.0, 700)) {
    r.push_back(x);
    rho.push_back(v);
  }
  const auto ok = densities::load_tabulated({3, 1.0, 2}, r, rho);
  CHECK_FALSE(ok.warning);
  CHECK_REL(ok.measured_N, 1.0, 1e-6);
  CHECK(ok.density.tabulated());
  CHECK(ok.density(20.0) == 0.0);

  const auto off = densities::load_tabulated({3, 2.0, 2}, r, rho);
  CHECK(off.warning);
  CHECK_REL(off.density.particle_count(), off.measured_N, 1e-15);

  const std::vector<double> short_r{0.0, 1.0, 2.0}, short_rho{1.0, 0.5, 0.1};
  CHECK_THROWS_AS(densities::load_tabulated({3, 1.0, 2}, short_r, short_rho), FormatError);
  auto bad = rho;
  bad[5] = -1.0;
  CHECK_THROWS_AS(densities::load_tabulated({3, 1.0, 2}, r, bad), FormatError);
  auto unordered = r;
  std::swap(unordered[3], unordered[4]);
  CHECK_THROWS_AS(densities::load_tabulated({3, 1.0, 2}, unordered, rho), FormatError);
  CHECK_THROWS_AS(densities::load_tabulated({0, 1.0, 2}, r, rho), DomainError);
}
