#include <cmath>
#include <vector>

#include "support.hpp"
#include "uncrel/densities.hpp"
#include "uncrel/errors.hpp"
#include "uncrel/functionals.hpp"

using namespace uncrel;
using namespace uncrel::functionals;

namespace {

std::vector<DensityPair> models() {
  std::vector<DensityPair> out;
  for (int d = 1; d <= 5; ++d) out.push_back(densities::gaussian_pair(d, 1.3, 1.0));
  for (double Z : {1.0, 2.0, 8.0}) out.push_back(densities::hydrogenic3d(Z));
  for (int d = 1; d <= 4; ++d) out.push_back(densities::exponential_pair(d, 1.0));
  for (int N = 1; N <= 20; ++N) out.push_back(densities::harmonic_fermions_1d(N, 2));
  return out;
}

}  // namespace

TEST_CASE("Fisher information closed forms") {
  const auto h = densities::hydrogenic3d(1.0);
  CHECK_REL(fisher_information(h.position).value, 4.0, 1e-9);
  CHECK_REL(fisher_information(h.momentum).value, 12.0, 1e-9);
  const auto h2 = densities::hydrogenic3d(2.0);
  CHECK_REL(fisher_information(h2.position).value, 16.0, 1e-9);
  for (int d = 1; d <= 5; ++d) {
    INFO("d=" << d);
    const double a = 0.8;
    const auto g = densities::gaussian_pair(d, a, 3.0);
    // Each coordinate has variance a^2, so I = N d / a^2.
    CHECK_REL(fisher_information(g.position).value, 3.0 * d / (a * a), 1e-9);
    CHECK_REL(fisher_information(g.momentum).value, 3.0 * d * 4.0 * a * a, 1e-9);
  }
}

TEST_CASE("Gaussian saturations: <r^2><p^2> = d^2/4 and I[rho] I[gamma] = 4 d^2") {
  for (int d = 1; d <= 3; ++d) {
    INFO("d=" << d);
    const auto g = densities::gaussian_pair(d, 0.9);
    const double r2 = radial_moment(g.position, 2.0).value;
    const double p2 = radial_moment(g.momentum, 2.0).value;
    CHECK(std::abs(r2 * p2 - d * d / 4.0) <= 1e-10 * d * d / 4.0);
    const double prod = fisher_information(g.position).value * fisher_information(g.momentum).value;
    CHECK(std::abs(prod - 4.0 * d * d) <= 1e-8 * 4.0 * d * d);
  }
}

TEST_CASE("property: Cramer-Rao I V >= d^2 with saturation by the Gaussian") {
  for (const auto& m : models()) {
    for (const auto* rho : {&m.position, &m.momentum}) {
      INFO(m.label);
      const double d2 = m.dimension() * m.dimension();
      const double prod = fisher_information(*rho).value * variance(*rho);
      CHECK(prod >= d2 * (1 - 1e-9));
    }
  }
  for (int d = 1; d <= 5; ++d) {
    const auto g = densities::gaussian_pair(d, 2.1);
    CHECK_REL(fisher_information(g.position).value * variance(g.position), d * d, 1e-8);
  }
}

TEST_CASE("property: real single-orbital states obey I[rho] = 4<p^2> and I[gamma] = 4<r^2>") {
  int tested = 0;
  for (const auto& m : models()) {
    if (!m.real_wavefunction || !m.single_orbital) continue;
    ++tested;
    INFO(m.label);
    CHECK_REL(fisher_information(m.position).value, 4.0 * radial_moment(m.momentum, 2.0).value, 1e-6);
    CHECK_REL(fisher_information(m.momentum).value, 4.0 * radial_moment(m.position, 2.0).value, 1e-6);
  }
  CHECK(tested >= 12);
  // A filled pair of oscillator levels is a sum of two orbital densities; the identity fails.
  const auto ho = densities::harmonic_fermions_1d(4, 2);
  CHECK(fisher_information(ho.position).value < 4.0 * radial_moment(ho.momentum, 2.0).value * (1 - 1e-3));
}

TEST_CASE("entropic moment is continuous at m = 1") {
  for (const auto& m : models()) {
    INFO(m.label);
    const double N = m.particle_count();
    for (double dm : {-1e-6, 1e-6}) {
      CHECK(std::abs(entropic_moment(m.position, 1.0 + dm).value - N) <= 1e-4 * N);
    }
    CHECK_REL(entropic_moment(m.position, 1.0).value, N, 1e-9);
  }
  // W_2 of the d = 3 unit Gaussian: (2 pi)^{-3/2} 2^{-3/2}.
  const auto g = densities::gaussian_pair(3, 1.0);
  CHECK_REL(entropic_moment(g.position, 2.0).value, std::pow(4.0 * M_PI, -1.5), 1e-10);
}

TEST_CASE("divergent functionals are rejected, not returned as large numbers") {
  const auto h = densities::hydrogenic3d(1.0);
  CHECK_THROWS_AS(radial_moment(h.position, -3.0), DivergenceError);
  CHECK_THROWS_AS(radial_moment(h.position, -4.5), DivergenceError);
  // Momentum density decays as p^{-8}: <p^5> diverges.
  CHECK_THROWS_AS(radial_moment(h.momentum, 5.0), DivergenceError);
  CHECK_NOTHROW(radial_moment(h.momentum, 4.0));
  CHECK_THROWS_AS(entropic_moment(h.momentum, 0.3), DivergenceError);
  CHECK_NOTHROW(entropic_moment(h.momentum, 0.5));
  CHECK_THROWS_AS(entropic_moment(h.position, 0.0), DomainError);
  CHECK(tail_decay_exponent(h.momentum) == doctest::Approx(8.0).epsilon(1e-2));
  CHECK(tail_decay_exponent(h.position) > 50.0);
}

TEST_CASE("moment values carry method and a non-negative error estimate") {
  const auto h = densities::hydrogenic3d(1.0);
  const auto a = radial_moment(h.position, 2.0);
  CHECK(a.method == Method::analytic);
  CHECK(a.order == 2.0);
  CHECK(a.est_error >= 0.0);
  // Closed form covers every real order for the exponential family.
  const auto q = radial_moment(h.position, 2.5);
  CHECK(q.method == Method::analytic);
  CHECK(q.est_error >= 0.0);
  CHECK(std::isfinite(q.value));
  CHECK_REL(q.value, std::tgamma(5.5) / 2.0 / std::pow(2.0, 2.5), 1e-9);
  CHECK_REL(variance(h.position), 3.0, 1e-12);
  CHECK(to_string(Method::quadrature) == "quadrature");
}

TEST_CASE("tabulated densities: Fisher information with the relative floor") {
  const auto h = densities::hydrogenic3d(1.0);
  std::vector<double> r, rho;
  for (const auto& [x, v] : densities::sample(h.position, 40.0, 4001)) {
    r.push_back(x);
    rho.push_back(v);
  }
  const auto tab = densities::load_tabulated({3, 1.0, 2}, r, rho).density;
  const auto I = fisher_information(tab);
  CHECK(I.est_error >= 0.0);
  CHECK(std::abs(I.value - 4.0) <= 1e-3 * 4.0 + I.est_error);
  const auto r1 = radial_moment(tab, 1.0);
  CHECK(r1.method == Method::quadrature);
  CHECK(r1.est_error >= 0.0);
  CHECK(std::abs(r1.value - 1.5) <= 1e-5);
}
