#include <cmath>

#include "support.hpp"
#include "uncrel/constants.hpp"
#include "uncrel/errors.hpp"
#include "uncrel/mathcore.hpp"

using namespace uncrel;
using namespace uncrel::constants;
using math::pi;

namespace {

// B(d, k) as printed, [k-1][d-1].
constexpr double kPrintedB[4][4] = {
    {0.165728, 0.405724, 0.537513, 0.618094},
    {0.021331, 0.165728, 0.303977, 0.405724},
    {0.002056, 0.061935, 0.165728, 0.262190},
    {0.000158, 0.021331, 0.086812, 0.165728},
};

// d = 3, q = 2 coefficients transcribed cell by cell; (2,4) with the Gamma-ratio exponent 4/3.
double table2(int alpha, int k) {
  const double g = std::tgamma(0.75), g114 = std::tgamma(2.75), g174 = std::tgamma(4.25);
  switch (alpha * 10 + k) {
    case 11: return 9.0 / 49.0 * std::cbrt(45 * pi);
    case 12: return 243.0 / 5324.0 * std::pow(35 * pi, 2.0 / 3.0);
    case 13: return 243.0 / 625.0 * pi;
    case 14: return 841995.0 / 39617584.0 * std::cbrt(3465 * std::pow(pi, 4));
    case 21: return 9.0 / 22.0 * std::sqrt(3.0 / 11.0) * std::cbrt(35 * pi);
    case 22: return 9.0 / 16.0 * std::pow(3.0, 2.0 / 3.0);
    case 23: return 135.0 / 196.0 * std::sqrt(3.0 / 7.0) * pi;
    case 24: return 2268.0 / 28561.0 * std::cbrt(21.0 / 13.0 * pi * pi) * std::pow(g174 / g114, 4.0 / 3.0);
    case 31: return 0.6 * std::cbrt(9.0 / 5.0 * pi);
    case 32: return 3.0 * std::pow(45 * pi / (196 * std::sqrt(7.0)), 2.0 / 3.0);
    case 33: return 0.5 * pi;
    case 34: return 189.0 / 484.0 * std::cbrt(63.0 / 44.0 * std::pow(pi, 4));
    case 41: return 3.0 / 38.0 * std::pow(3.0 / 19.0, 0.25) * std::cbrt(3465 * pi);
    case 42: return 24 * std::sqrt(3.0) / 169.0 * std::cbrt(4 * pi / std::sqrt(13.0)) * std::pow(g174 / g, 2.0 / 3.0);
    case 43: return 21.0 / 4.0 * std::pow(3.0 / 11.0, 1.75) * pi;
    case 44: return 567.0 / 3200.0 * std::cbrt(31.5) * pi * pi / std::pow(g * g114, 4.0 / 3.0);
  }
  return NAN;
}

}  // namespace

TEST_CASE("Table I: all 16 cells within 1e-5 of the printed values") {
  for (int k = 1; k <= 4; ++k) {
    for (int d = 1; d <= 4; ++d) {
      INFO("d=" << d << " k=" << k);
      CHECK(std::abs(daubechies_factor(d, k) - kPrintedB[k - 1][d - 1]) <= 1e-5);
    }
  }
}

TEST_CASE("B(d,k) depends only on d/k") {
  const double b11 = daubechies_factor(1, 1);
  CHECK(std::abs(b11 - daubechies_factor(2, 2)) <= 1e-8);
  CHECK(std::abs(daubechies_factor(2, 2) - daubechies_factor(3, 3)) <= 1e-8);
  CHECK(std::abs(daubechies_factor(3, 3) - daubechies_factor(4, 4)) <= 1e-8);
  CHECK(std::abs(b11 - 0.165728) <= 1e-5);
  testing::Gen g(21);
  for (int i = 0; i < 20; ++i) {
    const int d = g.integer(1, 5);
    const double k = g.uniform(0.3, 5.0);
    const int m = g.integer(2, 4);
    INFO("d=" << d << " k=" << k << " m=" << m);
    CHECK(std::abs(daubechies_factor(d, k) - daubechies_factor(m * d, m * k)) <= 1e-8);
  }
}

TEST_CASE("daubechies_table matches its serial reference exactly") {
  const auto par = daubechies_table(4, 4);
  const auto ser = daubechies_table_serial(4, 4);
  REQUIRE(par.size() == 16);
  REQUIRE(ser.size() == 16);
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].d == ser[i].d);
    CHECK(par[i].k == ser[i].k);
    CHECK(par[i].value == ser[i].value);
  }
  CHECK(par[0].k == 1);
  CHECK(par[1].d == 2);
}

TEST_CASE("semiclassical constant: K_d(0) = 1 and K_3(k) = 2^{k/3} c_k") {
  for (int d = 1; d <= 5; ++d) CHECK(semiclassical_constant(d, 0.0) == 1.0);
  for (double k : {-2.0, -1.0, 1.0, 2.0, 3.0, 4.0}) {
    INFO("k=" << k);
    CHECK(std::abs(semiclassical_constant(3, k) - std::pow(2.0, k / 3.0) * thakkar_coefficient(k)) <=
          1e-12 * thakkar_coefficient(k));
  }
  // c_2 is the Thomas-Fermi constant 3/5 (3 pi^2)^{2/3}.
  CHECK_REL(thakkar_coefficient(2.0), 0.6 * std::pow(3 * pi * pi, 2.0 / 3.0), 1e-15);
  CHECK_THROWS_AS(semiclassical_constant(3, -3.0), DomainError);
  CHECK_THROWS_AS(thakkar_coefficient(-3.5), DomainError);
}

TEST_CASE("K_d(2) F(d,2,2) equals the Heisenberg product constant A(2,d)") {
  for (int d = 1; d <= 5; ++d) {
    INFO("d=" << d);
    const double a2 = std::pow(d / (d + 1.0) * std::pow(std::tgamma(d + 1.0), 1.0 / d), 2);
    CHECK_REL(heisenberg_product_constant(d), a2, 1e-14);
    CHECK_REL(heisenberg_constant(d, 2.0, 2.0), a2, 1e-10);
  }
}

TEST_CASE("Heisenberg anchors 1.85733 and 1.17005") {
  CHECK(std::abs(heisenberg_constant(3, 2, 2) - 1.85733) <= 2e-4);
  CHECK(std::abs(heisenberg_rhs(3, 2, 2, 1.0, 2) - 1.17005) <= 2e-4);
  CHECK(heisenberg_exponent(3, 2, 2) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(heisenberg_exponent(3, 4, 2) == doctest::Approx(13.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("Table II: coefficients against the transcribed closed forms") {
  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (int k = 1; k <= 4; ++k) {
      INFO("alpha=" << alpha << " k=" << k);
      CHECK_REL(heisenberg_rhs(3, alpha, k, 1.0, 2), table2(alpha, k), 1e-10);
    }
  }
}

TEST_CASE("property: heisenberg_rhs follows the N and q power laws") {
  testing::Gen g(22);
  for (int i = 0; i < 100; ++i) {
    const int d = g.integer(1, 5);
    const double alpha = g.uniform(0.5, 5.0);
    const double k = g.uniform(0.5, 5.0);
    const double N = g.log_uniform(1.0, 200.0);
    const int q = g.integer(1, 4);
    INFO("d=" << d << " alpha=" << alpha << " k=" << k);
    const double base = heisenberg_rhs(d, alpha, k, 1.0, 1);
    CHECK_REL(heisenberg_rhs(d, alpha, k, N, q),
              base * std::pow(q, -k / d) * std::pow(N, heisenberg_exponent(d, alpha, k)), 1e-12);
    CHECK(entropic_lower_constant(d, alpha, k) > 0.0);
  }
}

TEST_CASE("negative order: anchors, closed-form agreement and window") {
  const double a[3] = {std::pow(3.0, 1.0 / 6.0) * std::cbrt(2.0), std::cbrt(6.0 / pi),
                       std::sqrt(2.0) * std::pow(0.6, 5.0 / 12.0)};
  const double printed[3] = {1.51309, 1.2407, 1.14308};
  for (int i = 0; i < 3; ++i) {
    const double alpha = 2.0 + i;
    INFO("alpha=" << alpha);
    const auto rhs = negative_order_rhs(3, alpha, -1.0, 1.0, 2);
    REQUIRE(rhs.valid);
    CHECK(std::abs(rhs.value - printed[i]) <= 1e-4);
    CHECK_REL(rhs.value, a[i], 1e-8);
    const auto closed = entropic_upper_closed_form(3, alpha, -1.0);
    REQUIRE(closed.valid);
    CHECK_REL(semiclassical_constant(3, -1.0) * closed.value, negative_order_constant(3, alpha, -1.0), 1e-9);
  }
  CHECK(negative_order_alpha_min(3, -1.0) == doctest::Approx(1.5));
  CHECK(negative_order_alpha_min(3, -2.0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(negative_order_constant(3, 1.4, -1.0), DomainError);
  CHECK_THROWS_AS(negative_order_constant(3, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(negative_order_constant(3, 2.0, -3.0), DomainError);
  CHECK_THROWS_AS(negative_order_rhs(3, 1.0, -1.0, 1.0, 2), DomainError);
  const auto outside = flag_domain_errors([] { return negative_order_constant(3, 1.0, -1.0); });
  CHECK_FALSE(outside.valid);
  CHECK(std::isnan(outside.value));
  CHECK_FALSE(outside.domain_note.empty());
}

TEST_CASE("Fisher anchors and variants") {
  const double large = 5.0 / (3072.0 * std::pow(pi, 4)) * std::cbrt(5.0 / 3.0);
  CHECK(std::abs(fisher_d3_large_N_coefficient() - large) <= 1e-9);
  CHECK(std::abs(fisher_d3_large_N_coefficient() - 1.98107e-5) <= 1e-9);
  CHECK_REL(zumbach_constant(3), 9 * std::pow(4 * pi, 2) * std::pow(0.4, 2.0 / 3.0), 1e-10);
  for (int d = 1; d <= 5; ++d) {
    INFO("d=" << d);
    CHECK_REL(zumbach_constant(d), std::pow(4 * pi, 2) * 5.0 * d * d / (d + 2.0) * std::pow(2.0 / (d + 2.0), 2.0 / d),
              1e-13);
  }
  CHECK_THROWS_AS(zumbach_constant(6), DomainError);

  // The electronic forms are the general ones at q = 2.
  testing::Gen g(23);
  for (int i = 0; i < 40; ++i) {
    const int d = g.integer(1, 5);
    const double N = g.log_uniform(1.0, 500.0);
    INFO("d=" << d << " N=" << N);
    const SystemConfig cfg{d, N, 2};
    CHECK_REL(fisher_rhs(FisherVariant::electronic, cfg), fisher_rhs(FisherVariant::general, cfg), 1e-12);
    CHECK_REL(fisher_rhs(FisherVariant::large_N_electron, cfg), fisher_rhs(FisherVariant::large_N_fermion, cfg),
              1e-12);
    // Large-N form is the N -> inf asymptote of the general one.
    const SystemConfig big{d, 1e12, 2};
    CHECK_REL(fisher_rhs(FisherVariant::general, big), fisher_rhs(FisherVariant::large_N_fermion, big), 1e-4);
  }
  for (double N : {1.0, 10.0, 86.0}) {
    const SystemConfig c3{3, N, 2};
    CHECK_REL(fisher_rhs(FisherVariant::d3_electron, c3), fisher_rhs(FisherVariant::general, c3), 1e-12);
    CHECK_REL(fisher_rhs(FisherVariant::d3_large_N, c3), fisher_rhs(FisherVariant::large_N_electron, c3), 1e-12);
  }
  CHECK_THROWS_AS(fisher_rhs(FisherVariant::electronic, {3, 2.0, 1}), DomainError);
  CHECK_THROWS_AS(fisher_rhs(FisherVariant::d3_electron, {2, 2.0, 2}), DomainError);
  CHECK(parse_fisher_variant(to_string(FisherVariant::d3_large_N)) == FisherVariant::d3_large_N);
  CHECK_THROWS_AS(parse_fisher_variant("bogus"), FormatError);
}

TEST_CASE("SystemConfig validation and domain flagging") {
  CHECK_THROWS_AS((SystemConfig{0, 1.0, 2}.validate()), DomainError);
  CHECK_THROWS_AS((SystemConfig{3, 0.0, 2}.validate()), DomainError);
  CHECK_THROWS_AS((SystemConfig{3, 1.0, 0}.validate()), DomainError);
  CHECK((SystemConfig{3, 1.0, 2}.spin()) == 0.5);
  const auto bad = flag_domain_errors([] { return semiclassical_constant(2, -5.0); });
  CHECK_FALSE(bad.valid);
  CHECK(std::isnan(bad.value));
  const auto good = flag_domain_errors([] { return semiclassical_constant(2, 1.0); });
  CHECK(good.valid);
  CHECK(std::isfinite(good.value));
  CHECK(rigorous_constant(3, 2.0) == doctest::Approx(semiclassical_constant(3, 2.0) * daubechies_factor(3, 2.0)));
}
