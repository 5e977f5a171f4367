#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "horo/analytics.hpp"
#include "horo/error.hpp"
#include "oracle/oracles.hpp"

using namespace horo;
namespace fz = oracle::frozen;

TEST_CASE("C_d")
{
    CHECK(log_C_d(Dimension(10)).log == doctest::Approx(fz::log_C_10).epsilon(1e-14));
    // d = 2: 2^{1/2} kappa_1 = 2 sqrt 2
    CHECK(std::exp(log_C_d(Dimension(2)).log) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("moment integrals against mpmath at d = 3, R = 2")
{
    auto set = integrals(2.0, Dimension(3));
    CHECK(set.log_I1.log == doctest::Approx(fz::log_I1_d3_R2).epsilon(1e-10));
    CHECK(set.log_I2.log == doctest::Approx(fz::log_I2_d3_R2).epsilon(1e-10));
    CHECK(set.log_I4.log == doctest::Approx(fz::log_I4_d3_R2).epsilon(1e-10));
    CHECK(set.J == doctest::Approx(fz::J_d3_R2).epsilon(1e-10));
}

TEST_CASE("closed forms at d = 2")
{
    for (double R : {0.1, 1.0, 3.0, 10.0}) {
        auto set = integrals(R, Dimension(2));
        const double J = R - (std::sinh(R) - R) / (std::cosh(R) - 1.0);
        CHECK(set.J == doctest::Approx(J).epsilon(1e-10));
        const double I2 = R * std::cosh(R) - std::sinh(R);
        CHECK(std::exp(set.log_I2.log) == doctest::Approx(I2).epsilon(1e-10));
    }
}

TEST_CASE("mean and variance at d = 3, R = 3")
{
    auto m = moments(3.0, Dimension(3));
    CHECK(*m.mean.linear() == doctest::Approx(fz::mean_d3_R3).epsilon(1e-10));
    CHECK(*m.variance.linear() == doctest::Approx(fz::var_d3_R3).epsilon(1e-10));
    CHECK(mean_two_sided(3.0, Dimension(3)).log == doctest::Approx(m.mean.log).epsilon(1e-10));
    CHECK(m.mean_plus.log < m.mean.log);
}

TEST_CASE("variance halving: two-sided quadrature equals 2 C_d^2 I2")
{
    for (int d : {2, 3, 5, 10, 50}) {
        for (double R : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            const auto m = moments(R, Dimension(d));
            const double two_sided = variance_two_sided(R, Dimension(d)).log;
            CHECK(std::abs(std::expm1(two_sided - m.variance.log)) < 1e-9);
        }
    }
}

TEST_CASE("large arguments stay finite in the log domain")
{
    auto set = integrals(400.0, Dimension(50));
    CHECK(std::isfinite(set.log_I4.log));
    CHECK(set.log_I4.log > 700.0);
    CHECK(std::isfinite(set.J));
    CHECK(std::isfinite(wasserstein_bound_integrals(set)));
    auto m = moments(400.0, Dimension(50));
    CHECK_FALSE(m.variance.linear().has_value());
}

TEST_CASE("Wasserstein bounds against mpmath")
{
    CHECK(wasserstein_bound_integrals(5.0, Dimension(3)) == doctest::Approx(fz::wass_integrals_d3_R5).epsilon(1e-9));
    CHECK(j_integral(8.0, 2.0) == doctest::Approx(fz::J_d3_R8).epsilon(1e-10));
    CHECK(wasserstein_bound_J(8.0, Dimension(3)) == doctest::Approx(fz::wass_J_d3_R8).epsilon(1e-10));
}

TEST_CASE("J exponent 0 is R and J is bounded by R")
{
    CHECK(j_integral(3.5, 0.0) == doctest::Approx(3.5).epsilon(1e-12));
    for (int d : {2, 3, 10, 100}) {
        for (double R : {0.1, 1.0, 7.0}) {
            const double J = integrals(R, Dimension(d)).J;
            CHECK(J > 0.0);
            CHECK(J < R);
        }
    }
}

TEST_CASE("Wasserstein bound decreases in R at fixed d")
{
    for (int d : {2, 3, 6}) {
        double prev = wasserstein_bound_J(1.0, Dimension(d));
        for (double R : {2.0, 4.0, 8.0, 16.0}) {
            const double w = wasserstein_bound_J(R, Dimension(d));
            CHECK(w < prev);
            prev = w;
        }
    }
}

TEST_CASE("Kolmogorov bound")
{
    CHECK(kolmogorov_bound(0.02) == doctest::Approx(fz::kol_of_002).epsilon(1e-14));
    CHECK(kolmogorov_bound(0.0) == 0.0);
    CHECK_THROWS_AS(kolmogorov_bound(-1.0), DomainError);
}

TEST_CASE("rho and its asymptotic form")
{
    auto r = rho(std::log(100.0), Dimension(100));
    CHECK(r.value == doctest::Approx(std::sinh(0.5 * std::log(100.0)) / 10.0).epsilon(1e-14));
    CHECK(r.asymptotic == doctest::Approx(0.5).epsilon(1e-14));
    auto big = rho(40.0, Dimension(1000));
    CHECK(big.value / big.asymptotic == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("substitution identity j_transformed = J")
{
    for (int d : {2, 3, 5, 10, 50}) {
        for (double R : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            const double J = integrals(R, Dimension(d)).J;
            CHECK(std::abs(j_transformed(R, Dimension(d)) - J) / J < 1e-8);
        }
    }
}

TEST_CASE("Bessel limit value against mpmath and Boost")
{
    for (const auto& row : fz::bessel_integral) {
        const double L = row[0];
        CHECK(bessel_limit_value(L) == doctest::Approx(row[1]).epsilon(1e-9));
        const double z = 1.0 / (2.0 * L * L);
        const double boost_value = std::exp(z) * boost::math::cyl_bessel_k(0, z) / (2.0 * L);
        CHECK(bessel_limit_value(L) == doctest::Approx(boost_value).epsilon(1e-9));
    }
    // L -> 0: integral tends to sqrt(pi)/2.
    CHECK(bessel_limit_value(1e-3) == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-5));
    CHECK_THROWS_AS(bessel_limit_value(0.0), DomainError);
}

TEST_CASE("high dimension with rho fixed: J / rho approaches twice the Bessel value")
{
    const int d = 10000;
    const double R = 2.0 * std::asinh(std::sqrt(static_cast<double>(d)));  // rho = 1
    const double J = j_transformed(R, Dimension(d));
    CHECK(J / rho(R, Dimension(d)).value == doctest::Approx(2.0 * bessel_limit_value(1.0)).epsilon(1e-3));
}

TEST_CASE("lemma table rules")
{
    auto a = lemma_ratio_table(LemmaRegime::a, {3}, RList{{5.0, 10.0}});
    REQUIRE(a.size() == 2);
    CHECK(a[0].ratio == doctest::Approx(a[0].J / 5.0));
    auto b1 = lemma_ratio_table(LemmaRegime::b1, {100}, RLogOffset{-1.0});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].R == doctest::Approx(std::log(100.0) - 1.0));
    CHECK(b1[0].ratio == doctest::Approx(b1[0].J * 10.0 * std::exp(-0.5 * b1[0].R)));
    auto b2 = lemma_ratio_table(LemmaRegime::b2, {10, 100}, RAlphaLog{2.0});
    CHECK(b2[1].ratio == doctest::Approx(b2[1].J / std::log(100.0)));

    CHECK_THROWS_AS(lemma_ratio_table(LemmaRegime::a, {}, RList{{1.0}}), DomainError);
    CHECK_THROWS_AS(lemma_ratio_table(LemmaRegime::a, {3}, RList{{}}), DomainError);
    CHECK_THROWS_AS(lemma_ratio_table(LemmaRegime::b2, {100}, RAlphaLog{0.5}), DomainError);
    CHECK_THROWS_AS(lemma_ratio_table(LemmaRegime::a, {3}, RList{{-1.0}}), DomainError);
}

TEST_CASE("regime classification")
{
    auto fixed = rate_envelope(Dimension(3), 16.0, {.fixed_dimension = true});
    CHECK(fixed.regime == Regime::fixed_d);
    CHECK(fixed.rate_envelope == doctest::Approx(0.25));

    auto bounded = rate_envelope(Dimension(1000), std::log(1000.0) - 1.0);
    CHECK(bounded.regime == Regime::high_dim_bounded);
    CHECK(bounded.rate_envelope == doctest::Approx(std::exp(-0.5 * bounded.R)));

    auto unbounded = rate_envelope(Dimension(100), 2.0 * std::log(100.0));
    CHECK(unbounded.regime == Regime::high_dim_unbounded);
    CHECK(unbounded.rate_envelope > 1.0 / (10.0 * std::log(100.0)));

    auto edge = rate_envelope(Dimension(100), std::log(100.0));
    CHECK(edge.on_boundary);
    CHECK(edge.regime == Regime::high_dim_bounded);
    CHECK(to_string(Regime::high_dim_unbounded) != to_string(Regime::fixed_d));
}

TEST_CASE("alpha log envelope")
{
    CHECK(alpha_log_envelope(0.5, 100.0) == doctest::Approx(std::pow(100.0, -0.25)));
    CHECK(alpha_log_envelope(1.0, 100.0) == doctest::Approx(0.1));
    CHECK(alpha_log_envelope(3.0, 100.0) == doctest::Approx(1.0 / (10.0 * std::log(100.0))));
    CHECK_THROWS_AS(alpha_log_envelope(0.0, 100.0), DomainError);
}
