#include "horo/analytics.hpp"

#include <cmath>
#include <numbers>

#include "horo/error.hpp"
#include "horo/special.hpp"

namespace horo {

namespace {

QuadOptions integral_options()
{
    QuadOptions o;
    o.rel_tol = kIntegralRelTol;
    return o;
}

void check_radius(double R)
{
    if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("R must be positive and finite");
}

LogValue integrate(const std::function<double(double)>& f, double a, double b)
{
    return quad_log_integral(f, a, b, integral_options());
}

}  // namespace

std::string_view to_string(Regime r) noexcept
{
    switch (r) {
    case Regime::fixed_d: return "fixed_d";
    case Regime::high_dim_bounded: return "high_dim_bounded";
    case Regime::high_dim_unbounded: return "high_dim_unbounded";
    }
    return "unknown";
}

std::string_view to_string(LemmaRegime r) noexcept
{
    switch (r) {
    case LemmaRegime::a: return "a";
    case LemmaRegime::b1: return "b1";
    case LemmaRegime::b2: return "b2";
    }
    return "unknown";
}

LogValue log_C_d(Dimension d)
{
    return {0.5 * d.codim() * std::numbers::ln2 + log_unit_ball_volume(d.codim()).log};
}

double j_integral(double R, double exponent)
{
    check_radius(R);
    const double log_denominator = log_cosh_diff(R, 0.0);  // ln(cosh R - 1)
    auto f = [=](double s) { return exponent * (log_cosh_diff(R, s) - log_denominator); };
    return std::exp(integrate(f, 0.0, R).log);
}

IntegralSet integrals(double R, Dimension d)
{
    check_radius(R);
    const double k = d.codim();
    IntegralSet out;
    out.R = R;
    out.d = d.value();
    out.log_C_d = log_C_d(d);
    out.log_I1 = integrate([=](double s) { return 0.5 * k * (log_cosh_diff(R, s) - s); }, 0.0, R);
    out.log_I2 = integrate([=](double s) { return k * log_cosh_diff(R, s); }, 0.0, R);
    out.log_I4 = integrate([=](double s) { return k * (2.0 * log_cosh_diff(R, s) - s); }, 0.0, R);
    out.J = j_integral(R, k);
    return out;
}

LogValue variance_two_sided(double R, Dimension d)
{
    check_radius(R);
    const double k = d.codim();
    return integrate([=](double s) { return 2.0 * log_chord_area(s, R, d).log - k * s; }, -R, R);
}

LogValue mean_two_sided(double R, Dimension d)
{
    check_radius(R);
    const double k = d.codim();
    return integrate([=](double s) { return log_chord_area(s, R, d).log - k * s; }, -R, R);
}

MomentSummary moments(double R, Dimension d)
{
    IntegralSet set = integrals(R, d);
    const double lc = set.log_C_d.log;
    MomentSummary m;
    m.mean = mean_two_sided(R, d);
    m.mean_plus = {lc + set.log_I1.log};
    m.variance = {std::numbers::ln2 + 2.0 * lc + set.log_I2.log};
    m.cum4_minus = {4.0 * lc + set.log_I4.log};
    return m;
}

double wasserstein_bound_J(const IntegralSet& set)
{
    if (set.d < 2) throw DomainError("wasserstein_bound_J: requires d >= 2");
    const double k = set.d - 1;
    return std::numbers::sqrt2 * (1.0 / (std::sqrt(k) * set.J) + 2.0 / (k * std::sqrt(set.J)));
}

double wasserstein_bound_J(double R, Dimension d) { return wasserstein_bound_J(integrals(R, d)); }

double wasserstein_bound_integrals(const IntegralSet& set)
{
    const double l1 = set.log_I1.log, l2 = set.log_I2.log, l4 = set.log_I4.log;
    return std::numbers::sqrt2 * (std::exp(0.5 * l4 - l2) + std::exp(l1 - 0.5 * l2));
}

double wasserstein_bound_integrals(double R, Dimension d)
{
    return wasserstein_bound_integrals(integrals(R, d));
}

double kolmogorov_bound(double wass)
{
    if (!(wass >= 0.0)) throw DomainError("kolmogorov_bound: distance must be nonnegative");
    return std::sqrt(2.0 / std::sqrt(std::numbers::pi) * wass);
}

Rho rho(double R, Dimension d)
{
    check_radius(R);
    const double log_d = std::log(static_cast<double>(d.value()));
    return {std::exp(log_sinh(0.5 * R) - 0.5 * log_d), 0.5 * std::exp(0.5 * (R - log_d))};
}

double j_transformed(double R, Dimension d)
{
    check_radius(R);
    const double k = d.codim();
    const double log_d = std::log(static_cast<double>(d.value()));
    const double sd = std::sqrt(static_cast<double>(d.value()));
    const double log_rho = log_sinh(0.5 * R) - 0.5 * log_d;
    // (1 - x^2/d) = (sqrt d - x)(sqrt d + x)/d; sqrt(1 + rho^2 x^2) via softplus.
    auto f = [=](double x) {
        return k * (std::log(sd - x) + std::log(sd + x) - log_d) -
               0.5 * softplus(2.0 * (log_rho + std::log(x)));
    };
    return std::exp(std::numbers::ln2 + log_rho + integrate(f, 0.0, sd).log);
}

double bessel_limit_value(double L)
{
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("bessel_limit_value: L must be positive");
    const double z = 1.0 / (2.0 * L * L);
    return std::exp(log_bessel_k0_scaled(z) - std::log(2.0 * L));
}

std::vector<LemmaRow> lemma_ratio_table(LemmaRegime regime, const std::vector<int>& d_grid,
                                        const RRule& rule)
{
    if (d_grid.empty()) throw DomainError("lemma_ratio_table: empty dimension grid");
    if (const auto* list = std::get_if<RList>(&rule); list && list->values.empty())
        throw DomainError("lemma_ratio_table: empty radius grid");

    auto radii_for = [&rule](int d) -> std::vector<double> {
        const double log_d = std::log(static_cast<double>(d));
        if (const auto* list = std::get_if<RList>(&rule)) return list->values;
        if (const auto* off = std::get_if<RLogOffset>(&rule)) return {log_d + off->offset};
        return {std::get<RAlphaLog>(rule).alpha * log_d};
    };

    // Validate the whole grid before doing any quadrature.
    for (int d : d_grid) {
        Dimension dim(d);
        for (double R : radii_for(d)) {
            check_radius(R);
            if (regime == LemmaRegime::b2 && !(R > std::log(static_cast<double>(d))))
                throw DomainError("lemma_ratio_table: regime b2 requires R > ln d");
        }
    }

    std::vector<LemmaRow> rows;
    for (int d : d_grid) {
        const double log_d = std::log(static_cast<double>(d));
        for (double R : radii_for(d)) {
            double J = j_integral(R, d - 1);
            double ratio = 0.0;
            switch (regime) {
            case LemmaRegime::a: ratio = J / R; break;
            case LemmaRegime::b1: ratio = J * std::exp(0.5 * log_d - 0.5 * R); break;
            case LemmaRegime::b2: ratio = J / (R - log_d); break;
            }
            rows.push_back({d, R, J, ratio});
        }
    }
    return rows;
}

BoundReport rate_envelope(Dimension d, double R, const EnvelopeOptions& options)
{
    IntegralSet set = integrals(R, d);
    BoundReport rep;
    rep.d = d.value();
    rep.R = R;
    rep.J = set.J;
    rep.wass_bound_J = wasserstein_bound_J(set);
    rep.wass_bound_integrals = wasserstein_bound_integrals(set);
    rep.kolmogorov_bound = kolmogorov_bound(rep.wass_bound_J);

    const double dd = d.value();
    const double gap = R - std::log(dd);
    rep.on_boundary = std::abs(gap - options.threshold) <= 1e-12 * std::max(1.0, R);
    if (options.fixed_dimension) {
        rep.regime = Regime::fixed_d;
        rep.rate_envelope = 1.0 / std::sqrt(R);
    } else if (gap <= std::max(options.threshold, 0.0)) {
        rep.regime = Regime::high_dim_bounded;
        rep.rate_envelope = std::exp(-0.5 * R);
    } else {
        rep.regime = Regime::high_dim_unbounded;
        rep.rate_envelope = 1.0 / (std::sqrt(dd) * gap) + 1.0 / (dd * std::sqrt(gap));
    }
    return rep;
}

double alpha_log_envelope(double alpha, double d)
{
    if (!(alpha > 0.0) || !(d > 1.0)) throw DomainError("alpha_log_envelope: needs alpha > 0 and d > 1");
    if (alpha <= 1.0) return std::pow(d, -0.5 * alpha);
    return 1.0 / (std::sqrt(d) * std::log(d));
}

}  // namespace horo
