#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "horo/hypcore.hpp"
#include "horo/log_value.hpp"
#include "horo/quadrature.hpp"

namespace horo {

/// The moment integrals over [0, R], with k = d - 1:
///   I1 = int (cosh R - cosh s)^{k/2} e^{-ks/2} ds
///   I2 = int (cosh R - cosh s)^{k} ds
///   I4 = int (cosh R - cosh s)^{2k} e^{-ks} ds
///   J  = int (1 - (cosh s - 1)/(cosh R - 1))^{k} ds
struct IntegralSet {
    double R = 0.0;
    int d = 0;
    LogValue log_I1;
    LogValue log_I2;
    LogValue log_I4;
    double J = 0.0;
    LogValue log_C_d;
};

/// Exact low-order moments of S_{R,d} and its split S = S+ + S-.
struct MomentSummary {
    LogValue mean;        ///< E S
    LogValue mean_plus;   ///< E S+ = C_d I1
    LogValue variance;    ///< Var S = 2 C_d^2 I2
    LogValue cum4_minus;  ///< cum_4(S-) = C_d^4 I4
};

enum class Regime { fixed_d, high_dim_bounded, high_dim_unbounded };

std::string_view to_string(Regime r) noexcept;

struct BoundReport {
    int d = 0;
    double R = 0.0;
    double J = 0.0;
    double wass_bound_J = 0.0;
    double wass_bound_integrals = 0.0;
    double kolmogorov_bound = 0.0;
    Regime regime = Regime::fixed_d;
    /// Theorem rate without its unknown constant.
    double rate_envelope = 0.0;
    /// R - ln d sits on the classification threshold.
    bool on_boundary = false;
};

struct EnvelopeOptions {
    /// Treat d as fixed and report the R^{-1/2} envelope.
    bool fixed_dimension = false;
    /// Points with R - ln d <= threshold count as the bounded regime.
    double threshold = 0.0;
};

/// ln C_d = ((d-1)/2) ln 2 + ln kappa_{d-1}
LogValue log_C_d(Dimension d);

/// Relative tolerance used by every integral below.
inline constexpr double kIntegralRelTol = 1e-10;

IntegralSet integrals(double R, Dimension d);

/// J with an arbitrary real exponent in place of d - 1. Exponent 0 gives R.
double j_integral(double R, double exponent);

/// Two-sided variance int_{-R}^{R} f_R(s)^2 e^{-(d-1)s} ds, by direct quadrature
/// of the chord area (independent of the I2 route).
LogValue variance_two_sided(double R, Dimension d);

/// E S = int_{-R}^{R} f_R(s) e^{-(d-1)s} ds.
LogValue mean_two_sided(double R, Dimension d);

MomentSummary moments(double R, Dimension d);

/// sqrt(2) (1/(sqrt(d-1) J) + 2/((d-1) sqrt(J)))
double wasserstein_bound_J(double R, Dimension d);
double wasserstein_bound_J(const IntegralSet& set);

/// sqrt(2) (sqrt(I4)/I2 + I1/sqrt(I2))
double wasserstein_bound_integrals(double R, Dimension d);
double wasserstein_bound_integrals(const IntegralSet& set);

/// Kolmogorov distance from a Wasserstein bound against N(0, 1/2):
/// sqrt((2/sqrt(pi)) wass).
double kolmogorov_bound(double wass);

struct Rho {
    double value;       ///< sinh(R/2)/sqrt(d)
    double asymptotic;  ///< (1/2) exp((R - ln d)/2)
};

Rho rho(double R, Dimension d);

/// J after the substitution sinh(s/2)/sinh(R/2) = x/sqrt(d):
/// 2 rho int_0^{sqrt d} (1 - x^2/d)^{d-1} / sqrt(1 + rho^2 x^2) dx.
double j_transformed(double R, Dimension d);

/// (1/(2L)) e^{1/(2L^2)} K0(1/(2L^2)), which equals
/// int_0^inf e^{-x^2} / sqrt(1 + L^2 x^2) dx.
double bessel_limit_value(double L);

enum class LemmaRegime { a, b1, b2 };

std::string_view to_string(LemmaRegime r) noexcept;

/// How R is chosen for each d in a lemma table.
struct RList {
    std::vector<double> values;
};
struct RLogOffset {
    double offset;  ///< R = ln d + offset
};
struct RAlphaLog {
    double alpha;  ///< R = alpha ln d
};
using RRule = std::variant<RList, RLogOffset, RAlphaLog>;

struct LemmaRow {
    int d;
    double R;
    double J;
    double ratio;
};

/// J and the regime ratio for each grid point:
///   a:  J / R
///   b1: J sqrt(d) e^{-R/2}
///   b2: J / (R - ln d)
/// Throws DomainError for empty grids, R <= 0, or R <= ln d in regime b2.
std::vector<LemmaRow> lemma_ratio_table(LemmaRegime regime, const std::vector<int>& d_grid,
                                        const RRule& rule);

BoundReport rate_envelope(Dimension d, double R, const EnvelopeOptions& options = {});

/// The R = alpha ln d example: d^{-alpha/2} for alpha <= 1, d^{-1/2}/ln d beyond.
double alpha_log_envelope(double alpha, double d);

}  // namespace horo
