#include "horo/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "horo/error.hpp"
#include "horo/quadrature.hpp"

namespace horo {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_log_gamma(double x)
{
    x -= 1.0;
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    double t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double log_gamma(double x)
{
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x), sin(pi x) > 0 on (0, 1/2)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_log_gamma(1.0 - x);
    }
    return lanczos_log_gamma(x);
}

LogValue log_unit_ball_volume(int l)
{
    if (l < 0) throw DomainError("log_unit_ball_volume: dimension must be nonnegative");
    double half = 0.5 * l;
    return {half * std::log(std::numbers::pi) - log_gamma(half + 1.0)};
}

double log_sinh(double x)
{
    if (!(x > 0.0)) throw DomainError("log_sinh: argument must be positive");
    if (x > 20.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

double softplus(double z) noexcept
{
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

double log_bessel_k0_scaled(double z)
{
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("log_bessel_k0: argument must be positive");
    // e^z K0(z) = int_0^inf exp(-2 z sinh^2(t/2)) dt; cut where the exponent passes -750.
    double upper = 2.0 * std::asinh(std::sqrt(750.0 / (2.0 * z)));
    auto log_integrand = [z](double t) {
        double sh = std::sinh(0.5 * t);
        return -2.0 * z * sh * sh;
    };
    QuadOptions opts;
    opts.rel_tol = 1e-13;
    return quad_log_integral(log_integrand, 0.0, upper, opts).log;
}

double log_bessel_k0(double z) { return log_bessel_k0_scaled(z) - z; }

}  // namespace horo
