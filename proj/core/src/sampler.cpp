#include "horo/sampler.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "horo/error.hpp"
#include "horo/special.hpp"
#include "parallel.hpp"

namespace horo {

double log_hitting_mass(double R, Dimension d)
{
    if (!(R > 0.0)) throw DomainError("hitting_mass: R must be positive");
    double k = d.codim();
    return std::numbers::ln2 + log_sinh(k * R) - std::log(k);
}

double hitting_mass(double R, Dimension d)
{
    double lm = log_hitting_mass(R, d);
    double m = std::exp(lm);
    if (!std::isfinite(m)) throw MassOverflowError(lm);
    return m;
}

namespace {

// Inverse CDF of e^{-ks} on (-R, R) with its constants hoisted:
// e^{kR} - U (e^{kR} - e^{-kR}) = e^{kR} [1 - U (1 - e^{-2kR})].
struct DistanceInverseCdf {
    double R, k, one_minus_tail, tail;

    DistanceInverseCdf(double R_, double k_)
        : R(R_), k(k_), one_minus_tail(-std::expm1(-2.0 * k_ * R_)), tail(std::exp(-2.0 * k_ * R_))
    {
    }

    double operator()(double U) const noexcept
    {
        double log_bracket = (U < 0.5) ? std::log1p(-U * one_minus_tail) : std::log((1.0 - U) + U * tail);
        double s = -R - log_bracket / k;
        if (s <= -R) s = std::nextafter(-R, 0.0);
        if (s >= R) s = std::nextafter(R, 0.0);
        return s;
    }
};

// ln(cosh R - cosh s) for |s| < R; one log instead of two while both sinh fit.
inline double fast_log_cosh_diff(double R, double s)
{
    double a = 0.5 * (R + s), b = 0.5 * (R - s);
    if (a < 20.0 && b < 20.0) return std::numbers::ln2 + std::log(std::sinh(a) * std::sinh(b));
    return log_cosh_diff(R, s);
}

}  // namespace

double sample_signed_distance(double R, Dimension d, double U)
{
    if (!(U > 0.0 && U < 1.0)) throw DomainError("sample_signed_distance: U must lie in (0, 1)");
    if (!(R > 0.0)) throw DomainError("sample_signed_distance: R must be positive");
    return DistanceInverseCdf(R, d.codim())(U);
}

std::vector<double> sample_direction(Dimension d, Philox4x32& rng)
{
    std::vector<double> u(static_cast<std::size_t>(d.value()));
    double norm2 = 0.0;
    while (norm2 == 0.0) {
        norm2 = 0.0;
        for (auto& x : u) {
            x = standard_normal(rng);
            norm2 += x * x;
        }
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : u) x *= inv;
    return u;
}

std::uint64_t sample_poisson_count(double mean, Philox4x32& rng, double count_cap)
{
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw DomainError("sample_poisson_count: mean must be finite and >= 0");
    if (mean > count_cap) throw FeasibilityError(std::log(mean), count_cap);
    if (mean == 0.0) return 0;

    if (mean < 30.0) {
        double u = uniform_open01(rng);
        double p = std::exp(-mean);
        double cdf = p;
        std::uint64_t k = 0;
        // The cap on k only matters when u lands in the last ulp below 1.
        while (u > cdf && k < 1000) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    // Transformed rejection with squeeze, Hormann (1993).
    double slam = std::sqrt(mean);
    double loglam = std::log(mean);
    double b = 0.931 + 2.53 * slam;
    double a = -0.059 + 0.02483 * b;
    double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    double vr = 0.9277 - 3.6224 / (b - 2.0);
    while (true) {
        double U = uniform_open01(rng) - 0.5;
        double V = uniform_open01(rng);
        double us = 0.5 - std::abs(U);
        double k = std::floor((2.0 * a / us + b) * U + mean + 0.43);
        if (us >= 0.07 && V <= vr) return static_cast<std::uint64_t>(k);
        if (k < 0.0 || (us < 0.013 && V > us)) continue;
        if (std::log(V) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            -mean + k * loglam - log_gamma(k + 1.0)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

void validate(const SimConfig& cfg)
{
    if (!(cfg.R > 0.0) || !std::isfinite(cfg.R)) throw DomainError("simulation: R must be positive and finite");
    if (cfg.replications == 0) throw DomainError("simulation: replications must be positive");
    if (!(cfg.count_cap >= 1.0)) throw DomainError("simulation: count cap must be at least 1");
    double lm = log_hitting_mass(cfg.R, cfg.d);
    if (lm > std::log(cfg.count_cap)) throw FeasibilityError(lm, cfg.count_cap);
}

Realization simulate_total_area(const SimConfig& cfg, std::uint64_t index)
{
    double mass = std::exp(log_hitting_mass(cfg.R, cfg.d));
    Philox4x32 rng = make_stream(cfg.seed, index, Substream::distances);

    Realization out;
    out.count = sample_poisson_count(mass, rng, cfg.count_cap);

    // log f_R(s) = log kappa_{d-1} + (k/2)(ln 2 + s + ln(cosh R - cosh s)), hoisted.
    const double half_k = 0.5 * cfg.d.codim();
    const double base = log_unit_ball_volume(cfg.d.codim()).log;
    LogSumAccumulator acc;

    std::optional<Philox4x32> dir_rng;
    if (cfg.record_points) {
        dir_rng.emplace(make_stream(cfg.seed, index, Substream::directions));
        out.points.reserve(out.count);
    }
    const DistanceInverseCdf inverse_cdf(cfg.R, cfg.d.codim());
    for (std::uint64_t i = 0; i < out.count; ++i) {
        double s = inverse_cdf(uniform_open01(rng));
        acc.add(base + half_k * (std::numbers::ln2 + s + fast_log_cosh_diff(cfg.R, s)));
        if (dir_rng) out.points.push_back({s, sample_direction(cfg.d, *dir_rng)});
    }
    out.log_area = acc.result();
    return out;
}

std::vector<Realization> simulate_batch(const SimConfig& cfg, unsigned threads)
{
    validate(cfg);
    return detail::run_parallel(cfg.replications, threads,
                                [&cfg](std::uint64_t i) { return simulate_total_area(cfg, i); });
}

}  // namespace horo
