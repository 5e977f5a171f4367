#include "horo/euclidean.hpp"

#include <cmath>
#include <numbers>

#include "horo/error.hpp"
#include "horo/quadrature.hpp"
#include "horo/special.hpp"
#include "parallel.hpp"

namespace horo {

namespace {

const double kLogPi = std::log(std::numbers::pi);

void check(double R, int d)
{
    if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("euclidean: R must be positive and finite");
    if (d < 1) throw DomainError("euclidean: dimension must be at least 1");
}

}  // namespace

LogValue f_euclid_log(double s, double R, int d)
{
    check(R, d);
    if (std::abs(s) >= R) return LogValue::zero();
    return {log_unit_ball_volume(d - 1).log + 0.5 * (d - 1) * (std::log(R - s) + std::log(R + s))};
}

LogValue mean_euclid_closed(double R, int d)
{
    check(R, d);
    return {log_unit_ball_volume(d).log + d * std::log(R)};
}

LogValue var_euclid_closed(double R, int d)
{
    check(R, d);
    const double dd = d;
    return {(dd - 0.5) * kLogPi + log_gamma(dd) + (2.0 * dd - 1.0) * std::log(R) -
            2.0 * log_gamma(0.5 * dd + 0.5) - log_gamma(dd + 0.5)};
}

LogValue cum4_euclid_closed(double R, int d)
{
    check(R, d);
    const double dd = d;
    return {(2.0 * dd - 1.5) * kLogPi + log_gamma(2.0 * dd - 1.0) + (4.0 * dd - 3.0) * std::log(R) -
            4.0 * log_gamma(0.5 * dd + 0.5) - log_gamma(2.0 * dd - 0.5)};
}

LogValue euclid_power_integral(double R, int d, int p)
{
    check(R, d);
    if (p < 1) throw DomainError("euclid_power_integral: power must be positive");
    const double half = 0.5 * p * (d - 1);
    auto f = [=](double s) { return half * (std::log(R - s) + std::log(R + s)); };
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    LogValue body = quad_log_integral(f, 0.0, R, opts);
    return {std::numbers::ln2 + p * log_unit_ball_volume(d - 1).log + body.log};
}

EuclidWassBound wass_bound_euclid(double R, int d)
{
    check(R, d);
    const double dd = d;
    double log_bound = std::numbers::ln2 - 0.25 * kLogPi + log_gamma(dd + 0.5) - log_gamma(dd) +
                       0.5 * (log_gamma(2.0 * dd - 1.0) - log_gamma(2.0 * dd - 0.5)) - 0.5 * std::log(R);
    double bound = std::exp(log_bound);
    return {bound, bound * std::sqrt(R) / std::pow(dd, 0.25)};
}

EuclidMoments euclid_moments(double R, int d)
{
    return {R, d, mean_euclid_closed(R, d), var_euclid_closed(R, d), cum4_euclid_closed(R, d),
            wass_bound_euclid(R, d).bound};
}

void validate_euclid(const SimConfig& cfg)
{
    if (!(cfg.R > 0.0) || !std::isfinite(cfg.R)) throw DomainError("simulation: R must be positive and finite");
    if (cfg.replications == 0) throw DomainError("simulation: replications must be positive");
    if (euclid_hitting_mass(cfg.R) > cfg.count_cap)
        throw FeasibilityError(std::log(euclid_hitting_mass(cfg.R)), cfg.count_cap);
}

Realization simulate_euclid(const SimConfig& cfg, std::uint64_t index)
{
    Philox4x32 rng = make_stream(cfg.seed, index, Substream::distances);
    Realization out;
    out.count = sample_poisson_count(euclid_hitting_mass(cfg.R), rng, cfg.count_cap);

    const int d = cfg.d.value();
    const double base = log_unit_ball_volume(d - 1).log;
    const double half_k = 0.5 * (d - 1);
    LogSumAccumulator acc;
    std::optional<Philox4x32> dir_rng;
    if (cfg.record_points) dir_rng.emplace(make_stream(cfg.seed, index, Substream::directions));
    for (std::uint64_t i = 0; i < out.count; ++i) {
        double s = cfg.R * (2.0 * uniform_open01(rng) - 1.0);
        if (std::abs(s) >= cfg.R) continue;
        acc.add(base + half_k * (std::log(cfg.R - s) + std::log(cfg.R + s)));
        if (dir_rng) out.points.push_back({s, sample_direction(cfg.d, *dir_rng)});
    }
    out.log_area = acc.result();
    return out;
}

std::vector<Realization> simulate_euclid_batch(const SimConfig& cfg, unsigned threads)
{
    validate_euclid(cfg);
    return detail::run_parallel(cfg.replications, threads,
                                [&cfg](std::uint64_t i) { return simulate_euclid(cfg, i); });
}

}  // namespace horo
