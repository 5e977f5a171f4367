#pragma once

#include <cstdint>
#include <vector>

#include "horo/log_value.hpp"
#include "horo/sampler.hpp"

namespace horo {

/// Isotropic unit-intensity Poisson hyperplanes in R^d, restricted to a ball of
/// radius R. Dimensions here may be 1 (closed forms) since nothing is hyperbolic.

struct EuclidMoments {
    double R = 0.0;
    int d = 0;
    LogValue mean;
    LogValue variance;
    LogValue cum4;
    double wass_bound = 0.0;
};

/// ln of the (d-1)-volume of a hyperplane at distance s cut by the ball:
/// kappa_{d-1} (R^2 - s^2)^{(d-1)/2}, zero for |s| >= R.
LogValue f_euclid_log(double s, double R, int d);

/// kappa_d R^d
LogValue mean_euclid_closed(double R, int d);

/// pi^{d-1/2} Gamma(d) R^{2d-1} / (Gamma(d/2+1/2)^2 Gamma(d+1/2))
LogValue var_euclid_closed(double R, int d);

/// pi^{2d-3/2} Gamma(2d-1) R^{4d-3} / (Gamma(d/2+1/2)^4 Gamma(2d-1/2))
LogValue cum4_euclid_closed(double R, int d);

/// 2 kappa_{d-1}^p int_0^R (R^2 - s^2)^{p(d-1)/2} ds by quadrature; p = 1, 2, 4
/// gives the mean, variance and fourth cumulant.
LogValue euclid_power_integral(double R, int d, int p);

struct EuclidWassBound {
    double bound;       ///< (2/pi^{1/4}) Gamma(d+1/2)/Gamma(d) sqrt(Gamma(2d-1)/Gamma(2d-1/2)) R^{-1/2}
    double normalized;  ///< bound * sqrt(R) / d^{1/4}
};

EuclidWassBound wass_bound_euclid(double R, int d);

EuclidMoments euclid_moments(double R, int d);

/// Expected number of hyperplanes hitting the ball: 2R.
inline double euclid_hitting_mass(double R) noexcept { return 2.0 * R; }

void validate_euclid(const SimConfig& cfg);

/// Replication `index`; same stream contract as simulate_total_area.
Realization simulate_euclid(const SimConfig& cfg, std::uint64_t index);

std::vector<Realization> simulate_euclid_batch(const SimConfig& cfg, unsigned threads = 1);

}  // namespace horo
