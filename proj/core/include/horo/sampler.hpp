#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "horo/hypcore.hpp"
#include "horo/log_value.hpp"
#include "horo/rng.hpp"

namespace horo {

struct SimConfig {
    Dimension d{2};
    double R = 1.0;
    std::uint64_t replications = 1;
    std::uint64_t seed = 0;
    bool record_points = false;
    double count_cap = 1e8;
};

/// One draw of the surface functional.
struct Realization {
    std::uint64_t count = 0;
    LogValue log_area;
    std::vector<HorosphereParam> points;

    /// exp(log_area) if representable.
    std::optional<double> total_area() const noexcept { return log_area.linear(); }
};

/// ln of the expected number of horospheres hitting B_R, 2 sinh((d-1)R)/(d-1).
double log_hitting_mass(double R, Dimension d);

/// 2 sinh((d-1)R)/(d-1). Throws MassOverflowError rather than returning inf.
double hitting_mass(double R, Dimension d);

/// Inverse CDF of the density e^{-(d-1)s} restricted to (-R, R). Strictly
/// increasing in U and always strictly inside (-R, R).
double sample_signed_distance(double R, Dimension d, double U);

/// Uniform direction on S^{d-1}.
std::vector<double> sample_direction(Dimension d, Philox4x32& rng);

/// Poisson(mean): sequential-search inversion below 30, Hormann's PTRS above.
/// Throws FeasibilityError when mean > count_cap.
std::uint64_t sample_poisson_count(double mean, Philox4x32& rng, double count_cap = 1e8);

/// Throws DomainError for an invalid config, FeasibilityError if the expected
/// hitting count exceeds cfg.count_cap.
void validate(const SimConfig& cfg);

/// Replication `index` of cfg; its random streams are keyed by (cfg.seed, index).
Realization simulate_total_area(const SimConfig& cfg, std::uint64_t index);

/// All replications in index order. Output is identical for any worker count.
/// threads == 0 means one worker.
std::vector<Realization> simulate_batch(const SimConfig& cfg, unsigned threads = 1);

}  // namespace horo
