#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace horo {

/// P(N(mean, variance) <= x), via std::erfc.
double gaussian_cdf(double x, double variance = 1.0, double mean = 0.0);

struct AnalyticScale {
    double center;
    double scale;
};
struct EmpiricalScale {};

/// (x - center)/scale. Analytic mode uses the exact moments; empirical mode the
/// sample mean and the n-1 sample standard deviation.
/// Throws DegenerateSampleError for a zero scale.
std::vector<double> standardize(std::span<const double> samples, AnalyticScale mode);
std::vector<double> standardize(std::span<const double> samples, EmpiricalScale mode);

/// sup_t |F_n(t) - G(t)| for G = N(target_mean, target_variance).
/// `sorted` must be ascending. Throws std::invalid_argument if empty.
double empirical_kolmogorov(std::span<const double> sorted, double target_variance,
                            double target_mean = 0.0);

/// int |F_n(t) - G(t)| dt, integrated exactly piece by piece.
double empirical_wasserstein1(std::span<const double> sorted, double target_variance,
                              double target_mean = 0.0);

/// W1 between two equal-size sorted samples: mean |a_(i) - b_(i)|.
double wasserstein1_two_sample(std::span<const double> sorted_a, std::span<const double> sorted_b);

struct KStatistics {
    double k1, k2, k3, k4;
};

/// Unbiased cumulant estimators. Throws std::invalid_argument for n < 4.
KStatistics k_statistics(std::span<const double> samples);

struct EmpiricalSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double k4 = 0.0;
    double d_kol = 0.0;
    double d_wass1 = 0.0;
    double target_variance = 1.0;
    bool empirical_standardization = false;
    std::vector<double> standardized;  ///< sorted ascending
};

/// Moments of the raw sample plus distances of its standardized version to
/// N(0, target_variance).
EmpiricalSummary summarize(std::span<const double> samples, AnalyticScale mode,
                           double target_variance);
EmpiricalSummary summarize(std::span<const double> samples, EmpiricalScale mode,
                           double target_variance);

}  // namespace horo
