#include "horo/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "horo/error.hpp"

namespace horo {

namespace {

double gaussian_pdf(double x, double variance, double mean)
{
    double z = x - mean;
    return std::exp(-0.5 * z * z / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

// Antiderivative of G: d/dt [ (t-m) G(t) + v g(t) ] = G(t).
double cdf_antiderivative(double t, double variance, double mean)
{
    return (t - mean) * gaussian_cdf(t, variance, mean) + variance * gaussian_pdf(t, variance, mean);
}

// Antiderivative of 1 - G, i.e. (t-m)(1 - G) - v g.
double survival_antiderivative(double t, double variance, double mean)
{
    return (t - mean) * gaussian_cdf(-(t - mean), variance) - variance * gaussian_pdf(t, variance, mean);
}

// G(t) = c on [lo, hi], with G(lo) <= c <= G(hi). Bracketed Newton.
double solve_cdf(double c, double lo, double hi, double variance, double mean)
{
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        double g = gaussian_cdf(t, variance, mean) - c;
        if (g == 0.0) return t;
        if (g < 0.0) lo = t; else hi = t;
        double dens = gaussian_pdf(t, variance, mean);
        double next = dens > 0.0 ? t - g / dens : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
        t = next;
    }
    return t;
}

// int_a^b |c - G(t)| dt
double abs_gap_integral(double c, double a, double b, double variance, double mean)
{
    if (!(b > a)) return 0.0;
    auto signed_part = [&](double lo, double hi) {
        return c * (hi - lo) - (cdf_antiderivative(hi, variance, mean) - cdf_antiderivative(lo, variance, mean));
    };
    double ga = gaussian_cdf(a, variance, mean);
    double gb = gaussian_cdf(b, variance, mean);
    if (ga < c && c < gb) {
        double root = solve_cdf(c, a, b, variance, mean);
        return std::abs(signed_part(a, root)) + std::abs(signed_part(root, b));
    }
    return std::abs(signed_part(a, b));
}

void check_sorted_nonempty(std::span<const double> xs)
{
    if (xs.empty()) throw std::invalid_argument("empty sample");
    if (!std::is_sorted(xs.begin(), xs.end())) throw std::invalid_argument("sample must be sorted ascending");
}

std::pair<double, double> mean_and_sd(std::span<const double> xs)
{
    if (xs.size() < 2) throw DegenerateSampleError("need at least two samples");
    // Shift by the first element so a constant sample gives exactly zero.
    const double pivot = xs.front();
    double sum = 0.0;
    for (double x : xs) sum += x - pivot;
    double shifted_mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) {
        double dev = (x - pivot) - shifted_mean;
        ss += dev * dev;
    }
    return {pivot + shifted_mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

EmpiricalSummary summarize_impl(std::span<const double> samples, std::vector<double> standardized,
                                double target_variance, bool empirical)
{
    EmpiricalSummary out;
    out.n = samples.size();
    KStatistics k = k_statistics(samples);
    out.mean = k.k1;
    out.variance = k.k2;
    out.k4 = k.k4;
    out.target_variance = target_variance;
    out.empirical_standardization = empirical;
    std::sort(standardized.begin(), standardized.end());
    out.d_kol = empirical_kolmogorov(standardized, target_variance);
    out.d_wass1 = empirical_wasserstein1(standardized, target_variance);
    out.standardized = std::move(standardized);
    return out;
}

}  // namespace

double gaussian_cdf(double x, double variance, double mean)
{
    return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

std::vector<double> standardize(std::span<const double> samples, AnalyticScale mode)
{
    if (!(mode.scale > 0.0) || !std::isfinite(mode.scale))
        throw DegenerateSampleError("standardize: scale must be positive and finite");
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(),
                   [&](double x) { return (x - mode.center) / mode.scale; });
    return out;
}

std::vector<double> standardize(std::span<const double> samples, EmpiricalScale)
{
    auto [mean, sd] = mean_and_sd(samples);
    if (!(sd > 0.0)) throw DegenerateSampleError("standardize: sample has zero spread");
    return standardize(samples, AnalyticScale{mean, sd});
}

double empirical_kolmogorov(std::span<const double> sorted, double target_variance, double target_mean)
{
    check_sorted_nonempty(sorted);
    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double g = gaussian_cdf(sorted[i], target_variance, target_mean);
        sup = std::max({sup, static_cast<double>(i + 1) / n - g, g - static_cast<double>(i) / n});
    }
    return sup;
}

double empirical_wasserstein1(std::span<const double> sorted, double target_variance, double target_mean)
{
    check_sorted_nonempty(sorted);
    const std::size_t n = sorted.size();
    const double v = target_variance, m = target_mean;

    // Tails: int_{-inf}^{x_(1)} G and int_{x_(n)}^{inf} (1 - G).
    double total = cdf_antiderivative(sorted.front(), v, m) - survival_antiderivative(sorted.back(), v, m);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double level = static_cast<double>(i + 1) / static_cast<double>(n);
        total += abs_gap_integral(level, sorted[i], sorted[i + 1], v, m);
    }
    return total;
}

double wasserstein1_two_sample(std::span<const double> sorted_a, std::span<const double> sorted_b)
{
    check_sorted_nonempty(sorted_a);
    check_sorted_nonempty(sorted_b);
    if (sorted_a.size() != sorted_b.size()) throw std::invalid_argument("samples must have equal size");
    double sum = 0.0;
    for (std::size_t i = 0; i < sorted_a.size(); ++i) sum += std::abs(sorted_a[i] - sorted_b[i]);
    return sum / static_cast<double>(sorted_a.size());
}

KStatistics k_statistics(std::span<const double> samples)
{
    if (samples.size() < 4) throw std::invalid_argument("k_statistics: need at least 4 samples");
    const double n = static_cast<double>(samples.size());
    const double pivot = samples.front();
    double sum = 0.0;
    for (double x : samples) sum += x - pivot;
    const double shifted_mean = sum / n;

    // Central power sums; k2..k4 are shift invariant so S1 = 0 drops out.
    double s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (double x : samples) {
        double e = (x - pivot) - shifted_mean;
        double e2 = e * e;
        s2 += e2;
        s3 += e2 * e;
        s4 += e2 * e2;
    }
    KStatistics k{};
    k.k1 = pivot + shifted_mean;
    k.k2 = s2 / (n - 1.0);
    k.k3 = n * s3 / ((n - 1.0) * (n - 2.0));
    k.k4 = (n * n * (n + 1.0) * s4 - 3.0 * n * (n - 1.0) * s2 * s2) /
           (n * (n - 1.0) * (n - 2.0) * (n - 3.0));
    return k;
}

EmpiricalSummary summarize(std::span<const double> samples, AnalyticScale mode, double target_variance)
{
    return summarize_impl(samples, standardize(samples, mode), target_variance, false);
}

EmpiricalSummary summarize(std::span<const double> samples, EmpiricalScale mode, double target_variance)
{
    return summarize_impl(samples, standardize(samples, mode), target_variance, true);
}

}  // namespace horo
