#include "horo/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "horo/error.hpp"

namespace horo {

namespace {

constexpr int kNodes = 15;

struct GaussLegendre {
    std::array<double, kNodes> x{};
    std::array<double, kNodes> log_w{};
};

// Roots of P_15 by Newton iteration from the Chebyshev guess.
GaussLegendre make_rule()
{
    GaussLegendre rule;
    for (int i = 0; i < kNodes; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = z;
            for (int n = 2; n <= kNodes; ++n) {
                double p2 = ((2.0 * n - 1.0) * z * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = kNodes * (z * p1 - p0) / (z * z - 1.0);
            double step = p1 / dp;
            z -= step;
            if (std::abs(step) < 1e-17) break;
        }
        rule.x[i] = z;
        rule.log_w[i] = std::log(2.0 / ((1.0 - z * z) * dp * dp));
    }
    return rule;
}

const GaussLegendre& rule()
{
    static const GaussLegendre r = make_rule();
    return r;
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_panel(const std::function<double(double)>& f, double a, double b)
{
    const auto& gl = rule();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double log_half = std::log(half);

    std::array<double, kNodes> terms;
    double peak = kNegInf;
    for (int i = 0; i < kNodes; ++i) {
        double v = f(mid + half * gl.x[i]);
        if (std::isnan(v)) v = kNegInf;
        terms[i] = v + gl.log_w[i];
        peak = std::max(peak, terms[i]);
    }
    if (peak == kNegInf) return kNegInf;
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - peak);
    return peak + std::log(sum) + log_half;
}

struct Panel {
    double a, b;
    int depth;
    double log_left, log_right;  // half-panel rules
    double log_est;              // log(left + right)
    double log_err;              // log|whole - (left + right)|
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, int depth, double log_whole)
{
    double m = 0.5 * (a + b);
    Panel p{a, b, depth, log_panel(f, a, m), log_panel(f, m, b), 0.0, 0.0};
    p.log_est = log_add_exp(p.log_left, p.log_right);
    p.log_err = log_abs_diff_exp(log_whole, p.log_est);
    return p;
}

}  // namespace

LogValue quad_log_integral(const std::function<double(double)>& log_integrand, double a, double b,
                           const QuadOptions& options)
{
    if (!(a < b)) throw DomainError("quad_log_integral: requires a < b");

    std::vector<Panel> panels;
    int n0 = std::max(1, options.initial_panels);
    double width = (b - a) / n0;
    for (int i = 0; i < n0; ++i) {
        double lo = a + i * width;
        double hi = (i + 1 == n0) ? b : a + (i + 1) * width;
        panels.push_back(make_panel(log_integrand, lo, hi, 0, log_panel(log_integrand, lo, hi)));
    }

    double log_tol = std::log(options.rel_tol);
    double previous = kNegInf;
    std::vector<Panel> next;
    while (true) {
        LogSumAccumulator total, error;
        for (const auto& p : panels) {
            total.add(p.log_est);
            error.add(p.log_err);
        }
        double log_total = total.result().log;
        double log_error = error.result().log;
        if (log_error == kNegInf || log_error <= log_total + log_tol) return {log_total};

        // Bisect every panel whose error exceeds its equal share of the budget.
        double share = log_total + log_tol - std::log(static_cast<double>(panels.size()));
        next.clear();
        for (const auto& p : panels) {
            if (p.log_err <= share) {
                next.push_back(p);
                continue;
            }
            if (p.depth >= options.max_depth) throw QuadratureError(previous, log_total);
            double m = 0.5 * (p.a + p.b);
            next.push_back(make_panel(log_integrand, p.a, m, p.depth + 1, p.log_left));
            next.push_back(make_panel(log_integrand, m, p.b, p.depth + 1, p.log_right));
        }
        if (next.size() > options.max_panels) throw QuadratureError(previous, log_total);
        panels.swap(next);
        previous = log_total;
    }
}

}  // namespace horo
