#pragma once

#include <cstddef>
#include <functional>

#include "horo/log_value.hpp"

namespace horo {

struct QuadOptions {
    /// Target relative error of the integral, i.e. absolute error of its log.
    double rel_tol = 1e-10;
    /// Panels are never bisected past this depth.
    int max_depth = 40;
    int initial_panels = 16;
    std::size_t max_panels = std::size_t{1} << 18;
};

/// log of int_a^b exp(log_integrand(x)) dx.
///
/// Globally adaptive bisection over 15-point Gauss-Legendre panels, carried out
/// entirely in the log domain. A panel's error estimate is the gap between its
/// one-panel and two-half-panel rules; refinement stops once the summed error is
/// below rel_tol times the integral. The integrand is only sampled at interior
/// Gauss nodes, so a log-0 endpoint needs no special handling.
///
/// Throws DomainError for a >= b, QuadratureError on non-convergence.
LogValue quad_log_integral(const std::function<double(double)>& log_integrand,
                           double a, double b, const QuadOptions& options = {});

}  // namespace horo
