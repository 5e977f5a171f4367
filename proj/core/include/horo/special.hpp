#pragma once

#include "horo/log_value.hpp"

namespace horo {

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms), reflection
/// below 1/2. Safe for concurrent use, unlike std::lgamma's signgam.
double log_gamma(double x);

/// ln of the volume of the l-dimensional Euclidean unit ball (kappa_l).
LogValue log_unit_ball_volume(int l);

/// ln sinh(x) for x > 0 without overflow for large x.
double log_sinh(double x);

/// log(1 + e^z)
double softplus(double z) noexcept;

/// ln K0(z), modified Bessel function of the second kind, from the integral
/// K0(z) = int_0^inf exp(-z cosh t) dt.
double log_bessel_k0(double z);

/// ln(e^z K0(z)); stays finite where e^z and K0(z) separately do not.
double log_bessel_k0_scaled(double z);

}  // namespace horo
