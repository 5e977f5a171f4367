#include "horo/hypcore.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "horo/error.hpp"
#include "horo/special.hpp"

namespace horo {

Dimension::Dimension(int d) : d_(d)
{
    if (d < 2) throw DomainError("dimension must be at least 2");
}

double log_cosh_diff(double R, double s)
{
    if (std::abs(s) >= R) return -std::numeric_limits<double>::infinity();
    return std::numbers::ln2 + log_sinh(0.5 * (R + s)) + log_sinh(0.5 * (R - s));
}

LogValue log_chord_area(double s, double R, Dimension d)
{
    if (!(R > 0.0)) throw DomainError("log_chord_area: R must be positive");
    if (std::abs(s) >= R) return LogValue::zero();
    double half_k = 0.5 * d.codim();
    return {log_unit_ball_volume(d.codim()).log +
            half_k * (std::numbers::ln2 + s + log_cosh_diff(R, s))};
}

EuclideanCircle horocycle_disc_embedding(const HorosphereParam& h)
{
    if (h.u.size() != 2) throw DomainError("horocycle_disc_embedding: needs a direction in R^2");
    double norm = std::hypot(h.u[0], h.u[1]);
    if (std::abs(norm - 1.0) > 1e-12) throw DomainError("horocycle_disc_embedding: direction is not a unit vector");

    // Hyperbolic distance r_h from the origin maps to Euclidean radius tanh(r_h/2);
    // the nearest point of the horocycle sits at tanh(s/2) along u, so the circle
    // through it and the ideal point -u has radius (1 + tanh(s/2))/2 = logistic(s).
    double radius = 1.0 / (1.0 + std::exp(-h.s));
    double offset = 1.0 - radius;
    return {{-offset * h.u[0], -offset * h.u[1]}, radius};
}

}  // namespace horo
