#pragma once

#include <array>
#include <vector>

#include "horo/log_value.hpp"

namespace horo {

/// Space dimension of H^d, d >= 2.
class Dimension {
public:
    explicit Dimension(int d);

    int value() const noexcept { return d_; }
    /// d - 1, the exponent that appears everywhere in the intensity.
    int codim() const noexcept { return d_ - 1; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int d_;
};

/// A horosphere in (signed distance, direction) coordinates of the invariant
/// measure. s > 0 when the origin lies inside the horoball.
struct HorosphereParam {
    double s = 0.0;
    std::vector<double> u;
};

/// Circle in the Poincare disc, internally tangent to the unit circle.
struct EuclideanCircle {
    std::array<double, 2> center{};
    double radius = 0.0;
};

/// ln(cosh R - cosh s) for |s| < R, evaluated as
/// ln 2 + ln sinh((R+s)/2) + ln sinh((R-s)/2) so nothing cancels near |s| = R.
/// Returns log 0 for |s| >= R.
double log_cosh_diff(double R, double s);

/// ln of the (d-1)-volume of H(s) intersected with the ball B_R:
/// kappa_{d-1} [2 e^s (cosh R - cosh s)]^{(d-1)/2}, zero for |s| >= R.
LogValue log_chord_area(double s, double R, Dimension d);

/// Embeds a d = 2 horocycle into the Poincare disc. The ideal point is -u,
/// the Euclidean radius is the logistic function of s.
EuclideanCircle horocycle_disc_embedding(const HorosphereParam& h);

}  // namespace horo
