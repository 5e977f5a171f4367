#include "horo/error.hpp"

#include <cmath>
#include <sstream>

namespace horo {

namespace {

std::string feasibility_message(double log_m, double cap)
{
    std::ostringstream os;
    os << "expected hitting count exp(" << log_m << ")";
    if (double m = std::exp(log_m); std::isfinite(m)) os << " = " << m;
    os << " exceeds the count cap " << cap;
    return os.str();
}

std::string overflow_message(double log_m)
{
    std::ostringstream os;
    os << "mass overflow: hitting mass exp(" << log_m << ") is not representable";
    return os.str();
}

std::string quadrature_message(double prev, double last)
{
    std::ostringstream os;
    os << "quadrature failed to converge (last log estimates " << prev << ", " << last << ")";
    return os.str();
}

}  // namespace

FeasibilityError::FeasibilityError(double log_expected_count, double count_cap)
    : std::runtime_error(feasibility_message(log_expected_count, count_cap)),
      log_expected_count_(log_expected_count),
      count_cap_(count_cap)
{
}

MassOverflowError::MassOverflowError(double log_mass)
    : std::overflow_error(overflow_message(log_mass)), log_mass_(log_mass)
{
}

QuadratureError::QuadratureError(double previous_log_estimate, double last_log_estimate)
    : std::runtime_error(quadrature_message(previous_log_estimate, last_log_estimate)),
      previous_(previous_log_estimate),
      last_(last_log_estimate)
{
}

}  // namespace horo
