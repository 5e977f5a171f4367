#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace horo {

/// Argument outside the domain of a mathematical operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The expected number of horospheres hitting the ball exceeds the count cap.
class FeasibilityError : public std::runtime_error {
public:
    FeasibilityError(double log_expected_count, double count_cap);

    double log_expected_count() const noexcept { return log_expected_count_; }
    double count_cap() const noexcept { return count_cap_; }

private:
    double log_expected_count_;
    double count_cap_;
};

/// hitting_mass() does not fit in a double; log_mass() is still exact.
class MassOverflowError : public std::overflow_error {
public:
    explicit MassOverflowError(double log_mass);

    double log_mass() const noexcept { return log_mass_; }

private:
    double log_mass_;
};

/// Adaptive quadrature hit its depth or panel cap before converging.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double previous_log_estimate, double last_log_estimate);

    double previous_log_estimate() const noexcept { return previous_; }
    double last_log_estimate() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

/// Standardization with a zero (or non-finite) scale.
class DegenerateSampleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace horo
