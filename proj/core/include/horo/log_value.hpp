#pragma once

#include <cmath>
#include <limits>
#include <optional>

namespace horo {

/// Natural logarithm of a nonnegative quantity. log 0 is -inf.
///
/// Surface areas and moment integrals grow like e^{c d R}; everything that can
/// leave double range travels as a LogValue and is combined by log-sum-exp.
struct LogValue {
    double log = -std::numeric_limits<double>::infinity();

    static constexpr LogValue zero() noexcept { return {}; }
    static LogValue from_linear(double x) noexcept { return {std::log(x)}; }

    bool is_zero() const noexcept { return std::isinf(log) && log < 0; }

    /// exp(log) when it is finite, nullopt on overflow.
    std::optional<double> linear() const noexcept
    {
        double v = std::exp(log);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
    }

    friend bool operator==(LogValue, LogValue) = default;
};

/// log(e^a + e^b)
inline double log_add_exp(double a, double b) noexcept
{
    if (a < b) std::swap(a, b);
    if (std::isinf(b) && b < 0) return a;
    return a + std::log1p(std::exp(b - a));
}

/// log|e^a - e^b|, -inf when a == b.
inline double log_abs_diff_exp(double a, double b) noexcept
{
    if (a < b) std::swap(a, b);
    if (std::isinf(b) && b < 0) return a;
    if (a == b) return -std::numeric_limits<double>::infinity();
    return a + std::log(-std::expm1(b - a));
}

inline LogValue operator+(LogValue a, LogValue b) noexcept { return {log_add_exp(a.log, b.log)}; }
inline LogValue operator*(LogValue a, LogValue b) noexcept { return {a.log + b.log}; }

/// Streaming log-sum-exp with a running maximum; never overflows.
class LogSumAccumulator {
public:
    void add(double log_term) noexcept
    {
        if (std::isinf(log_term) && log_term < 0) return;
        if (log_term <= max_) {
            scaled_sum_ += std::exp(log_term - max_);
        } else {
            scaled_sum_ = scaled_sum_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        }
    }

    LogValue result() const noexcept
    {
        if (scaled_sum_ == 0.0) return LogValue::zero();
        return {max_ + std::log(scaled_sum_)};
    }

private:
    double max_ = -std::numeric_limits<double>::infinity();
    double scaled_sum_ = 0.0;
};

}  // namespace horo
