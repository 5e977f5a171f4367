#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace horo {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The 64-bit key is the experiment seed. The 128-bit counter is split into a
/// 32-bit block counter, a 32-bit substream tag and the 64-bit replication
/// index, so every (seed, replication, substream) triple owns a disjoint
/// sequence of 2^34 words independent of scheduling.
class Philox4x32 {
public:
    using result_type = std::uint32_t;

    Philox4x32(std::uint64_t seed, std::uint64_t stream, std::uint32_t substream = 0) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        if (next_ == 4) refill();
        return buffer_[next_++];
    }

    std::uint64_t next_u64() noexcept
    {
        std::uint64_t hi = (*this)();
        return (hi << 32) | (*this)();
    }

    /// One Philox block for explicit (key, counter); exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                              std::array<std::uint32_t, 2> key) noexcept;

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> buffer_{};
    int next_ = 4;
};

/// Uniform on the open interval (0, 1), 53 random bits.
inline double uniform_open01(Philox4x32& rng) noexcept
{
    return (static_cast<double>(rng.next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal by Box-Muller; portable bit-for-bit unlike std::normal_distribution.
double standard_normal(Philox4x32& rng) noexcept;

/// Substream tags so optional draws never shift the main sequence.
enum class Substream : std::uint32_t { distances = 0, directions = 1, aux = 2 };

inline Philox4x32 make_stream(std::uint64_t seed, std::uint64_t replication, Substream tag) noexcept
{
    return Philox4x32(seed, replication, static_cast<std::uint32_t>(tag));
}

}  // namespace horo
