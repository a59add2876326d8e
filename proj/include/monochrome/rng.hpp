#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace monochrome {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based stream keyed by (seed, stream). Every (seed, stream) pair
/// owns an independent sequence of 2^64 Philox blocks, so results depend
/// only on the pair and never on which thread consumes the stream.
///
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
    result_type operator()() noexcept { return next_u64(); }

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;

    /// Uniform integer in [0, bound), unbiased (Lemire's multiply-reject).
    std::uint64_t uniform_below(std::uint64_t bound) noexcept;
    /// Uniform double in the open interval (0, 1).
    double uniform01() noexcept;
    double normal() noexcept;
    double gamma(double shape) noexcept;
    double chi_square(double dof) noexcept { return 2.0 * gamma(0.5 * dof); }
    std::uint64_t poisson(double mean);

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> buffer_{};
    int available_ = 0;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace monochrome
