#pragma once

#include <array>
#include <cstdint>

#include "twr/linalg.hpp"

namespace twr {

/// What a random stream is used for inside one trial. Each tag gets its own
/// stream so that, e.g., changing how many data symbols are drawn never
/// shifts the channel draws.
enum class UsageTag : std::uint64_t {
    channel = 1,
    relay_noise = 2,
    user_noise = 3,
    pilot_noise_phase1 = 4,
    pilot_noise_phase2 = 5,
    pilot_noise_phase3 = 6,
    data_symbols = 7,
};

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stream id for (trial, tag). Pure function of its inputs.
std::uint64_t stream_id(std::uint64_t trial_index, UsageTag tag) noexcept;

/// Deterministic random stream keyed by (seed, stream id). The same key
/// reproduces the same sequence on any thread. xoshiro256** underneath.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    static RngStream for_trial(std::uint64_t seed, std::uint64_t trial_index, UsageTag tag) {
        return RngStream(seed, stream_id(trial_index, tag));
    }

    std::uint64_t next_u64() noexcept;

    /// Uniform on (0, 1].
    double uniform() noexcept;

    /// Circular complex Gaussian with unit total variance (1/2 per part).
    cplx complex_normal() noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace twr
