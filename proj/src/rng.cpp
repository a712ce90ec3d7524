#include "twr/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace twr {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_id(std::uint64_t trial_index, UsageTag tag) noexcept {
    return mix64(mix64(trial_index) ^ (static_cast<std::uint64_t>(tag) * 0xd1b54a32d192ed03ULL));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    std::uint64_t key = mix64(seed) ^ std::rotl(stream, 17) ^ 0x6a09e667f3bcc909ULL;
    for (auto& word : s_) {
        key += 0x9e3779b97f4a7c15ULL;
        word = mix64(key);
    }
}

std::uint64_t RngStream::next_u64() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

cplx RngStream::complex_normal() noexcept {
    // Box-Muller; r^2 = -ln(u) gives variance 1/2 per component.
    const double r = std::sqrt(-std::log(uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace twr
