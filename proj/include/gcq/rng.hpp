#pragma once

#include <cstdint>

namespace gcq {

/// SplitMix64: a tiny counter-based deterministic generator. Every seeded
/// sweep in the library (verification reports, planted instances, benches)
/// goes through this so that outputs are reproducible across platforms,
/// which std::uniform_int_distribution does not guarantee.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1. Multiply-shift reduction.
    std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace gcq
