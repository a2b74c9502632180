#pragma once

#include <cstdint>

namespace secant {

/// SplitMix64 finalizer; also the step function of the SplitMix64 stream.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based draw for item `index` of stream `seed`. Any subset of items
/// can be generated in any order, or in parallel, with identical results.
constexpr std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) + index);
}

/// True with probability num/den, exactly, for a uniform 64-bit draw u.
constexpr bool bernoulli(std::uint64_t u, std::uint64_t num, std::uint64_t den) noexcept {
    return static_cast<unsigned __int128>(u) * den < (static_cast<unsigned __int128>(num) << 64);
}

inline constexpr const char* kCounterGeneratorName = "splitmix64-counter";

/// Sequential SplitMix64 stream with an unbiased bounded draw.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        const std::uint64_t out = splitmix64(state_);
        state_ += 0x9e3779b97f4a7c15ULL;
        return out;
    }

    /// Uniform integer in [0, bound); bound > 0.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    constexpr bool coin(std::uint64_t num, std::uint64_t den) noexcept { return bernoulli(next(), num, den); }

private:
    std::uint64_t state_;
};

}  // namespace secant
