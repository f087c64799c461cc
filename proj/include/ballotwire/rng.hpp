#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace ballotwire {

/// xoshiro256** (Blackman & Vigna), state seeded from a 64-bit seed through
/// splitmix64. Every derived variate is defined here so that another
/// implementation can reproduce the exact stream:
///   uniform() = (next() >> 11) * 2^-53                       in [0, 1)
///   normal()  = sqrt(-2 ln(1 - u1)) * cos(2 pi u2)            one draw = two uniforms
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

    result_type operator()() noexcept { return next(); }

    std::uint64_t next() noexcept {
        auto& s = state_;
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double normal() noexcept {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Integer in [lo, hi] by floor(u * span); tiny modulo bias is irrelevant here.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
        const double span = static_cast<double>(hi - lo + 1);
        auto k = static_cast<std::int64_t>(uniform() * span);
        if (k > hi - lo)
            k = hi - lo;
        return lo + k;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace ballotwire
