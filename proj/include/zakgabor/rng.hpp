#pragma once

#include <cstdint>

#include "zakgabor/transforms.hpp"

namespace zakgabor {

/**
 * xoshiro256** seeded through splitmix64: a fixed, documented xorshift-family
 * generator so random-window runs reproduce bit-for-bit across platforms.
 */
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [-1, 1].
    double uniform_pm1() {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0, 1)
        return 2.0 * u - 1.0;
    }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t state_[4];
};

/// Random window with Re and Im of each entry uniform in [-1, 1].
inline Window random_window(const FiniteAbelianGroup& g, Xoshiro256StarStar& rng) {
    Eigen::VectorXcd v(g.order());
    for (std::int64_t i = 0; i < g.order(); ++i) {
        const double re = rng.uniform_pm1();
        const double im = rng.uniform_pm1();
        v[i] = {re, im};
    }
    return Window{g, std::move(v)};
}

}  // namespace zakgabor
