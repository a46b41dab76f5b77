#ifndef CATLAB_RNG_HPP
#define CATLAB_RNG_HPP

#include "catlab/rational.hpp"

#include <cstdint>

namespace catlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** — seedable, fully specified, platform-independent generator.
/// All randomized outputs of the library are reproducible from (seed, params).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Stream for virtual worker `index`, independent of how trials are
    /// scheduled onto threads.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64(sm);
        return Rng(a ^ (0xD1B54A32D192ED03ull * (index + 1)));
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform big integer in [0, m), m > 0, by bit-rejection. Exact.
    Int below(const Int& m) {
        std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
        std::size_t words = (bits + 63) / 64;
        Int r;
        while (true) {
            r = 0;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t x = next();
                if (w + 1 == words && bits % 64 != 0)
                    x &= (std::uint64_t(1) << (bits % 64)) - 1;
                Int word(static_cast<unsigned long>(x >> 32));
                word <<= 32;
                word += static_cast<unsigned long>(x & 0xFFFFFFFFull);
                r |= word << (64 * w);
            }
            if (r < m) return r;
        }
    }

private:
    std::uint64_t s_[4];
};

} // namespace catlab

#endif
