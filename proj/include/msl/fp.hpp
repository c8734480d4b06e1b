#pragma once

#include <cstdint>
#include <stdexcept>

namespace msl {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

/// Deterministic 64-bit PRNG (SplitMix64). Streams are cheap to fork:
/// seed with mix_seed(seed, stream_index) to get independent sequences.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (b * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    g.next();
    return g.next();
}

/// Barrett reduction for a fixed modulus p with 1 < p < 2^32.
/// reduce() accepts any x < p^2.
struct Barrett {
    std::uint64_t p;
    std::uint64_t factor;  // floor(2^64 / p)

    explicit Barrett(std::uint64_t modulus) : p(modulus) {
        if (p < 2 || p >= (1ULL << 32))
            throw std::invalid_argument("modulus out of range");
        factor = static_cast<std::uint64_t>((__uint128_t(1) << 64) / p);
    }

    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((__uint128_t(x) * factor) >> 64);
        std::uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return r;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }

    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const {
        std::uint64_t acc = 1 % p;
        base %= p;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// Inverse of a unit; p must be prime.
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw std::invalid_argument("inverse of zero");
        return pow(a, p - 2);
    }
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs below 3.3e24.
bool is_prime_u64(std::uint64_t n);

}  // namespace msl
