#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msl/fp_matrix.hpp"

using namespace msl;

TEST_CASE("primality helper") {
    CHECK(is_prime_u64(2147483647ULL));
    CHECK(is_prime_u64(1000000007ULL));
    CHECK_FALSE(is_prime_u64(2147483646ULL));
    CHECK_FALSE(is_prime_u64(1));
}

TEST_CASE("barrett arithmetic agrees with plain modular arithmetic") {
    Barrett f(kDefaultPrime);
    SplitMix64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        std::uint64_t a = rng.below(kDefaultPrime);
        std::uint64_t b = rng.below(kDefaultPrime);
        CHECK(f.mul(a, b) == (__uint128_t(a) * b % kDefaultPrime));
        CHECK(f.add(a, b) == (a + b) % kDefaultPrime);
        CHECK(f.sub(a, b) == (a + kDefaultPrime - b) % kDefaultPrime);
        if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("parallel rank matches the serial reference") {
    SplitMix64 rng(42);
    for (std::size_t n : {1, 7, 40, 130}) {
        for (int t = 0; t < 3; ++t) {
            FpMatrix a = FpMatrix::random(n, n + t, kDefaultPrime, rng);
            // plant dependent rows
            if (n > 2) {
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    a.set(n / 2, j, a.at(0, j));
                    a.set(n - 1, j, 0);
                }
            }
            CHECK(a.rank() == a.rank_reference());
        }
    }
}

TEST_CASE("nullspace spans the kernel") {
    SplitMix64 rng(99);
    for (int t = 0; t < 10; ++t) {
        std::size_t rows = 5 + rng.below(40);
        std::size_t cols = 5 + rng.below(40);
        FpMatrix a = FpMatrix::random(rows, cols, kDefaultPrime, rng);
        FpMatrix ns = a.right_nullspace();
        CHECK(ns.rows() == cols - a.rank());
        for (std::size_t k = 0; k < ns.rows(); ++k) {
            FpMatrix v(cols, 1, kDefaultPrime);
            for (std::size_t j = 0; j < cols; ++j) v.set(j, 0, ns.at(k, j));
            CHECK(a.mul(v).is_zero());
        }
        // basis rows are independent
        CHECK(ns.rank() == ns.rows());
    }
}

TEST_CASE("inverse round trip") {
    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng.below(12);
        FpMatrix a = FpMatrix::random(n, n, kDefaultPrime, rng);
        auto inv = a.inverse();
        if (!inv) continue;
        CHECK(a.mul(*inv) == FpMatrix::identity(n, kDefaultPrime));
    }
    FpMatrix zero(3, 3, kDefaultPrime);
    CHECK_FALSE(zero.inverse().has_value());
}

TEST_CASE("rank over a second prime matches") {
    SplitMix64 rng(123);
    for (int t = 0; t < 5; ++t) {
        std::size_t n = 10 + rng.below(30);
        FpMatrix a(n, n, kDefaultPrime);
        FpMatrix b(n, n, 1000000007ULL);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t v = rng.below(97);  // small entries, same over both fields
                a.set(i, j, v);
                b.set(i, j, v);
            }
        CHECK(a.rank() == b.rank());
    }
}
