// Compares the OpenMP elimination against the serial reference, then
// times the oracle end to end on a medium-size pair.

#include <chrono>
#include <cstdio>

#include "msl/fp_matrix.hpp"
#include "msl/pi_module.hpp"
#include "msl/poles.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main() {
    using namespace msl;
    SplitMix64 rng(12345);

    std::printf("%-8s %-12s %-12s %s\n", "size", "parallel/ms", "serial/ms", "rank");
    for (std::size_t n : {64, 128, 256, 384, 512}) {
        FpMatrix a = FpMatrix::random(n, n, kDefaultPrime, rng);
        // make it rank deficient so elimination has structure to find
        for (std::size_t j = 0; j < n; ++j) a.set(n - 1, j, a.at(0, j));

        auto t0 = std::chrono::steady_clock::now();
        std::size_t r1 = a.rank();
        double par = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::size_t r2 = a.rank_reference();
        double ser = ms_since(t0);

        std::printf("%-8zu %-12.2f %-12.2f %zu%s\n", n, par, ser, r1,
                    r1 == r2 ? "" : "  MISMATCH");
    }

    SampleConfig cfg;
    const Multisegment lec = leclerc_multisegment();
    auto t0 = std::chrono::steady_clock::now();
    std::int64_t h = generic_hom(lec, lec, cfg);
    std::printf("\ngeneric_hom on the golden pair: %lld in %.2f ms (%d samples)\n",
                static_cast<long long>(h), ms_since(t0), cfg.samples);

    Multisegment big = Multisegment::parse("[0,8]+[0,8]+[1,7]+[2,6]+[0,5]");
    t0 = std::chrono::steady_clock::now();
    h = generic_hom(big, big, cfg);
    std::printf("generic_hom on a dense 5-segment pair: %lld in %.2f ms\n",
                static_cast<long long>(h), ms_since(t0));
    return 0;
}
