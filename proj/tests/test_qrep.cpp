#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msl/mseg_gen.hpp"
#include "msl/quiver.hpp"

using namespace msl;

namespace {
Multisegment lec() { return Multisegment::parse("[4,5]+[2,4]+[3,3]+[1,2]"); }
Multisegment single(int a, int b) { return Multisegment(std::vector<Segment>{Segment(a, b)}); }
}  // namespace

TEST_CASE("interval module structure") {
    QuiverRep r = mu_plus(single(0, 1));
    CHECK(r.dims.at(0) == 1);
    CHECK(r.dims.at(1) == 1);
    REQUIRE(r.maps.count(0) == 1);
    CHECK(r.maps.at(0).rows() == 1);
    CHECK(r.maps.at(0).cols() == 1);
    CHECK(r.maps.at(0).at(0, 0) == 1);
    CHECK(r.maps.count(1) == 0);

    QuiverRep zero = mu_plus(Multisegment());
    CHECK(zero.dims.is_zero());
    CHECK(zero.maps.empty());

    QuiverRep big = mu_plus(lec());
    CHECK(big.dims == grdim(lec()));

    QuiverRep minus = mu_minus(single(0, 1));
    REQUIRE(minus.maps.count(1) == 1);  // map sits at degrees a+1..b
    CHECK(minus.maps.count(0) == 0);
    CHECK(minus.maps.at(1).at(0, 0) == 1);
}

TEST_CASE("segment closed forms, worked instances") {
    CHECK(hom_qplus_segments(Segment(1, 4), Segment(0, 2)) == 1);
    CHECK(hom_qplus_segments(Segment(1, 3), Segment(2, 5)) == 0);
    CHECK(ext1_qplus_segments(Segment(1, 2), Segment(2, 4)) == 1);
    CHECK(hom_qplus_segments(Segment(2, 4), Segment(2, 4)) == 1);  // identity
}

TEST_CASE("closed forms equal explicit kernel and cokernel computations") {
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int b1 = a1; b1 <= 3; ++b1)
            for (int a2 = 0; a2 <= 3; ++a2)
                for (int b2 = a2; b2 <= 3; ++b2) {
                    Segment d(a1, b1), g(a2, b2);
                    auto [h, e] = hom_ext_qrep(mu_plus(single(a1, b1)), mu_plus(single(a2, b2)));
                    CAPTURE(std::to_string(a1) + "," + std::to_string(b1) + " | " + std::to_string(a2) + "," + std::to_string(b2));
                    CHECK(h == hom_qplus_segments(d, g));
                    CHECK(e == ext1_qplus_segments(d, g));
                }
}

TEST_CASE("multisegment sums and the Euler identity") {
    Multisegment m = lec();
    CHECK(hom_qplus(m, m) == 6);
    CHECK(ext1_qplus(m, m) == 4);
    CHECK(hom_qplus(m, m) - ext1_qplus(m, m) == euler_plus(grdim(m), grdim(m)));

    CHECK(hom_qplus(single(0, 1), single(0, 1)) == 1);
    CHECK(hom_qplus(m, Multisegment()) == 0);

    SplitMix64 rng(3);
    GenConfig gen;
    gen.max_segments = 5;
    gen.coord_min = -2;
    gen.coord_max = 5;
    for (int t = 0; t < 200; ++t) {
        Multisegment x = random_multisegment(rng, gen);
        Multisegment y = random_multisegment(rng, gen);
        CHECK(hom_qplus(x, y) - ext1_qplus(x, y) == euler_plus(grdim(x), grdim(y)));
    }
}

TEST_CASE("alpha_plus values and identities") {
    CHECK(alpha_plus(single(1, 1), single(0, 0)) == -1);
    CHECK(alpha_plus(single(0, 1), single(0, 1)) == 1);
    CHECK(alpha_plus(lec(), lec()) == 2);

    SplitMix64 rng(4);
    GenConfig gen;
    for (int t = 0; t < 200; ++t) {
        Multisegment x = random_multisegment(rng, gen);
        Multisegment y = random_multisegment(rng, gen);
        CHECK(alpha_plus(x, y) + alpha_plus(y, x) == sym_form(grdim(x), grdim(y)));

        // the per-pair rule sums to the same value
        std::int64_t acc = 0;
        for (const Segment& d : x.segments())
            for (const Segment& g : y.segments()) acc += alpha_plus_segment_pair(d, g);
        CHECK(acc == alpha_plus(x, y));
    }
}

TEST_CASE("alpha values") {
    CHECK(alpha(single(0, 0), single(0, 0)) == -2);
    CHECK(alpha(single(0, 0), single(1, 1)) == 1);
    CHECK(alpha(single(0, 0), single(3, 3)) == 0);
    CHECK(alpha(lec(), lec()) == -4);
    CHECK(alpha(lec(), single(0, 0)) == alpha(single(0, 0), lec()));
}

TEST_CASE("explicit hom/ext on direct sums agrees with the additive forms") {
    SplitMix64 rng(8);
    GenConfig gen;
    gen.max_segments = 3;
    gen.coord_min = 0;
    gen.coord_max = 4;
    for (int t = 0; t < 40; ++t) {
        Multisegment x = random_multisegment(rng, gen);
        Multisegment y = random_multisegment(rng, gen);
        auto [h, e] = hom_ext_qrep(mu_plus(x), mu_plus(y));
        CHECK(h == hom_qplus(x, y));
        CHECK(e == ext1_qplus(x, y));
    }
}
