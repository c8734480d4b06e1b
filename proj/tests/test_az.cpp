#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msl/az.hpp"
#include "msl/classify.hpp"
#include "msl/dim_vector.hpp"
#include "msl/mseg_gen.hpp"

using namespace msl;

TEST_CASE("single segment explodes into points") {
    CHECK(az_involution(Multisegment::parse("[0,2]")).str() == "[2,2]+[1,1]+[0,0]");
    CHECK(az_involution(Multisegment::parse("[3,3]")).str() == "[3,3]");
}

TEST_CASE("points collapse back into a segment") {
    CHECK(az_involution(Multisegment::parse("[2,2]+[1,1]+[0,0]")).str() == "[0,2]");
}

TEST_CASE("speh values") {
    // two-step chain fixed by the involution
    CHECK(az_involution(Multisegment::parse("[2,3]+[1,2]")).str() == "[2,3]+[1,2]");
    // general closed form: [b_k,b_1] down to [a_k,a_1]
    Multisegment sp = Multisegment::parse("[2,5]+[1,4]+[0,3]");  // a=(2,1,0), b=(5,4,3)
    CHECK(az_involution(sp).str() == "[3,5]+[2,4]+[1,3]+[0,2]");
}

TEST_CASE("the golden quadruple is a fixed point") {
    Multisegment lec = Multisegment::parse("[4,5]+[2,4]+[3,3]+[1,2]");
    CHECK(az_involution(lec) == lec);
}

TEST_CASE("mixed example stays involutive") {
    Multisegment m = Multisegment::parse("[1,2]+[2,2]");
    Multisegment star = az_involution(m);
    CHECK(star.str() == "[2,2]+[2,2]+[1,1]");
    CHECK(az_involution(star) == m);
}

TEST_CASE("empty input") {
    CHECK(az_involution(Multisegment()).empty());
    CHECK(az_is_involution_check(Multisegment()));
}

TEST_CASE("involutivity and support preservation on random inputs") {
    SplitMix64 rng(2024);
    GenConfig gen;
    gen.max_segments = 6;
    gen.coord_min = -3;
    gen.coord_max = 6;
    for (int t = 0; t < 500; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        CAPTURE(m.str());
        CHECK(az_is_involution_check(m));
        CHECK(grdim(az_involution(m)) == grdim(m));
    }
}

TEST_CASE("speh law on random speh multisegments") {
    SplitMix64 rng(77);
    for (int t = 0; t < 200; ++t) {
        Multisegment sp = random_speh(rng, 5, 0, 8);
        const auto& segs = sp.segments();
        std::vector<Segment> expect;
        for (int j = 0; segs.back().b - j >= segs.back().a; ++j)
            expect.emplace_back(segs.back().b - j, segs.front().b - j);
        CAPTURE(sp.str());
        CHECK(az_involution(sp) == Multisegment(std::move(expect)));
        CHECK(is_speh(az_involution(sp)));
    }
}
