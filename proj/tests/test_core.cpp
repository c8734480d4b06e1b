#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msl/classify.hpp"
#include "msl/dim_vector.hpp"
#include "msl/mseg_gen.hpp"
#include "msl/multisegment.hpp"

using namespace msl;

namespace {
const char* kLec = "[4,5]+[2,4]+[3,3]+[1,2]";
}

TEST_CASE("segment construction and length") {
    Segment s(2, 4);
    CHECK(s.length() == 3);
    CHECK(Segment(1, 1).length() == 1);
    CHECK_THROWS_AS(Segment(3, 1), std::invalid_argument);
}

TEST_CASE("parse accepts the grammar and canonicalizes") {
    Multisegment lec = Multisegment::parse(kLec);
    CHECK(lec.size() == 4);
    CHECK(lec.str() == "[4,5]+[2,4]+[3,3]+[1,2]");

    // order-free input, same value
    CHECK(Multisegment::parse("[1,2] + [3,3]+ [2,4] +[4,5]") == lec);
    CHECK(Multisegment::parse("").empty());
    CHECK(Multisegment::parse(" \t ").empty());
    CHECK(Multisegment::parse("[-3,-1]").str() == "[-3,-1]");

    CHECK_THROWS_AS(Multisegment::parse("[3,1]"), ParseError);
    CHECK_THROWS_AS(Multisegment::parse("[1,2]+"), ParseError);
    CHECK_THROWS_AS(Multisegment::parse("1,2"), ParseError);
    CHECK_THROWS_AS(Multisegment::parse("[1,2] junk"), ParseError);
}

TEST_CASE("parse of serialize is the identity on random values") {
    SplitMix64 rng(11);
    GenConfig gen;
    gen.max_segments = 6;
    gen.coord_min = -4;
    gen.coord_max = 7;
    for (int t = 0; t < 300; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        CHECK(Multisegment::parse(m.str()) == m);
    }
}

TEST_CASE("precedes and unlinked") {
    CHECK(precedes(Segment(1, 3), Segment(2, 5)));
    CHECK_FALSE(precedes(Segment(0, 1), Segment(0, 1)));
    CHECK(precedes(Segment(0, 0), Segment(1, 1)));

    CHECK(unlinked(Segment(0, 3), Segment(1, 2)));  // nested
    CHECK_FALSE(unlinked(Segment(1, 3), Segment(2, 5)));
    CHECK(unlinked(Segment(0, 0), Segment(2, 2)));  // gap blocks both
}

TEST_CASE("shift and dual") {
    CHECK(shift(Segment(2, 4)) == Segment(1, 3));
    CHECK(dual(Segment(1, 2)) == Segment(-2, -1));
    CHECK(dual(dual(Segment(3, 7))) == Segment(3, 7));

    Multisegment m = Multisegment::parse("[0,1]+[2,3]");
    CHECK(shift(m).str() == "[1,2]+[-1,0]");
    CHECK(dual(dual(m)) == m);
}

TEST_CASE("grdim") {
    DimVector d = grdim(Multisegment::parse(kLec));
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == 2);
    CHECK(d.at(3) == 2);
    CHECK(d.at(4) == 2);
    CHECK(d.at(5) == 1);
    CHECK(d.at(0) == 0);
    CHECK(d.total() == 8);

    CHECK(grdim(Multisegment::parse("[0,0]")).at(0) == 1);
    CHECK(grdim(Multisegment()).is_zero());
}

TEST_CASE("euler forms") {
    DimVector e0 = grdim(Multisegment::parse("[0,0]"));
    DimVector e1 = grdim(Multisegment::parse("[1,1]"));
    CHECK(sym_form(e0, e0) == 2);
    CHECK(sym_form(e0, e1) == -1);

    DimVector lec = grdim(Multisegment::parse(kLec));
    CHECK(euler_plus(lec, lec) == 2);
    CHECK(sym_form(lec, lec) == 4);
}

TEST_CASE("arranged form") {
    Multisegment m = Multisegment::parse("[1,2]+[2,3]");
    auto arr = arranged_form(m);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0] == Segment(2, 3));
    CHECK(arr[1] == Segment(1, 2));

    auto lad = arranged_form(Multisegment::parse("[2,5]+[1,4]"));
    CHECK(lad[0] == Segment(2, 5));
    CHECK(lad[1] == Segment(1, 4));

    CHECK(arranged_form(Multisegment()).empty());
}

TEST_CASE("classification predicates") {
    CHECK(is_ladder(Multisegment::parse("[2,5]+[1,4]")));
    CHECK(is_speh(Multisegment::parse("[2,3]+[1,2]")));
    CHECK_FALSE(is_speh(Multisegment::parse("[2,5]+[0,1]")));
    CHECK(is_regular(Multisegment::parse(kLec)));
    CHECK_FALSE(is_regular(Multisegment::parse("[0,1]+[0,2]")));
    CHECK_FALSE(is_ladder(Multisegment::parse(kLec)));

    // speh implies ladder
    CHECK(is_ladder(Multisegment::parse("[2,3]+[1,2]")));
    CHECK(is_ladder(Multisegment()));
    CHECK(is_speh(Multisegment()));
}

TEST_CASE("balanced detection with witness") {
    auto res = is_balanced(Multisegment::parse(kLec));
    CHECK_FALSE(res.balanced);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->kind == PatternWitness::Kind::type4231);
    CHECK(witness_valid(*res.witness));
    REQUIRE(res.witness->ordered.size() == 4);
    CHECK(res.witness->ordered[0] == Segment(2, 4));
    CHECK(res.witness->ordered[1] == Segment(4, 5));
    CHECK(res.witness->ordered[2] == Segment(3, 3));
    CHECK(res.witness->ordered[3] == Segment(1, 2));

    CHECK(is_balanced(Multisegment::parse("[0,1]")).balanced);
    CHECK(is_balanced(Multisegment::parse("[2,5]+[1,4]")).balanced);
    CHECK_THROWS_AS(is_balanced(Multisegment::parse("[0,1]+[0,2]")), std::invalid_argument);

    SplitMix64 rng(17);
    for (int t = 0; t < 50; ++t) {
        Multisegment lad = random_ladder(rng, 6, 0, 8);
        CHECK(is_balanced(lad).balanced);
    }
}

TEST_CASE("minimal 3412 family") {
    // two crossing segments straddling the linked pair [1,2] < [3,4]
    auto res = is_balanced(Multisegment::parse("[2,5]+[3,4]+[0,3]+[1,2]"));
    CHECK_FALSE(res.balanced);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->kind == PatternWitness::Kind::type3412);
    CHECK(witness_valid(*res.witness));
    REQUIRE(res.witness->ordered.size() == 4);
    CHECK(res.witness->ordered[0] == Segment(2, 5));
    CHECK(res.witness->ordered[1] == Segment(0, 3));
    CHECK(res.witness->ordered[2] == Segment(3, 4));
    CHECK(res.witness->ordered[3] == Segment(1, 2));
}

TEST_CASE("every reported witness re-validates") {
    SplitMix64 rng(31);
    int reported = 0;
    for (int t = 0; t < 3000; ++t) {
        GenConfig gen;
        gen.max_segments = 6;
        gen.coord_min = 0;
        gen.coord_max = 8;
        Multisegment m = random_multisegment(rng, gen);
        if (!is_regular(m)) continue;
        auto res = is_balanced(m);
        if (!res.balanced) {
            ++reported;
            REQUIRE(res.witness.has_value());
            CAPTURE(m.str());
            CHECK(witness_valid(*res.witness));
        }
    }
    CHECK(reported > 0);
}

TEST_CASE("multiset semantics allows duplicates") {
    Multisegment m = Multisegment::parse("[1,2]+[1,2]");
    CHECK(m.size() == 2);
    CHECK(m.str() == "[1,2]+[1,2]");
    CHECK_FALSE(is_regular(m));
}
