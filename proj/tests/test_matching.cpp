#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "msl/matching.hpp"
#include "msl/mseg_gen.hpp"
#include "msl/pi_module.hpp"

using namespace msl;

namespace {
Multisegment ms(const char* s) { return Multisegment::parse(s); }

bool has_pair(const std::vector<IndexPair>& v, int i, int j) {
    return std::find(v.begin(), v.end(), IndexPair{i, j}) != v.end();
}
}  // namespace

TEST_CASE("instance sets for the two-step chain against itself") {
    // delta and gamma both ([2,3],[1,2]); pairs are 1-based in the checks
    MatchingInstance inst = build_instance(ms("[2,3]+[1,2]"), ms("[2,3]+[1,2]"));
    REQUIRE(inst.delta.size() == 2);
    CHECK(inst.delta[0] == Segment(2, 3));

    CHECK(inst.x_set.size() == 1);
    CHECK(has_pair(inst.x_set, 1, 0));  // (2,1)

    CHECK(inst.y_set.size() == 3);
    CHECK(has_pair(inst.y_set, 0, 0));  // (1,1)
    CHECK(has_pair(inst.y_set, 1, 0));  // (2,1)
    CHECK(has_pair(inst.y_set, 1, 1));  // (2,2)

    BestMatching bm = best_matching(inst);
    CHECK(bm.size == 1);

    std::string diag = to_diagnostic_string(inst, bm);
    CHECK(diag.find("X: (2,1)") != std::string::npos);
    CHECK(diag.find("|I| = 1") != std::string::npos);
}

TEST_CASE("single segment instance") {
    MatchingInstance inst = build_instance(ms("[0,1]"), ms("[0,1]"));
    CHECK(inst.x_set.empty());
    REQUIRE(inst.y_set.size() == 1);
    CHECK(has_pair(inst.y_set, 0, 0));
    CHECK(best_matching(inst).size == 0);
}

TEST_CASE("empty sides") {
    MatchingInstance inst = build_instance(ms("[0,1]+[2,5]"), Multisegment());
    CHECK(inst.x_set.empty());
    CHECK(inst.y_set.empty());
    CHECK(best_matching(inst).size == 0);
}

TEST_CASE("matching values on worked pairs") {
    CHECK(hom_via_matching(ms("[0,1]"), ms("[0,1]")) == 1);
    CHECK(hom_via_matching(ms("[2,3]+[1,2]"), ms("[2,3]+[1,2]")) == 2);
    CHECK(coker_via_matching(ms("[2,3]+[1,2]"), ms("[2,3]+[1,2]")) == 0);
    CHECK(hom_via_matching(ms("[1,1]"), ms("[0,0]")) == 0);
    CHECK(coker_via_matching(ms("[1,1]"), ms("[0,0]")) == 1);
}

TEST_CASE("ladder hypothesis is enforced") {
    Multisegment not_ladder = ms("[4,5]+[2,4]+[3,3]+[1,2]");
    CHECK_THROWS_AS(hom_via_matching(not_ladder, not_ladder), std::invalid_argument);
    CHECK_NOTHROW(hom_via_matching(not_ladder, ms("[0,1]")));
}

TEST_CASE("swapped binding breaks the coker anchor") {
    MatchingInstance swapped = build_instance(ms("[1,1]"), ms("[0,0]"));
    BestMatching bm = best_matching(swapped);
    std::int64_t coker_swapped = static_cast<std::int64_t>(swapped.x_set.size()) - bm.size;
    CHECK(coker_swapped != 1);
}

TEST_CASE("agreement with the sampling oracle on ladder pairs") {
    SplitMix64 rng(4242);
    SampleConfig cfg;
    cfg.samples = 6;
    cfg.seed = 11;
    GenConfig gen;
    gen.max_segments = 4;
    gen.coord_min = 0;
    gen.coord_max = 7;
    for (int t = 0; t < 40; ++t) {
        Multisegment lad = random_ladder(rng, 4, 0, 7);
        Multisegment other = random_multisegment(rng, gen);
        bool flip = rng.below(2) == 1;
        const Multisegment& m = flip ? other : lad;
        const Multisegment& n = flip ? lad : other;
        CAPTURE(m.str() + " | " + n.str());
        CHECK(hom_via_matching(m, n) == generic_hom(m, n, cfg));
        CHECK(coker_via_matching(m, n) == coker_coxeter(m, n, cfg));
    }
}

TEST_CASE("self hom is at least one on nonzero ladders") {
    SplitMix64 rng(808);
    for (int t = 0; t < 30; ++t) {
        Multisegment lad = random_ladder(rng, 5, 0, 8);
        CHECK(hom_via_matching(lad, lad) >= 1);
    }
}

TEST_CASE("matching size is invariant under duplicate relabeling") {
    // duplicates in the gamma listing; permuting equal rows cannot matter
    Multisegment lad = ms("[3,4]+[1,2]");
    Multisegment dup = ms("[2,3]+[2,3]");
    std::int64_t h = hom_via_matching(lad, dup);
    CHECK(h == hom_via_matching(lad, dup));
    SampleConfig cfg;
    cfg.samples = 6;
    cfg.seed = 3;
    CHECK(h == generic_hom(lad, dup, cfg));
}
