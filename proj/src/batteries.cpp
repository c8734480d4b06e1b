#include "msl/batteries.hpp"

#include <functional>
#include <stdexcept>

#include "msl/az.hpp"
#include "msl/classify.hpp"
#include "msl/matching.hpp"
#include "msl/poles.hpp"
#include "msl/quiver.hpp"

namespace msl {

namespace {

struct Battery {
    SuiteResult result;

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (result.notes.size() < 25) result.notes.push_back(what);
        }
    }
};

// Greedy shrink: drop segments one at a time while the failure persists.
Multisegment shrink_failing(Multisegment m, const std::function<bool(const Multisegment&)>& fails) {
    bool progress = true;
    while (progress) {
        progress = false;
        const auto& segs = m.segments();
        for (std::size_t i = 0; i < segs.size(); ++i) {
            std::vector<Segment> rest;
            for (std::size_t j = 0; j < segs.size(); ++j)
                if (j != i) rest.push_back(segs[j]);
            Multisegment cand(std::move(rest));
            if (fails(cand)) {
                m = cand;
                progress = true;
                break;
            }
        }
    }
    return m;
}

SplitMix64 suite_rng(const SampleConfig& cfg, std::uint64_t salt) {
    return SplitMix64(mix_seed(cfg.seed, salt));
}

GenConfig gen_of(const BatteryConfig& bc) {
    GenConfig g;
    g.max_segments = bc.max_segments;
    g.coord_min = bc.coord_min;
    g.coord_max = bc.coord_max;
    return g;
}

void suite_core(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto rng = suite_rng(cfg, 0xc03eULL);
    const GenConfig gen = gen_of(bc);

    for (int t = 0; t < bc.count; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        b.check(Multisegment::parse(m.str()) == m, "parse/serialize round trip: " + m.str());

        auto arr = arranged_form(m);
        bool arranged_ok = true;
        for (std::size_t i = 0; i < arr.size() && arranged_ok; ++i)
            for (std::size_t j = i + 1; j < arr.size(); ++j)
                if (precedes(arr[i], arr[j])) { arranged_ok = false; break; }
        b.check(arranged_ok, "arranged form violates precedence: " + m.str());

        Multisegment n = random_multisegment(rng, gen);
        DimVector sum = grdim(m);
        sum += grdim(n);
        b.check(sum == grdim(m + n), "grdim additivity: " + m.str() + " / " + n.str());
        b.check(grdim(dual(m)) == grdim(m).reflected(), "grdim dual reflection: " + m.str());

        DimVector d = grdim(m), e = grdim(n);
        b.check(sym_form(d, e) == sym_form(e, d), "sym_form symmetry");
        b.check(sym_form(d, d) > 0, "sym_form positivity: " + m.str());
    }
    DimVector zero;
    b.check(sym_form(zero, zero) == 0, "sym_form of zero vector");

    for (const char* bad : {"[3,1]", "[1,2", "[a,b]", "[1,2]+", "+[1,2]", "[1,2][3,4]"}) {
        bool threw = false;
        try {
            Multisegment::parse(bad);
        } catch (const ParseError&) {
            threw = true;
        }
        b.check(threw, std::string("parse should reject: ") + bad);
    }
    b.check(Multisegment::parse("  ").empty(), "blank input parses to empty");

    for (int t = 0; t < bc.count; ++t) {
        Segment s1 = random_segment(rng, gen.coord_min, gen.coord_max);
        Segment s2 = random_segment(rng, gen.coord_min, gen.coord_max);
        if (precedes(s1, s2)) b.check(s2.b > s1.b, "precedes must raise the right endpoint");
        b.check(unlinked(s1, s2) == (!precedes(s1, s2) && !precedes(s2, s1)), "unlinked definition");
    }

    for (int t = 0; t < bc.count / 4 + 1; ++t) {
        Multisegment lad = random_ladder(rng, bc.max_segments, gen.coord_min, gen.coord_max);
        b.check(is_balanced(lad).balanced, "ladder must be balanced: " + lad.str());
    }
    for (int t = 0; t < bc.count / 4 + 1; ++t) {
        GenFilters f;
        f.regular = true;
        Multisegment reg = random_filtered(rng, gen, f);
        auto res = is_balanced(reg);
        if (!res.balanced) {
            b.check(res.witness.has_value() && witness_valid(*res.witness),
                    "pattern witness must re-validate: " + reg.str());
        }
    }
}

void suite_az(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto rng = suite_rng(cfg, 0xa2ULL);
    const GenConfig gen = gen_of(bc);

    auto not_involutive = [](const Multisegment& m) { return !az_is_involution_check(m); };
    for (int t = 0; t < bc.count; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        if (!az_is_involution_check(m)) {
            Multisegment minimal = shrink_failing(m, not_involutive);
            b.check(false, "az not involutive, minimal failing input: " + minimal.str());
        } else {
            b.check(true, "");
        }
        b.check(grdim(az_involution(m)) == grdim(m), "az must preserve grdim: " + m.str());
    }

    for (int t = 0; t < bc.count / 2 + 1; ++t) {
        Multisegment sp = random_speh(rng, bc.max_segments, gen.coord_min, gen.coord_max);
        const auto& segs = sp.segments();
        const Segment top = segs.front(), bot = segs.back();
        std::vector<Segment> expect;
        for (int j = 0; bot.b - j >= bot.a; ++j) expect.emplace_back(bot.b - j, top.b - j);
        b.check(az_involution(sp) == Multisegment(std::move(expect)),
                "Speh closed form for az: " + sp.str());
    }
}

void suite_qrep(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto rng = suite_rng(cfg, 0x9e1ULL);
    const GenConfig gen = gen_of(bc);

    for (int t = 0; t < bc.count; ++t) {
        Segment d = random_segment(rng, gen.coord_min, gen.coord_max);
        Segment g = random_segment(rng, gen.coord_min, gen.coord_max);
        Multisegment md(std::vector<Segment>{d});
        Multisegment mg(std::vector<Segment>{g});
        auto [h, e] = hom_ext_qrep(mu_plus(md, cfg.prime), mu_plus(mg, cfg.prime));
        b.check(h == hom_qplus_segments(d, g),
                "hom closed form vs kernel: " + md.str() + " / " + mg.str());
        b.check(e == ext1_qplus_segments(d, g),
                "ext closed form vs cokernel: " + md.str() + " / " + mg.str());
    }

    for (int t = 0; t < bc.count / 2 + 1; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        Multisegment n = random_multisegment(rng, gen);
        DimVector dm = grdim(m), dn = grdim(n);
        b.check(hom_qplus(m, n) - ext1_qplus(m, n) == euler_plus(dm, dn),
                "Euler identity Q+: " + m.str() + " / " + n.str());
        b.check(alpha_plus(m, n) + alpha_plus(n, m) == sym_form(dm, dn),
                "alpha_plus antisymmetrized sum: " + m.str() + " / " + n.str());
        b.check(alpha(m, n) == alpha(n, m), "alpha symmetry");

        auto xy = hom_ext_qrep(mu_plus(m, cfg.prime), mu_plus(n, cfg.prime));
        auto yx = hom_ext_qrep(mu_plus(n, cfg.prime), mu_plus(m, cfg.prime));
        b.check(alpha_plus(m, n) == xy.first - yx.second,
                "alpha_plus vs explicit kernels: " + m.str() + " / " + n.str());

        auto mm = hom_ext_qrep(mu_minus(m, cfg.prime), mu_minus(n, cfg.prime));
        b.check(mm.first - mm.second == euler_plus(dn, dm),
                "Euler identity Q-: " + m.str() + " / " + n.str());
    }
}

void suite_oracle(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto rng = suite_rng(cfg, 0x0aC1eULL);
    const GenConfig gen = gen_of(bc);

    for (int t = 0; t < bc.count / 6 + 2; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        Multisegment n = random_multisegment(rng, gen);

        PiModule x = generic_point(m, cfg, static_cast<std::uint64_t>(t));
        b.check(moment_map_holds(x), "moment map residual must vanish: " + m.str());
        if (!m.empty()) b.check(hom_pi(x, x) >= 1, "identity endomorphism: " + m.str());

        PiModule y = generic_point(n, cfg, static_cast<std::uint64_t>(t) + 1000);
        PiModule cx = random_base_change(x, rng.next());
        PiModule cy = random_base_change(y, rng.next());
        b.check(moment_map_holds(cx), "base change must preserve the relation");
        b.check(hom_pi(x, y) == hom_pi(cx, cy),
                "hom_pi invariance under graded base change: " + m.str() + " / " + n.str());

        SampleConfig doubled = cfg;
        doubled.samples = cfg.samples * 2;
        std::int64_t h1 = generic_hom(m, n, cfg);
        b.check(generic_hom(m, n, doubled) <= h1, "sample minimum must be monotone");
        if (!m.empty())
            b.check(ext1_diagonal(m, doubled) <= ext1_diagonal(m, cfg),
                    "diagonal minimum must be monotone");

        b.check(h1 == generic_hom(dual(n), dual(m), cfg),
                "hom duality transport: " + m.str() + " / " + n.str());
        b.check(h1 == generic_hom(az_involution(n), az_involution(m), cfg),
                "hom az transport: " + m.str() + " / " + n.str());

        b.check(generic_ext1(m, n, cfg) == generic_ext1(n, m, cfg), "generic ext symmetry");
        if (!m.empty())
            b.check(ext1_diagonal(m, cfg) >= generic_ext1(m, m, cfg),
                    "diagonal ext dominates generic ext: " + m.str());

        PiExtDims dims = pi_ext_dims(x, y);
        b.check(dims.hom == hom_pi(x, y) && dims.ext2 == hom_pi(y, x) &&
                    dims.ext1 == hom_pi(x, y) + hom_pi(y, x) - sym_form(grdim(m), grdim(n)),
                "presentation complex vs hom ranks: " + m.str() + " / " + n.str());
    }

    // Seed stability on the golden corpus.
    const Multisegment lec = leclerc_multisegment();
    for (std::uint64_t s = 1; s <= 10; ++s) {
        SampleConfig alt = cfg;
        alt.seed = mix_seed(cfg.seed, s);
        b.check(generic_hom(lec, lec, alt) == 2, "golden hom seed stability");
        b.check(generic_ext1(lec, lec, alt) == 0, "golden ext seed stability");
    }
}

void suite_matching(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto rng = suite_rng(cfg, 0x3a7c4ULL);
    const GenConfig gen = gen_of(bc);

    for (int t = 0; t < bc.count / 3 + 2; ++t) {
        Multisegment lad = random_ladder(rng, bc.max_segments, gen.coord_min, gen.coord_max);
        Multisegment other = random_multisegment(rng, gen);
        bool flip = rng.below(2) == 1;
        const Multisegment& m = flip ? other : lad;
        const Multisegment& n = flip ? lad : other;

        b.check(hom_via_matching(m, n) == generic_hom(m, n, cfg),
                "matching vs oracle hom: " + m.str() + " / " + n.str());
        b.check(coker_via_matching(m, n) == coker_coxeter(m, n, cfg),
                "matching vs oracle coker: " + m.str() + " / " + n.str());
        if (!lad.empty())
            b.check(hom_via_matching(lad, lad) >= 1, "self hom lower bound: " + lad.str());
    }

    // Binding anchors; the swapped binding gets the coker base case wrong.
    Multisegment hi = Multisegment::parse("[1,1]");
    Multisegment lo = Multisegment::parse("[0,0]");
    b.check(hom_via_matching(hi, lo) == 0, "anchor hom [1,1]/[0,0]");
    b.check(coker_via_matching(hi, lo) == 1, "anchor coker [1,1]/[0,0]");
    MatchingInstance flipped = build_instance(hi, lo);
    BestMatching fbm = best_matching(flipped);
    b.check(static_cast<std::int64_t>(flipped.x_set.size()) - fbm.size != 1,
            "swapped binding must disagree on the coker anchor");
}

void suite_poles(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto rng = suite_rng(cfg, 0x901e5ULL);
    const GenConfig gen = gen_of(bc);

    for (int offset = -3; offset <= 3; ++offset) {
        Multisegment m(std::vector<Segment>{Segment(0, 0)});
        Multisegment n(std::vector<Segment>{Segment(offset, offset)});
        std::int64_t expect_alpha = offset == 0 ? -2 : (offset == 1 || offset == -1 ? 1 : 0);
        std::int64_t expect_lambda = offset == 0 ? 1 : 0;
        b.check(alpha(m, n) == expect_alpha, "cuspidal alpha base case");
        b.check(lambda_Z(m, n, cfg) == expect_lambda, "cuspidal lambda base case");
        b.check(lambda_L(m, n, cfg) == expect_lambda, "cuspidal lambda_L base case");
        b.check(generic_hom(n, m, cfg) == expect_lambda, "cuspidal lambda via oracle");
    }

    for (int t = 0; t < bc.count / 8 + 2; ++t) {
        Multisegment m = random_multisegment(rng, gen);
        Multisegment n = random_multisegment(rng, gen);
        PoleReport r = compute_report(m, n, cfg, /*check=*/true);
        auto bad = r.disagreements();
        b.check(bad.empty(), "check-mode report disagreement on " + m.str() + " / " + n.str() +
                                 (bad.empty() ? "" : ": " + bad.front()));
        b.check(r.frak_d >= 0, "frak_d nonnegative");
        b.check(r.frak_d == frak_d(n, m, cfg), "frak_d symmetric");

        // Blocks on coordinate ranges separated by >= 2 contribute additively.
        const int gap = gen.coord_max - gen.coord_min + 3;
        auto shift_far = [&](const Multisegment& s) {
            std::vector<Segment> out;
            for (const Segment& seg : s.segments()) out.emplace_back(seg.a + gap, seg.b + gap);
            return Multisegment(std::move(out));
        };
        Multisegment m2 = random_multisegment(rng, gen), n2 = random_multisegment(rng, gen);
        b.check(lambda_Z(m + shift_far(m2), n + shift_far(n2), cfg) ==
                    lambda_Z(m, n, cfg) + lambda_Z(m2, n2, cfg),
                "block additivity of lambda_Z");
        b.check(alpha(m + shift_far(m2), n + shift_far(n2)) == alpha(m, n) + alpha(m2, n2),
                "block additivity of alpha");

        LineMap lm{{"a", m}, {"b", m2}};
        LineMap ln{{"a", n}, {"b", n2}};
        b.check(frak_d_lines(lm, ln, cfg) == frak_d(m, n, cfg) + frak_d(m2, n2, cfg),
                "line map additivity of frak_d");
    }
}

void suite_leclerc(Battery& b, const SampleConfig& cfg, const BatteryConfig& bc) {
    auto reports = leclerc_suite(cfg, bc.count / 4 + 5);
    for (const PoleReport& r : reports)
        for (const CrossCheck& c : r.crosschecks)
            if (c.name != "theorem_backed") b.check(c.passed, "leclerc battery: " + c.name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core", "az", "qrep", "oracle",
                                                "matching", "poles", "leclerc"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SampleConfig& cfg, const BatteryConfig& bc) {
    cfg.validate();
    Battery b;
    b.result.suite = name;
    if (name == "core") suite_core(b, cfg, bc);
    else if (name == "az") suite_az(b, cfg, bc);
    else if (name == "qrep") suite_qrep(b, cfg, bc);
    else if (name == "oracle") suite_oracle(b, cfg, bc);
    else if (name == "matching") suite_matching(b, cfg, bc);
    else if (name == "poles") suite_poles(b, cfg, bc);
    else if (name == "leclerc") suite_leclerc(b, cfg, bc);
    else throw std::invalid_argument("unknown suite: " + name);
    return b.result;
}

std::vector<SuiteResult> run_suites(const std::string& name_or_all, const SampleConfig& cfg,
                                    const BatteryConfig& bc) {
    std::vector<SuiteResult> out;
    if (name_or_all == "all") {
        for (const std::string& n : suite_names()) out.push_back(run_suite(n, cfg, bc));
    } else {
        out.push_back(run_suite(name_or_all, cfg, bc));
    }
    return out;
}

}  // namespace msl
