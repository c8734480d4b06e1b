// msl: pole orders of intertwining operators from multisegment data.
//
// Subcommands:
//   compute   one pair, JSON report
//   az        the multisegment involution
//   check     seeded property batteries per module
//   sweep     randomized pairs as CSV, with cross-checks per row
//
// Exit codes: 0 ok, 2 multisegment parse failure, 3 backend hypothesis
// not met for a forced method, 4 cross-check disagreement.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msl/az.hpp"
#include "msl/batteries.hpp"
#include "msl/classify.hpp"
#include "msl/matching.hpp"
#include "msl/mseg_gen.hpp"
#include "msl/poles.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDisagreement = 4;

std::uint64_t seed_fallback() {
    if (const char* env = std::getenv("MSL_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparseable MSL_SEED\n";
        }
    }
    return 0;
}

msl::Multisegment parse_or_exit(const std::string& text, const char* flag) {
    try {
        return msl::Multisegment::parse(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << flag << ": " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

struct SweepOptions {
    int count = 100;
    int max_segments = 4;
    int coord_min = 0;
    int coord_max = 6;
    std::vector<std::string> filters;
};

std::string sweep_row(const msl::Multisegment& m, const msl::Multisegment& n,
                      const msl::SampleConfig& cfg) {
    using namespace msl;
    PoleReport r = compute_report(m, n, cfg, /*check=*/true);

    auto balanced_col = [](const Multisegment& s) -> std::string {
        if (!is_regular(s)) return "na";
        return is_balanced(s).balanced ? "1" : "0";
    };
    int passed = 0, total = 0;
    for (const CrossCheck& c : r.crosschecks) {
        if (c.name == "theorem_backed") continue;
        ++total;
        if (c.passed) ++passed;
    }

    // lambda_Z of the reversed pair is the lambda_L of this one.
    std::ostringstream row;
    row << csv_quote(m.str()) << ',' << csv_quote(n.str()) << ',' << is_ladder(m) << ','
        << is_ladder(n) << ',' << is_speh(m) << ',' << is_speh(n) << ',' << is_regular(m) << ','
        << is_regular(n) << ',' << balanced_col(m) << ',' << balanced_col(n) << ',' << r.lambda_Z
        << ',' << r.lambda_L << ',' << r.lambda_nr << ',' << r.alpha << ',' << r.alpha_plus
        << ',' << r.frak_d << ',' << to_string(r.method) << ',' << passed << '/' << total;
    return row.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pole orders of intertwining operators over multisegments"};
    app.require_subcommand(1);

    msl::SampleConfig cfg;
    cfg.seed = seed_fallback();

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate one ordered pair, print JSON");
    std::string compute_m, compute_n, method_name = "auto";
    bool check_mode = false;
    compute->add_option("--m", compute_m, "left multisegment, e.g. \"[0,1]+[1,2]\"")->required();
    compute->add_option("--n", compute_n, "right multisegment")->required();
    compute->add_option("--method", method_name, "auto|speh|matching|oracle")
        ->check(CLI::IsMember({"auto", "speh", "matching", "oracle"}));
    compute->add_flag("--check", check_mode, "run every applicable backend and compare");
    compute->add_option("--prime", cfg.prime, "field modulus");
    compute->add_option("--samples", cfg.samples, "oracle draws per minimum");
    compute->add_option("--seed", cfg.seed, "master seed (fallback: MSL_SEED)");

    // az
    auto* az_cmd = app.add_subcommand("az", "print the involution of a multisegment");
    std::string az_m;
    az_cmd->add_option("--m", az_m, "multisegment");

    // check
    auto* check_cmd = app.add_subcommand("check", "run seeded property batteries");
    std::string suite = "all";
    msl::BatteryConfig bat;
    check_cmd->add_option("--suite", suite, "core|az|qrep|oracle|matching|poles|leclerc|all")
        ->check(CLI::IsMember({"core", "az", "qrep", "oracle", "matching", "poles", "leclerc", "all"}));
    check_cmd->add_option("--count", bat.count, "battery size");
    check_cmd->add_option("--max-segments", bat.max_segments, "segments per random multisegment");
    check_cmd->add_option("--coord-min", bat.coord_min, "coordinate range low end");
    check_cmd->add_option("--coord-max", bat.coord_max, "coordinate range high end");
    check_cmd->add_option("--prime", cfg.prime, "field modulus");
    check_cmd->add_option("--samples", cfg.samples, "oracle draws per minimum");
    check_cmd->add_option("--seed", cfg.seed, "master seed (fallback: MSL_SEED)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "random pairs as CSV with cross-checks");
    SweepOptions sw;
    sweep_cmd->add_option("--count", sw.count, "number of pairs")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--max-segments", sw.max_segments, "segments per multisegment");
    sweep_cmd->add_option("--coord-min", sw.coord_min, "coordinate range low end");
    sweep_cmd->add_option("--coord-max", sw.coord_max, "coordinate range high end");
    sweep_cmd->add_option("--filter", sw.filters, "ladder|speh|regular|balanced (repeatable)")
        ->check(CLI::IsMember({"ladder", "speh", "regular", "balanced"}));
    sweep_cmd->add_option("--prime", cfg.prime, "field modulus");
    sweep_cmd->add_option("--samples", cfg.samples, "oracle draws per minimum");
    sweep_cmd->add_option("--seed", cfg.seed, "master seed (fallback: MSL_SEED)");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }

    if (*compute) {
        msl::Multisegment m = parse_or_exit(compute_m, "--m");
        msl::Multisegment n = parse_or_exit(compute_n, "--n");
        std::optional<msl::Method> forced;
        if (method_name == "speh") forced = msl::Method::speh;
        else if (method_name == "matching") forced = msl::Method::matching;
        else if (method_name == "oracle") forced = msl::Method::oracle;
        try {
            msl::PoleReport r = msl::compute_report(m, n, cfg, check_mode, forced);
            std::cout << msl::report_to_json(r) << "\n";
            if (!r.disagreements().empty()) {
                std::cerr << "error: backend disagreement:";
                for (const std::string& d : r.disagreements()) std::cerr << " " << d;
                std::cerr << "\n";
                return kExitDisagreement;
            }
        } catch (const msl::MethodPreconditionError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitPrecondition;
        }
        return 0;
    }

    if (*az_cmd) {
        msl::Multisegment m = parse_or_exit(az_m, "--m");
        std::cout << msl::az_involution(m).str() << "\n";
        return 0;
    }

    if (*check_cmd) {
        std::vector<msl::SuiteResult> results = msl::run_suites(suite, cfg, bat);
        bool all_ok = true;
        nlohmann::ordered_json summary = nlohmann::ordered_json::array();
        for (const msl::SuiteResult& r : results) {
            all_ok = all_ok && r.ok();
            std::cout << "suite " << r.suite << ": " << r.checks << " checks, " << r.failures
                      << " failures\n";
            for (const std::string& note : r.notes) std::cout << "  FAIL " << note << "\n";
            summary.push_back({{"suite", r.suite}, {"checks", r.checks}, {"failures", r.failures}});
        }
        std::cout << summary.dump() << "\n";
        return all_ok ? 0 : 1;
    }

    if (*sweep_cmd) {
        msl::GenConfig gen;
        gen.max_segments = sw.max_segments;
        gen.coord_min = sw.coord_min;
        gen.coord_max = sw.coord_max;
        msl::GenFilters filters;
        for (const std::string& f : sw.filters) {
            if (f == "ladder") filters.ladder = true;
            else if (f == "speh") filters.speh = true;
            else if (f == "regular") filters.regular = true;
            else if (f == "balanced") filters.balanced = true;
        }

        // Pairs are generated sequentially so the stream is stable; rows can
        // be evaluated in parallel and are emitted in generation order.
        std::vector<std::pair<msl::Multisegment, msl::Multisegment>> pairs;
        msl::SplitMix64 rng(msl::mix_seed(cfg.seed, 0x53eeb));
        pairs.reserve(sw.count);
        for (int i = 0; i < sw.count; ++i) {
            msl::Multisegment m = msl::random_filtered(rng, gen, filters);
            msl::Multisegment n = msl::random_filtered(rng, gen, filters);
            pairs.emplace_back(std::move(m), std::move(n));
        }

        std::vector<std::string> rows(pairs.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < pairs.size(); ++i)
            rows[i] = sweep_row(pairs[i].first, pairs[i].second, cfg);

        std::cout << "m,n,is_ladder_m,is_ladder_n,is_speh_m,is_speh_n,is_regular_m,is_regular_n,"
                     "balanced_m,balanced_n,lambda_Z_mn,lambda_Z_nm,lambda_nr,alpha,alpha_plus,"
                     "frak_d,method,checks_passed\n";
        for (const std::string& row : rows) std::cout << row << "\n";
        return 0;
    }

    return 0;
}
