#pragma once

#include <string>
#include <vector>

#include "msl/mseg_gen.hpp"
#include "msl/pi_module.hpp"

namespace msl {

struct BatteryConfig {
    int count = 120;
    int max_segments = 4;
    int coord_min = 0;
    int coord_max = 6;
};

struct SuiteResult {
    std::string suite;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;

    bool ok() const { return failures == 0; }
};

/// Suites: core, az, qrep, oracle, matching, poles, leclerc.
/// "all" in run_suites expands to every one of them.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SampleConfig& cfg, const BatteryConfig& bc);
std::vector<SuiteResult> run_suites(const std::string& name_or_all, const SampleConfig& cfg,
                                    const BatteryConfig& bc);

}  // namespace msl
