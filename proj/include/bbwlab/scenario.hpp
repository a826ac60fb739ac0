#pragma once

#include <string>

#include <json.hpp>

namespace bbwlab {

// Outcome of one verification scenario: PASS, FAIL and INCONCLUSIVE are
// distinct states (INCONCLUSIVE means an engine returned no verdict, never a
// silent pass).
struct ScenarioResult {
    std::string id;
    std::string verdict;  // "PASS" | "FAIL" | "INCONCLUSIVE"
    nlohmann::json payload;
    double seconds = 0.0;

    bool pass() const { return verdict == "PASS"; }
    int exit_code() const { return pass() ? 0 : 2; }
};

// Runs a declarative scenario file (kinds: lefschetz-basis, s2-mutation,
// gram, rank-consistency, replay).  `data_dir` resolves relative script
// references inside scenarios.
ScenarioResult run_scenario_file(const std::string& path, const std::string& data_dir);

// Resolves a canned scenario name to <data_dir>/scenarios/<name>.json.
ScenarioResult run_scenario(const std::string& name_or_path, const std::string& data_dir);

}  // namespace bbwlab
