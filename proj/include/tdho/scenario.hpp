#ifndef TDHO_SCENARIO_HPP
#define TDHO_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdho/ermakov.hpp"
#include "tdho/fockspace.hpp"

namespace tdho {

struct GridSpec {
    int points = 256;
    double extent = 0.0;  // 0 -> auto: sized so every requested state's tail
                          // stays below roundoff at the boundary
};

/// Everything a run needs, parseable from the sectioned key-value config
/// format (see the repository README for the grammar).
struct ScenarioConfig {
    std::string name = "custom";

    TimeFunction M = TimeFunction::constant(1.0);
    TimeFunction Omega = TimeFunction::constant(1.0);
    TimeFunction B = TimeFunction::constant(0.0);
    double charge = 1.0;
    double theta = 0.0;

    double kappa = 1.0;
    double t0 = 0.0;
    double t1 = 10.0;
    double tolerance = 1e-10;
    std::optional<SigmaInit> init;  // nullopt -> equilibrium values at t0
    int samples = 201;

    GridSpec grid;
    int n_max = 32;  // Fock truncation for the matrix checks

    std::vector<FockIndex> states;   // empty -> all n <= 3
    std::vector<std::string> checks; // empty -> standard set; "all" -> everything
    std::map<std::string, double> thresholds;  // per-check overrides

    std::string out_dir = "tdho-out";
    bool dump_matrices = false;
    bool dump_states = false;

    bool time_dependent() const;
    ParameterProfile profile() const;
    std::vector<FockIndex> state_list() const;  // states or the default set

    // Canonical config text: fixed section/key order, 17-digit numbers;
    // parses back to an equivalent config and feeds the provenance hash.
    std::string canonical_text() const;
    std::string config_hash() const;  // FNV-1a 64 over canonical_text()

    void validate() const;  // throws ConfigError
};

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);
ScenarioConfig parse_config_file(const std::string& path);

/// Built-in scenarios: landau-constant, landau-quench (alias b-quench),
/// oscillator-sinusoidal, nc-landau, nc-oscillator.
ScenarioConfig builtin_scenario(const std::string& name);
const std::vector<std::pair<std::string, std::string>>& builtin_scenario_list();
std::string list_scenarios_text();
/// Resolves a CLI argument: builtin name first, then config-file path.
ScenarioConfig resolve_scenario(const std::string& name_or_path);

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct RunReport {
    std::string scenario;
    std::string config_hash;
    std::string version;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, double>> stage_seconds;
    double wall_seconds = 0.0;

    bool all_pass() const;
    std::string text_summary() const;  // one line per check + meta
};

/// Known check names in report order; verify_all runs all of them.
const std::vector<std::string>& known_checks();

/// Executes the pipeline (profile -> sigma -> basis -> phases -> checks) and
/// writes sigma.csv, phases_<n>_<m>.csv, residuals.csv, report.csv and
/// meta.csv into config.out_dir.  Identical configs produce bit-identical
/// CSV files.
RunReport run_scenario(const ScenarioConfig& config);

/// run_scenario with every known check enabled.
RunReport verify_all(ScenarioConfig config);

extern const char* const kVersion;

} // namespace tdho

#endif
