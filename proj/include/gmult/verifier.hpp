#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmult/json_io.hpp"
#include "gmult/report.hpp"

namespace gmult {

/// A seeded verification run: dimensions, trial count, tolerance and the
/// set of suites to execute. Suites are named after the library operations
/// they exercise.
struct Scenario {
    std::uint64_t seed = 42;
    Eigen::Index d = 6;
    Eigen::Index d0 = 2;
    Eigen::Index n = 3;
    int trials = 25;
    double tolerance = kDefaultTol;
    std::vector<std::string> suites;
    nlohmann::json generator_overrides = nlohmann::json::object();
    std::optional<TailLaw> lambda_law;
};

struct SuiteInfo {
    std::string name;
    std::string claim; // headline claim tag carried by its records
    bool needs_onb;    // requires d == n * d0
    std::function<void(const Scenario&, std::vector<CheckRecord>&)> run;
};

/// All registered suites, in canonical order.
const std::vector<SuiteInfo>& suite_registry();

const SuiteInfo* find_suite(const std::string& name);

/// Names of every registered suite.
std::vector<std::string> all_suite_names();

/// Fails (ValidationError) when some catalogued claim has no registered
/// suite; executed at the start of every run.
void check_registry_complete();

/// Strict parse: unknown keys are rejected, invariants enforced.
Scenario parse_scenario(const nlohmann::json& j);
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);
nlohmann::json scenario_to_json(const Scenario& s);

/// Seed-42 run of every suite at d = 6, d0 = 2, n = 3.
Scenario default_scenario();

/// Executes the scenario; exceptions inside a suite become failed records.
/// Records are canonically ordered, so concurrent execution of trials
/// could never change the output.
VerificationReport run_scenario(const Scenario& s);

enum class ReportFormat { json, markdown };

std::string emit_report(const VerificationReport& r, ReportFormat format);

/// Parses "json" / "markdown".
ReportFormat report_format_from_string(const std::string& s);

/// Built-in demonstration scenarios (fixed seed 0xC0FFEE):
/// canonical — coordinate-context reductions; sweep — weight-growth
/// boundedness; ghs — admissible-subspace exploration across contexts.
VerificationReport demo(const std::string& name);

/// Law grammar for the sweep tool: "power:<s>" or "geometric:<r>".
TailLaw parse_law(const std::string& text);

} // namespace gmult
