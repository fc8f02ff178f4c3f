#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gmult/verifier.hpp"

namespace {

using namespace gmult;

void apply_tolerance(Scenario& s, const CLI::Option* flag, double flagValue) {
    // precedence: CLI flag > GMULT_TOLERANCE > scenario field > default
    if (flag->count() > 0) {
        s.tolerance = flagValue;
        return;
    }
    if (const char* env = std::getenv("GMULT_TOLERANCE")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) s.tolerance = v;
        } catch (const std::exception&) {
            throw ValidationError("GMULT_TOLERANCE is not a number");
        }
    }
}

int write_report(const VerificationReport& report, const std::string& outPath,
                 const std::string& format) {
    const std::string text = emit_report(report, report_format_from_string(format));
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot write '" << outPath << "'\n";
            return 2;
        }
        out << text;
    }
    const ReportSummary s = report.summary();
    std::cerr << "checks: " << s.total << " passed: " << s.passed
              << " failed: " << s.failed << " skipped: " << s.skipped << "\n";
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification lab for operator-valued Bessel multipliers and "
                 "generalized Hilbert-Schmidt / trace classes"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a scenario file");
    std::string scenarioPath;
    bool useDefault = false;
    std::uint64_t seed = 0;
    std::string outPath, format = "json";
    double tolerance = kDefaultTol;
    run->add_option("scenario", scenarioPath, "Scenario JSON file");
    run->add_flag("--default", useDefault, "Run the built-in default scenario");
    auto* seedOpt = run->add_option("--seed", seed, "Override the scenario seed");
    run->add_option("--out", outPath, "Write the report here instead of stdout");
    run->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    auto* tolOpt = run->add_option("--tolerance", tolerance,
                                   "Override the scenario tolerance");

    // demo
    auto* demoCmd = app.add_subcommand("demo", "Run a built-in demo scenario");
    std::string demoName;
    std::string demoOut, demoFormat = "markdown";
    demoCmd->add_option("name", demoName, "canonical, sweep or ghs")->required();
    demoCmd->add_option("--out", demoOut, "Write the report here");
    demoCmd->add_option("--format", demoFormat, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    // sweep
    auto* sweepCmd =
        app.add_subcommand("sweep", "Norm growth of the truncated multiplier");
    std::string lawText = "power:1";
    std::string sizesText = "2,4,8,16";
    Eigen::Index d0 = 1;
    std::string dataKind = "std";
    std::uint64_t sweepSeed = 0;
    sweepCmd->add_option("--law", lawText, "power:<s> or geometric:<r>");
    sweepCmd->add_option("--sizes", sizesText, "comma-separated term counts");
    sweepCmd->add_option("--d0", d0, "dimension of H0");
    sweepCmd->add_option("--data", dataKind, "std or haar basis data")
        ->check(CLI::IsMember({"std", "haar"}));
    sweepCmd->add_option("--seed", sweepSeed, "seed for haar data");

    // validate
    auto* validateCmd =
        app.add_subcommand("validate", "Parse and validate a scenario file");
    std::string validatePath;
    validateCmd->add_option("scenario", validatePath, "Scenario JSON file")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            Scenario s;
            if (useDefault) {
                s = gmult::default_scenario();
            } else if (!scenarioPath.empty()) {
                s = gmult::parse_scenario_file(scenarioPath);
            } else {
                std::cerr << "run: give a scenario file or --default\n";
                return 2;
            }
            if (s.suites.empty()) s.suites = gmult::all_suite_names();
            if (seedOpt->count() > 0) s.seed = seed;
            apply_tolerance(s, tolOpt, tolerance);
            return write_report(gmult::run_scenario(s), outPath, format);
        }
        if (*demoCmd) {
            return write_report(gmult::demo(demoName), demoOut, demoFormat);
        }
        if (*sweepCmd) {
            const TailLaw law = gmult::parse_law(lawText);
            std::vector<Eigen::Index> sizes;
            std::stringstream ss(sizesText);
            std::string item;
            while (std::getline(ss, item, ','))
                sizes.push_back(static_cast<Eigen::Index>(std::stoll(item)));
            const auto data = dataKind == "std" ? gmult::SweepData::std_slices
                                                : gmult::SweepData::haar;
            std::cout << "| N | operator norm |\n|---|---|\n";
            for (const auto& [n, norm] :
                 gmult::unbounded_sweep(law, d0, sizes, sweepSeed, data))
                std::cout << "| " << n << " | " << norm << " |\n";
            return 0;
        }
        if (*validateCmd) {
            gmult::parse_scenario_file(validatePath);
            std::cout << "ok\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
