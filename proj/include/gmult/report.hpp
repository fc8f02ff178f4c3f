#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gmult {

/// One verified claim instance: an inequality lhs <= rhs + tolerance or an
/// identity |lhs - rhs| <= tolerance.
struct CheckRecord {
    enum class Kind { inequality, identity };

    std::string id;              // suite/trial/check, canonical ordering key
    std::string claim;           // stable tag of the property being checked
    std::string instance_digest; // hash of the serialized instance inputs
    Kind kind = Kind::identity;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::optional<std::string> skipped_reason;
};

struct ReportSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct VerificationReport {
    nlohmann::json scenario_echo = nlohmann::json::object();
    std::vector<CheckRecord> records;
    double wall_time_seconds = 0.0;

    ReportSummary summary() const;
    bool all_passed() const;
    void append(const VerificationReport& other);
};

/// FNV-1a digest of the canonical serialization, with numeric leaves
/// rounded to 12 significant digits to absorb last-bit drift.
std::string digest_json(const nlohmann::json& j);

/// Collects check records for one suite run. Effective tolerances are
/// base_tol * (1 + scale) with the hard absolute floor.
class RecordSink {
public:
    RecordSink(std::vector<CheckRecord>& out, std::string suite, double base_tol)
        : out_(&out), suite_(std::move(suite)), base_tol_(base_tol) {}

    void set_instance(const nlohmann::json& instance) {
        digest_ = digest_json(instance);
    }
    void set_instance_digest(std::string digest) { digest_ = std::move(digest); }
    void set_trial(int trial) { trial_ = trial; }

    void identity(const std::string& name, const std::string& claim, double lhs,
                  double rhs, double scale);
    void inequality(const std::string& name, const std::string& claim, double lhs,
                    double rhs, double scale);
    void skip(const std::string& name, const std::string& claim,
              const std::string& reason);

    double base_tol() const { return base_tol_; }

private:
    CheckRecord base(const std::string& name, const std::string& claim) const;

    std::vector<CheckRecord>* out_;
    std::string suite_;
    std::string digest_;
    double base_tol_;
    int trial_ = 0;
};

} // namespace gmult
