#include "gmult/report.hpp"

#include <cmath>
#include <cstdio>

#include "gmult/linalg.hpp"

namespace gmult {

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    s.total = static_cast<int>(records.size());
    for (const auto& r : records) {
        if (r.skipped_reason.has_value())
            ++s.skipped;
        else if (r.pass)
            ++s.passed;
        else
            ++s.failed;
    }
    return s;
}

bool VerificationReport::all_passed() const {
    for (const auto& r : records)
        if (!r.skipped_reason.has_value() && !r.pass) return false;
    return true;
}

void VerificationReport::append(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

namespace {

std::string round_sig(double v) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

nlohmann::json round_for_digest(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::number_float:
            return round_sig(j.get<double>());
        case nlohmann::json::value_t::array: {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& e : j) out.push_back(round_for_digest(e));
            return out;
        }
        case nlohmann::json::value_t::object: {
            nlohmann::json out = nlohmann::json::object();
            for (auto it = j.begin(); it != j.end(); ++it)
                out[it.key()] = round_for_digest(it.value());
            return out;
        }
        default:
            return j;
    }
}

} // namespace

std::string digest_json(const nlohmann::json& j) {
    const std::string canon = round_for_digest(j).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CheckRecord RecordSink::base(const std::string& name, const std::string& claim) const {
    char trial[16];
    std::snprintf(trial, sizeof(trial), "%04d", trial_);
    CheckRecord r;
    r.id = suite_ + "/" + trial + "/" + name;
    r.claim = claim;
    r.instance_digest = digest_;
    return r;
}

void RecordSink::identity(const std::string& name, const std::string& claim,
                          double lhs, double rhs, double scale) {
    CheckRecord r = base(name, claim);
    r.kind = CheckRecord::Kind::identity;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = scaled_tol(scale, base_tol_);
    r.pass = std::abs(lhs - rhs) <= r.tolerance;
    out_->push_back(std::move(r));
}

void RecordSink::inequality(const std::string& name, const std::string& claim,
                            double lhs, double rhs, double scale) {
    CheckRecord r = base(name, claim);
    r.kind = CheckRecord::Kind::inequality;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = scaled_tol(scale, base_tol_);
    r.pass = lhs <= rhs + r.tolerance;
    out_->push_back(std::move(r));
}

void RecordSink::skip(const std::string& name, const std::string& claim,
                      const std::string& reason) {
    CheckRecord r = base(name, claim);
    r.skipped_reason = reason;
    r.pass = true;
    out_->push_back(std::move(r));
}

} // namespace gmult
