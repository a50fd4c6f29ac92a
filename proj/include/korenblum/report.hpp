#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "korenblum/json_format.hpp"

namespace korenblum {

struct ReportCase {
    std::string id;
    Json inputs = Json::object();
    Json measured = Json::object();
    Json bounds = Json::object();
    bool pass = true;
};

struct VerificationReport {
    std::string suite;
    Json parameters = Json::object();
    std::vector<ReportCase> cases;
    /// Empirical constants measured by the suite (e.g. the largest observed ratio).
    Json constants = Json::object();

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    bool passed() const { return fail_count() == 0; }
};

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view name);

Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& doc);

/// One row per case after a header. Columns: id, pass, then every inputs/measured/bounds key
/// in order of first appearance, prefixed with its section ("measured.norm").
std::string report_to_csv(const VerificationReport& report);

void emit_report(const VerificationReport& report, const std::filesystem::path& path, ReportFormat format);

}  // namespace korenblum
