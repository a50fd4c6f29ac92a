#include "korenblum/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "korenblum/series_io.hpp"

namespace korenblum {

namespace {

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (const char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    return csv_cell(Json(v.dump()));
}

}  // namespace

std::size_t VerificationReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

std::size_t VerificationReport::fail_count() const { return cases.size() - pass_count(); }

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (json|csv)");
}

Json report_to_json(const VerificationReport& report) {
    Json doc;
    doc["suite"] = report.suite;
    doc["parameters"] = report.parameters;
    doc["cases"] = Json::array();
    for (const auto& c : report.cases) {
        Json item;
        item["id"] = c.id;
        item["inputs"] = c.inputs;
        item["measured"] = c.measured;
        item["bounds"] = c.bounds;
        item["pass"] = c.pass;
        doc["cases"].push_back(std::move(item));
    }
    Json summary;
    summary["pass_count"] = report.pass_count();
    summary["fail_count"] = report.fail_count();
    summary["constants"] = report.constants;
    doc["summary"] = std::move(summary);
    doc["passed"] = report.passed();
    return doc;
}

VerificationReport report_from_json(const Json& doc) {
    VerificationReport report;
    report.suite = doc.at("suite").get<std::string>();
    report.parameters = doc.value("parameters", Json::object());
    for (const auto& item : doc.at("cases")) {
        ReportCase c;
        c.id = item.at("id").get<std::string>();
        c.inputs = item.value("inputs", Json::object());
        c.measured = item.value("measured", Json::object());
        c.bounds = item.value("bounds", Json::object());
        c.pass = item.at("pass").get<bool>();
        report.cases.push_back(std::move(c));
    }
    if (doc.contains("summary")) report.constants = doc["summary"].value("constants", Json::object());
    return report;
}

std::string report_to_csv(const VerificationReport& report) {
    static constexpr const char* kSections[] = {"inputs", "measured", "bounds"};
    std::vector<std::pair<std::string, std::string>> columns;  // (section, key)
    for (const auto& c : report.cases) {
        const Json* parts[] = {&c.inputs, &c.measured, &c.bounds};
        for (int s = 0; s < 3; ++s) {
            for (const auto& [key, value] : parts[s]->items()) {
                const std::pair<std::string, std::string> col{kSections[s], key};
                if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
            }
        }
    }
    std::string out = "id,pass";
    for (const auto& [section, key] : columns) out += "," + csv_cell(Json(section + "." + key));
    out += "\n";
    for (const auto& c : report.cases) {
        out += csv_cell(Json(c.id));
        out += c.pass ? ",true" : ",false";
        for (const auto& [section, key] : columns) {
            const Json& part = section == "inputs" ? c.inputs : section == "measured" ? c.measured : c.bounds;
            out += ",";
            if (part.contains(key)) out += csv_cell(part[key]);
        }
        out += "\n";
    }
    return out;
}

void emit_report(const VerificationReport& report, const std::filesystem::path& path, ReportFormat format) {
    write_text(path, format == ReportFormat::Json ? format_json(report_to_json(report)) : report_to_csv(report));
}

}  // namespace korenblum
