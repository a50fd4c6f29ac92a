#include "korenblum/series_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace korenblum {

namespace {

Json pairs(std::span<const Complex> coeffs) {
    Json arr = Json::array();
    for (const auto& c : coeffs) arr.push_back(Json::array({c.real(), c.imag()}));
    return arr;
}

double parse_number(std::string_view field, std::size_t line) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
        field.remove_suffix(1);
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw std::invalid_argument("CSV line " + std::to_string(line) + ": cannot parse '" +
                                    std::string(field) + "'");
    }
    return v;
}

std::vector<Complex> parse_csv(std::string_view text) {
    std::vector<Complex> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        std::vector<std::string_view> fields;
        for (std::size_t start = 0;;) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 3) {
            throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": expected index,re,im");
        }
        double index = 0.0;
        try {
            index = parse_number(fields[0], line_no);
        } catch (const std::invalid_argument&) {
            if (line_no == 1) continue;  // header
            throw;
        }
        if (index < 0.0 || index != std::floor(index)) {
            throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": bad index");
        }
        const auto j = static_cast<std::size_t>(index);
        if (j >= out.size()) out.resize(j + 1);
        out[j] = {parse_number(fields[1], line_no), parse_number(fields[2], line_no)};
    }
    return out;
}

std::vector<Complex> coeffs_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
        throw std::invalid_argument("coefficient JSON needs a \"coeffs\" array");
    }
    std::vector<Complex> out;
    out.reserve(doc["coeffs"].size());
    for (const auto& pair : doc["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw std::invalid_argument("each coefficient must be a [re, im] pair of numbers");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (doc.contains("degree")) {
        const auto& d = doc["degree"];
        if (!d.is_number_integer() || d.get<long long>() + 1 != static_cast<long long>(out.size())) {
            throw std::invalid_argument("\"degree\" must equal len(coeffs) - 1");
        }
    }
    return out;
}

}  // namespace

Json series_to_json(std::span<const Complex> coeffs) {
    Json doc;
    doc["degree"] = coeffs.empty() ? 0 : coeffs.size() - 1;
    doc["coeffs"] = coeffs.empty() ? Json::array({Json::array({0.0, 0.0})}) : pairs(coeffs);
    return doc;
}

Json sequence_to_json(const SampleSequence& seq) {
    Json doc = series_to_json(seq.x);
    doc["layout"] = "dyadic-blocks";
    doc["levels"] = seq.top_level;
    return doc;
}

std::vector<Complex> parse_coefficients(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("empty coefficient file");
    if (text[first] == '{') return coeffs_from_json(Json::parse(text));
    return parse_csv(text);
}

TaylorSeries parse_series(std::string_view text) { return TaylorSeries(parse_coefficients(text)); }

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

TaylorSeries read_series(const std::filesystem::path& path) {
    try {
        return parse_series(read_text(path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

SampleSequence read_sequence(const std::filesystem::path& path) {
    const std::string text = read_text(path);
    SampleSequence out;
    try {
        out.x = parse_coefficients(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
    if (out.x.size() < 2 || !std::has_single_bit(out.x.size())) {
        throw std::invalid_argument(path.string() + ": sequence length " + std::to_string(out.x.size()) +
                                    " is not 2^{N+1}");
    }
    out.top_level = static_cast<std::size_t>(std::countr_zero(out.x.size())) - 1;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (text[first] == '{') {
        const Json doc = Json::parse(text);
        if (doc.contains("levels") && doc["levels"] != out.top_level) {
            throw std::invalid_argument(path.string() + ": \"levels\" does not match the sequence length");
        }
    }
    return out;
}

}  // namespace korenblum
