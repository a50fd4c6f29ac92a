#include "korenblum/json_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace korenblum {

namespace {

void append(const Json& v, int depth, std::string& out) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close(2 * static_cast<std::size_t>(depth), ' ');
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += Json(key).dump();
                out += ": ";
                append(item, depth + 1, out);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line; coefficient pairs are the common case.
            const bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += ", ";
                    append(v[i], depth + 1, out);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                append(v[i], depth + 1, out);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(v.get<double>());
            return;
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_json(const Json& value) {
    std::string out;
    append(value, 0, out);
    out += "\n";
    return out;
}

}  // namespace korenblum
