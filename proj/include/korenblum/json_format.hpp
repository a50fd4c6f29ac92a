#pragma once

#include <string>

#include "json.hpp"

namespace korenblum {

using Json = nlohmann::ordered_json;

/**
 * Deterministic JSON text: keys in insertion order, two-space indentation, floating-point
 * numbers printed with "%.17g" and non-finite values as null. Parsing the output and
 * formatting it again reproduces it byte for byte.
 */
std::string format_json(const Json& value);

/// "%.17g", the float format shared by the JSON and CSV writers.
std::string format_double(double v);

}  // namespace korenblum
