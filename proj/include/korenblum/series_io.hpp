#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "korenblum/block_transform.hpp"
#include "korenblum/json_format.hpp"
#include "korenblum/taylor_series.hpp"

// Coefficient and sequence files.
//
// JSON: {"degree": D, "coeffs": [[re, im], ...]} with D + 1 pairs. Sample sequences produced by
// the block transform add "layout": "dyadic-blocks" and "levels": N (the top block level).
// CSV: one "index,re,im" line per nonzero entry; missing indices are zero. A header line whose
// first field is not a number is skipped.
namespace korenblum {

Json series_to_json(std::span<const Complex> coeffs);
Json sequence_to_json(const SampleSequence& seq);

/// Parses either format; the first non-blank character '{' selects JSON.
std::vector<Complex> parse_coefficients(std::string_view text);
TaylorSeries parse_series(std::string_view text);

TaylorSeries read_series(const std::filesystem::path& path);
/// Reads a sample sequence; its length must be 2^{N+1}. A "levels" field, if present, must match.
SampleSequence read_sequence(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
/// Writes text, creating parent directories; failures name the path.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace korenblum
