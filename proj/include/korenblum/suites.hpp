#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "korenblum/json_format.hpp"
#include "korenblum/report.hpp"

namespace korenblum {

enum class Suite { Norms, Projections, Basis, Nuclearity, Weights, Transform, Isomorphism };

std::span<const Suite> all_suites();
std::string_view to_string(Suite suite);
/// Accepts the upper-case names (NORMS, ...); throws std::invalid_argument otherwise.
Suite parse_suite(std::string_view name);

/**
 * Full default configuration. Top-level keys: seed, level_max, gammas, corpus (null for the
 * standard per-gamma corpus, or a {"families": [...]} object used for every gamma), and one
 * section per suite (norms, projections, basis, nuclearity, weights, transform, isomorphism).
 */
Json default_config();

/// Defaults overlaid with `overrides`; unknown keys and type mismatches are rejected.
Json merge_config(const Json& overrides);
Json load_config(const std::filesystem::path& path);

/// Applies "dotted.key=value"; the value is parsed as JSON, falling back to a string.
void apply_override(Json& config, std::string_view assignment);

/// Runs one suite. Deterministic in (config); the worker count only affects wall time.
VerificationReport run_suite(Suite suite, const Json& config);

}  // namespace korenblum
