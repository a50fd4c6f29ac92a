#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "korenblum/json_format.hpp"
#include "korenblum/taylor_series.hpp"

namespace korenblum {

enum class FamilyKind { BinomialPole, Lacunary, RandomBlock, Monomial };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// One family entry; every value in params yields one corpus member.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Monomial;
    std::vector<double> params;
};

struct CorpusSpec {
    std::vector<FamilySpec> families;
    std::size_t level_max = 12;  // members have degree 2^{level_max+1} - 1
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on level_max outside [4, 14] or a bad family parameter.
    void validate() const;
};

struct CorpusMember {
    std::string name;  // e.g. "BINOMIAL_POLE(0.5)"
    FamilyKind kind;
    double param;
    TaylorSeries series;
};

/**
 * Builds the corpus. All members have degree 2^{level_max+1} - 1.
 *
 *   BINOMIAL_POLE(beta): coefficients of (1 - z)^{-beta}, a_{j+1} = a_j (j + beta) / (j + 1); beta > 0.
 *   LACUNARY(gamma):     a_{2^n} = 2^{n gamma}, zero elsewhere.
 *   RANDOM_BLOCK(gamma): complex Gaussian coefficients scaled by 2^{n gamma} on block n; the
 *                        stream of each block depends only on (seed, member, block), so the
 *                        corpus at a lower level_max is an exact truncation of a higher one.
 *   MONOMIAL(N):         z^N; N a nonnegative integer not above the corpus degree.
 */
std::vector<CorpusMember> gen_corpus(const CorpusSpec& spec);

/// Default families for a growth index gamma: two monomials, LACUNARY(gamma),
/// BINOMIAL_POLE(gamma) when gamma > 0, and RANDOM_BLOCK(gamma - 1/2), whose blocks have
/// unit-circle maxima of order 2^{n gamma}.
CorpusSpec standard_corpus(double gamma, std::size_t level_max, std::uint64_t seed);

/// count standard complex Gaussian values from the stream keyed by (seed, stream, substream).
std::vector<Complex> gaussian_coefficients(std::uint64_t seed, std::uint64_t stream,
                                           std::uint64_t substream, std::size_t count);

CorpusSpec corpus_spec_from_json(const Json& doc);
Json corpus_spec_to_json(const CorpusSpec& spec);

}  // namespace korenblum
