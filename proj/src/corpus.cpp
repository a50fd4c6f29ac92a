#include "korenblum/corpus.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>


namespace korenblum {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 4> kNames{{
    {FamilyKind::BinomialPole, "BINOMIAL_POLE"},
    {FamilyKind::Lacunary, "LACUNARY"},
    {FamilyKind::RandomBlock, "RANDOM_BLOCK"},
    {FamilyKind::Monomial, "MONOMIAL"},
}};

// std::mt19937_64 and std::seed_seq are fully specified by the standard; the normal variates
// come from Box-Muller here because std::normal_distribution is not.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          static_cast<std::uint32_t>(substream), static_cast<std::uint32_t>(substream >> 32)};
        engine_.seed(seq);
    }

    Complex next() {
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    double uniform_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
};

std::string member_name(FamilyKind kind, double param) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", param);
    return std::string(to_string(kind)) + "(" + buf + ")";
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
    for (const auto& [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "UNKNOWN";
}

FamilyKind parse_family_kind(std::string_view name) {
    for (const auto& [k, n] : kNames) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown corpus family '" + std::string(name) + "'");
}

void CorpusSpec::validate() const {
    if (level_max < 4 || level_max > 14) {
        throw std::invalid_argument("level_max must lie in [4, 14], got " + std::to_string(level_max));
    }
    const double degree = std::ldexp(1.0, static_cast<int>(level_max) + 1) - 1.0;
    for (const auto& family : families) {
        for (const double p : family.params) {
            if (!std::isfinite(p)) throw std::invalid_argument("non-finite corpus parameter");
            switch (family.kind) {
                case FamilyKind::BinomialPole:
                    if (p <= 0.0) throw std::invalid_argument("BINOMIAL_POLE needs beta > 0");
                    break;
                case FamilyKind::Monomial:
                    if (p < 0.0 || p != std::floor(p) || p > degree) {
                        throw std::invalid_argument("MONOMIAL degree must be an integer in [0, " +
                                                    format_double(degree) + "]");
                    }
                    break;
                case FamilyKind::Lacunary:
                case FamilyKind::RandomBlock:
                    break;
            }
        }
    }
}

std::vector<CorpusMember> gen_corpus(const CorpusSpec& spec) {
    spec.validate();
    const std::size_t size = std::size_t{2} << spec.level_max;
    std::vector<CorpusMember> out;
    std::uint64_t member = 0;
    for (const auto& family : spec.families) {
        for (const double p : family.params) {
            std::vector<Complex> c(size, Complex{});
            switch (family.kind) {
                case FamilyKind::BinomialPole: {
                    double a = 1.0;
                    for (std::size_t j = 0; j < size; ++j) {
                        c[j] = a;
                        a *= (static_cast<double>(j) + p) / (static_cast<double>(j) + 1.0);
                    }
                    break;
                }
                case FamilyKind::Lacunary:
                    for (std::size_t n = 0; n <= spec.level_max; ++n) {
                        c[std::size_t{1} << n] = std::exp2(static_cast<double>(n) * p);
                    }
                    break;
                case FamilyKind::RandomBlock: {
                    GaussianStream constant(spec.seed, member, 0);
                    c[0] = constant.next();
                    for (std::size_t n = 0; n <= spec.level_max; ++n) {
                        GaussianStream stream(spec.seed, member, n + 1);
                        const double scale = std::exp2(static_cast<double>(n) * p);
                        const std::size_t start = std::size_t{1} << n;
                        for (std::size_t m = 0; m < start; ++m) c[start + m] = scale * stream.next();
                    }
                    break;
                }
                case FamilyKind::Monomial:
                    c[static_cast<std::size_t>(p)] = 1.0;
                    break;
            }
            out.push_back({member_name(family.kind, p), family.kind, p, TaylorSeries(std::move(c))});
            ++member;
        }
    }
    return out;
}

std::vector<Complex> gaussian_coefficients(std::uint64_t seed, std::uint64_t stream,
                                           std::uint64_t substream, std::size_t count) {
    GaussianStream g(seed, stream, substream);
    std::vector<Complex> out(count);
    for (auto& v : out) v = g.next();
    return out;
}

CorpusSpec standard_corpus(double gamma, std::size_t level_max, std::uint64_t seed) {
    CorpusSpec spec;
    spec.level_max = level_max;
    spec.seed = seed;
    spec.families.push_back({FamilyKind::Monomial, {0.0, 7.0}});
    spec.families.push_back({FamilyKind::Lacunary, {gamma}});
    if (gamma > 0.0) spec.families.push_back({FamilyKind::BinomialPole, {gamma}});
    spec.families.push_back({FamilyKind::RandomBlock, {gamma - 0.5}});
    return spec;
}

CorpusSpec corpus_spec_from_json(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("corpus spec must be a JSON object");
    CorpusSpec spec;
    if (doc.contains("level_max")) spec.level_max = doc.at("level_max").get<std::size_t>();
    if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
    if (!doc.contains("families") || !doc.at("families").is_array()) {
        throw std::invalid_argument("corpus spec needs a \"families\" array");
    }
    for (const auto& f : doc.at("families")) {
        FamilySpec family;
        family.kind = parse_family_kind(f.at("kind").get<std::string>());
        family.params = f.at("params").get<std::vector<double>>();
        spec.families.push_back(std::move(family));
    }
    spec.validate();
    return spec;
}

Json corpus_spec_to_json(const CorpusSpec& spec) {
    Json doc;
    doc["level_max"] = spec.level_max;
    doc["seed"] = spec.seed;
    doc["families"] = Json::array();
    for (const auto& f : spec.families) {
        Json family;
        family["kind"] = to_string(f.kind);
        family["params"] = f.params;
        doc["families"].push_back(std::move(family));
    }
    return doc;
}

}  // namespace korenblum
