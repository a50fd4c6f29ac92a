#include "korenblum/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "korenblum/analytic.hpp"
#include "korenblum/block_transform.hpp"
#include "korenblum/corpus.hpp"
#include "korenblum/kothe.hpp"
#include "korenblum/projections.hpp"
#include "korenblum/series_io.hpp"
#include "korenblum/work_pool.hpp"

namespace korenblum {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuiteNames{{
    {Suite::Norms, "NORMS"},
    {Suite::Projections, "PROJECTIONS"},
    {Suite::Basis, "BASIS"},
    {Suite::Nuclearity, "NUCLEARITY"},
    {Suite::Weights, "WEIGHTS"},
    {Suite::Transform, "TRANSFORM"},
    {Suite::Isomorphism, "ISOMORPHISM"},
}};

constexpr std::array<Suite, 7> kSuites{Suite::Norms,   Suite::Projections, Suite::Basis,      Suite::Nuclearity,
                                       Suite::Weights, Suite::Transform,   Suite::Isomorphism};

constexpr const char* kDefaults = R"({
  "seed": 20240917,
  "level_max": 12,
  "gammas": [0, 0.5, 1],
  "corpus": null,
  "norms": {
    "monomial_mus": [0.5, 1, 2.7],
    "monomial_degree_max": 4096,
    "tolerance": 1e-9
  },
  "projections": {
    "kernel_m_min": 64,
    "kernel_m_max": 4096,
    "kernel_step_tolerance": 0.1,
    "n_max": 4096,
    "log_constant": 4
  },
  "basis": {
    "ratio_max": 4,
    "rate_pairs": [[1, 1.5], [0.5, 1.5]],
    "rate_n_min": 64,
    "rate_n_max": 2048,
    "slope_tolerance": 0.15
  },
  "nuclearity": {
    "cases": [{"gamma": 0, "nu": 0.4, "mu": 1}],
    "n_min": 256,
    "n_max": 8192,
    "slope_tolerance": 0.1
  },
  "weights": {
    "pairs": [[2, 1], [1.5, 0.5], [3, 2.9]],
    "mus": [0.5, 1, 3],
    "j_max": 100000,
    "kothe_rows": 32
  },
  "transform": {
    "level_min": 4,
    "trials": 100,
    "roundtrip_tolerance": 1e-10,
    "quadrature_levels": [2, 8],
    "quadrature_trials": 1000,
    "quadrature_tolerance": 1e-12,
    "sampling_levels": [2, 10],
    "sampling_trials": 1000,
    "sampling_constant_from": 4,
    "block_tolerance": 1e-9,
    "factor_mus": [0.5, 1, 2],
    "factor_slack": 0.05
  },
  "isomorphism": {
    "level_min": 6,
    "stable_from": 8,
    "max_change": 0.25
  }
})";

void check_shape(const Json& defaults, const Json& given, const std::string& path) {
    if (defaults.is_null()) return;  // free-form slot
    if (defaults.is_object()) {
        if (!given.is_object()) throw std::invalid_argument("config key '" + path + "' must be an object");
        for (const auto& [key, value] : given.items()) {
            const std::string sub = path.empty() ? key : path + "." + key;
            if (!defaults.contains(key)) throw std::invalid_argument("unknown config key '" + sub + "'");
            check_shape(defaults[key], value, sub);
        }
        return;
    }
    const bool ok = defaults.is_number() ? given.is_number()
                    : defaults.is_array() ? given.is_array()
                    : defaults.is_string() ? given.is_string()
                    : defaults.is_boolean() ? given.is_boolean()
                                            : true;
    if (!ok) throw std::invalid_argument("config key '" + path + "' has the wrong type");
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct Triple {
    WeightExponent mu1, mu, mu2;
};

/// Shared view of the config plus the per-gamma corpora.
struct Context {
    const Json& config;
    std::uint64_t seed;
    std::size_t level_max;
    std::vector<double> gammas;

    explicit Context(const Json& c)
        : config(c),
          seed(c.at("seed").get<std::uint64_t>()),
          level_max(c.at("level_max").get<std::size_t>()),
          gammas(c.at("gammas").get<std::vector<double>>()) {
        for (const double g : gammas) {
            if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("gammas must be >= 0");
        }
    }

    const Json& section(const char* name) const { return config.at(name); }

    static Triple triple(double gamma) {
        return {WeightExponent{gamma + 0.2}, WeightExponent{gamma + 0.5}, WeightExponent{gamma + 1.0}};
    }

    CorpusSpec corpus_spec(double gamma, std::size_t level) const {
        if (config.at("corpus").is_null()) return standard_corpus(gamma, level, seed);
        Json doc = config.at("corpus");
        doc["level_max"] = level;
        doc["seed"] = seed;
        return corpus_spec_from_json(doc);
    }

    std::vector<CorpusMember> corpus(double gamma, std::size_t level) const {
        return gen_corpus(corpus_spec(gamma, level));
    }
    std::vector<CorpusMember> corpus(double gamma) const { return corpus(gamma, level_max); }
};

// A unit of work: computes one report case. Cases are run through parallel_map and stored by index.
using Task = std::function<ReportCase()>;

std::vector<ReportCase> run_tasks(const std::vector<Task>& tasks) {
    return parallel_map<ReportCase>(tasks.size(), [&](std::size_t i) { return tasks[i](); });
}

double max_constant(const std::vector<ReportCase>& cases, const char* section, const char* key) {
    double m = 0.0;
    for (const auto& c : cases) {
        const Json& part = std::string_view(section) == "measured" ? c.measured : c.bounds;
        if (part.contains(key) && part[key].is_number()) m = std::max(m, part[key].get<double>());
    }
    return m;
}

// ---------------------------------------------------------------------------------------------

VerificationReport norms_suite(const Context& ctx) {
    const Json& cfg = ctx.section("norms");
    const double tol = cfg.at("tolerance").get<double>();
    std::vector<Task> tasks;

    const auto max_degree = cfg.at("monomial_degree_max").get<std::size_t>();
    for (const double mu : cfg.at("monomial_mus").get<std::vector<double>>()) {
        for (std::size_t n = 1; n <= max_degree; n = n < 4 ? n + 1 : n + n / 2) {
            tasks.push_back([=] {
                ReportCase c;
                c.id = "monomial N=" + std::to_string(n) + " mu=" + label(mu);
                c.inputs = {{"N", n}, {"mu", mu}};
                const WeightExponent m{mu};
                const double closed = monomial_norm(n, m);
                const double searched = weighted_norm(TaylorSeries::monomial(n), m);
                c.measured = {{"closed_form", closed}, {"weighted_norm", searched},
                              {"rel_diff", rel_diff(closed, searched)}};
                c.bounds = {{"rel_tolerance", tol}};
                c.pass = rel_diff(closed, searched) <= tol;
                return c;
            });
        }
    }

    for (const double gamma : ctx.gammas) {
        const auto corpus = std::make_shared<std::vector<CorpusMember>>(ctx.corpus(gamma));
        for (std::size_t i = 0; i < corpus->size(); ++i) {
            tasks.push_back([=, &ctx] {
                const auto& member = (*corpus)[i];
                const auto t = Context::triple(gamma);
                ReportCase c;
                c.id = "corpus gamma=" + label(gamma) + " " + member.name;
                c.inputs = {{"gamma", gamma}, {"member", member.name}, {"degree", member.series.degree()}};
                const double n1 = weighted_norm(member.series, t.mu1);
                const double n = weighted_norm(member.series, t.mu);
                const double n2 = weighted_norm(member.series, t.mu2);
                double profile_max = 0.0;
                for (const auto& p : radial_profile(member.series, t.mu, 8)) profile_max = std::max(profile_max, p.value);
                // Lemma-style localization on the tail beyond degree 2^{level_max - 3}.
                const std::size_t cut = std::size_t{1} << (ctx.level_max - 3);
                const auto rest = tail(member.series, cut);
                const double local = weighted_norm(rest, t.mu);
                const double full = weighted_norm_full_range(rest, t.mu);
                c.measured = {{"norm_mu1", n1},          {"norm_mu", n},        {"norm_mu2", n2},
                              {"profile_max", profile_max}, {"tail_cut", cut},   {"tail_localized", local},
                              {"tail_full_range", full},  {"tail_rel_diff", rel_diff(local, full)}};
                c.bounds = {{"mu1", t.mu1.value()}, {"mu", t.mu.value()}, {"mu2", t.mu2.value()}, {"rel_tolerance", tol}};
                c.pass = n2 <= n * (1.0 + tol) && n <= n1 * (1.0 + tol) && profile_max <= n * (1.0 + tol) &&
                         rel_diff(local, full) <= tol;
                return c;
            });
        }
    }

    VerificationReport r;
    r.cases = run_tasks(tasks);
    r.constants = {{"max_monomial_rel_diff", max_constant(r.cases, "measured", "rel_diff")},
                   {"max_tail_rel_diff", max_constant(r.cases, "measured", "tail_rel_diff")}};
    return r;
}

// ---------------------------------------------------------------------------------------------

VerificationReport projections_suite(const Context& ctx) {
    const Json& cfg = ctx.section("projections");
    std::vector<Task> tasks;
    const double expect = 4.0 / (std::numbers::pi * std::numbers::pi) * std::numbers::ln2;
    const double step_tol = cfg.at("kernel_step_tolerance").get<double>();
    for (auto m = cfg.at("kernel_m_min").get<std::size_t>(); m <= cfg.at("kernel_m_max").get<std::size_t>(); m *= 2) {
        tasks.push_back([=] {
            ReportCase c;
            c.id = "dirichlet m=" + std::to_string(m);
            c.inputs = {{"m", m}};
            const double lo = kernel_l1(m);
            const double hi = kernel_l1(2 * m);
            const double ratio = (hi - lo) / expect;
            c.measured = {{"kernel_l1_m", lo}, {"kernel_l1_2m", hi}, {"step", hi - lo},
                          {"step_over_asymptotic", ratio}, {"l1_over_log_m", lo / std::log(static_cast<double>(m))}};
            c.bounds = {{"asymptotic_step", expect}, {"low", 1.0 - step_tol}, {"high", 1.0 + step_tol}};
            c.pass = ratio >= 1.0 - step_tol && ratio <= 1.0 + step_tol;
            return c;
        });
    }
    const auto n_max = cfg.at("n_max").get<std::size_t>();
    const double constant = cfg.at("log_constant").get<double>();
    for (const double gamma : ctx.gammas) {
        const auto corpus = std::make_shared<std::vector<CorpusMember>>(ctx.corpus(gamma));
        for (std::size_t i = 0; i < corpus->size(); ++i) {
            tasks.push_back([=] {
                const auto& member = (*corpus)[i];
                const WeightExponent mu = Context::triple(gamma).mu;
                std::vector<std::size_t> ns;
                for (std::size_t n = 2; n <= std::min(n_max, member.series.degree()); n *= 2) ns.push_back(n);
                const auto ratios = projection_growth(member.series, mu, ns);
                double worst = 0.0;
                for (std::size_t k = 0; k < ns.size(); ++k) {
                    worst = std::max(worst, ratios[k] / (1.0 + std::log(static_cast<double>(ns[k]))));
                }
                ReportCase c;
                c.id = "growth gamma=" + label(gamma) + " " + member.name;
                c.inputs = {{"gamma", gamma}, {"member", member.name}, {"mu", mu.value()}, {"ns", ns}};
                c.measured = {{"ratios", ratios}, {"max_ratio_over_log", worst}};
                c.bounds = {{"log_constant", constant}};
                c.pass = worst <= constant;
                return c;
            });
        }
    }
    VerificationReport r;
    r.cases = run_tasks(tasks);
    r.constants = {{"projection_log_constant", max_constant(r.cases, "measured", "max_ratio_over_log")}};
    return r;
}

// ---------------------------------------------------------------------------------------------

Json records_json(std::span<const RateBoundRecord> recs) {
    Json out = Json::array();
    for (const auto& r : recs) {
        out.push_back({{"n", r.n}, {"mu0", r.mu0}, {"mu", r.mu}, {"bound", r.bound}, {"measured", r.measured},
                       {"ratio", r.ratio}});
    }
    return out;
}

VerificationReport basis_suite(const Context& ctx) {
    const Json& cfg = ctx.section("basis");
    const double ratio_max = cfg.at("ratio_max").get<double>();
    std::vector<Task> tasks;
    for (const double gamma : ctx.gammas) {
        const auto corpus = std::make_shared<std::vector<CorpusMember>>(ctx.corpus(gamma));
        const auto t = Context::triple(gamma);
        for (std::size_t i = 0; i < corpus->size(); ++i) {
            for (const WeightExponent mu : {t.mu1, t.mu, t.mu2}) {
                tasks.push_back([=, &ctx] {
                    const auto& member = (*corpus)[i];
                    std::vector<std::size_t> ns;
                    for (std::size_t n = 2; n <= (std::size_t{1} << ctx.level_max); n *= 2) ns.push_back(n);
                    const std::vector<WeightExponent> mus{mu};
                    const auto recs = basis_convergence_suite(member.series, gamma, mus, ns);
                    const std::size_t low = member.series.lowest_degree().value_or(0);
                    std::size_t settle = 0;
                    while (settle < ns.size() && ns[settle] <= low) ++settle;
                    double worst = 0.0;
                    for (const auto& rec : recs) worst = std::max(worst, rec.ratio);
                    const bool decreasing = settles_nonincreasing(recs, settle);
                    // With nonnegative coefficients M_inf(f, r) = f(r), so dropping terms lowers it
                    // pointwise and the tail norms must decrease. For complex coefficients the sup
                    // over the circle can grow when terms are removed; the flag is only reported.
                    const auto cs = member.series.coeffs();
                    const bool nonnegative = std::all_of(cs.begin(), cs.end(), [](Complex a) {
                        return a.imag() == 0.0 && a.real() >= 0.0;
                    });
                    ReportCase c;
                    c.id = "basis gamma=" + label(gamma) + " " + member.name + " mu=" + label(mu.value());
                    c.inputs = {{"gamma", gamma}, {"member", member.name}, {"mu", mu.value()},
                                {"mu0", (gamma + mu.value()) / 2.0}};
                    c.measured = {{"records", records_json(recs)}, {"max_ratio", worst},
                                  {"settle_index", settle}, {"nonincreasing", decreasing}};
                    c.bounds = {{"ratio_max", ratio_max}, {"monotonicity_required", nonnegative}};
                    c.pass = worst <= ratio_max && (decreasing || !nonnegative);
                    return c;
                });
            }
        }
    }
    const auto n_lo = cfg.at("rate_n_min").get<std::size_t>();
    const auto n_hi = std::min(cfg.at("rate_n_max").get<std::size_t>(), std::size_t{1} << ctx.level_max);
    const double slope_tol = cfg.at("slope_tolerance").get<double>();
    for (const auto& pair : cfg.at("rate_pairs")) {
        const double mu0 = pair.at(0).get<double>();
        const double mu = pair.at(1).get<double>();
        tasks.push_back([=, &ctx] {
            CorpusSpec spec;
            spec.level_max = ctx.level_max;
            spec.families.push_back({FamilyKind::BinomialPole, {mu0}});
            const TaylorSeries f = gen_corpus(spec).front().series;
            const WeightExponent m0{mu0}, m{mu};
            const double base = weighted_norm(f, m0);
            std::vector<RateBoundRecord> recs;
            std::vector<double> xs, ys;
            double worst = 0.0;
            for (std::size_t n = n_lo; n <= n_hi; n *= 2) {
                recs.push_back(tail_bound_check(f, base, m0, m, n));
                xs.push_back(static_cast<double>(n));
                ys.push_back(recs.back().measured);
                worst = std::max(worst, recs.back().ratio);
            }
            const double slope = loglog_slope(xs, ys);
            const double target = -(mu - mu0);
            ReportCase c;
            c.id = "rate (1-z)^-" + label(mu0) + " mu=" + label(mu);
            c.inputs = {{"mu0", mu0}, {"mu", mu}, {"degree", f.degree()}, {"n_min", n_lo}, {"n_max", n_hi}};
            c.measured = {{"records", records_json(recs)}, {"slope", slope}, {"max_ratio", worst}};
            c.bounds = {{"slope_target", target}, {"slope_tolerance", slope_tol}, {"ratio_max", ratio_max}};
            c.pass = std::abs(slope - target) <= slope_tol && worst <= ratio_max;
            return c;
        });
    }
    VerificationReport r;
    r.cases = run_tasks(tasks);
    r.constants = {{"max_measured_over_bound", max_constant(r.cases, "measured", "max_ratio")}};
    return r;
}

// ---------------------------------------------------------------------------------------------

VerificationReport nuclearity_suite(const Context& ctx) {
    const Json& cfg = ctx.section("nuclearity");
    const auto n_lo = cfg.at("n_min").get<std::size_t>();
    const auto n_hi = cfg.at("n_max").get<std::size_t>();
    const double tol = cfg.at("slope_tolerance").get<double>();
    std::vector<Task> tasks;
    for (const auto& item : cfg.at("cases")) {
        const double gamma = item.at("gamma").get<double>();
        const double nu = item.at("nu").get<double>();
        const double mu = item.at("mu").get<double>();
        tasks.push_back([=] {
            const auto sums = nuclearity_partial_sums(gamma, WeightExponent{nu}, WeightExponent{mu}, n_hi);
            bool increasing = true;
            for (std::size_t i = 1; i < sums.size(); ++i) increasing = increasing && sums[i] > sums[i - 1];
            std::vector<double> xs, ys;
            for (std::size_t n = n_lo; n <= n_hi; n *= 2) {
                xs.push_back(static_cast<double>(n));
                ys.push_back(sums[n - 1]);
            }
            const double slope = loglog_slope(xs, ys);
            const double target = 1.0 - (mu - nu);
            ReportCase c;
            c.id = "nuclearity gamma=" + label(gamma) + " nu=" + label(nu) + " mu=" + label(mu);
            c.inputs = {{"gamma", gamma}, {"nu", nu}, {"mu", mu}, {"n_min", n_lo}, {"n_max", n_hi}};
            c.measured = {{"partial_sums", ys}, {"slope", slope}, {"strictly_increasing", increasing}};
            c.bounds = {{"slope_target", target}, {"slope_tolerance", tol}};
            c.pass = increasing && std::abs(slope - target) <= tol;
            return c;
        });
    }
    VerificationReport r;
    r.cases = run_tasks(tasks);
    return r;
}

// ---------------------------------------------------------------------------------------------

VerificationReport weights_suite(const Context& ctx) {
    const Json& cfg = ctx.section("weights");
    const auto J = cfg.at("j_max").get<std::size_t>();
    const auto rows = cfg.at("kothe_rows").get<std::size_t>();
    std::vector<Task> tasks;
    for (const auto& pair : cfg.at("pairs")) {
        const double mu1 = pair.at(0).get<double>();
        const double mu2 = pair.at(1).get<double>();
        tasks.push_back([=] {
            ReportCase c;
            c.id = "monotone mu1=" + label(mu1) + " mu2=" + label(mu2);
            c.inputs = {{"mu1", mu1}, {"mu2", mu2}, {"j_max", J}};
            c.pass = check_weight_monotone(WeightExponent{mu1}, WeightExponent{mu2}, J);
            c.measured = {{"monotone", c.pass}};
            return c;
        });
    }
    for (const double mu : cfg.at("mus").get<std::vector<double>>()) {
        tasks.push_back([=] {
            const auto [lo, hi] = equivalence_ratio(WeightExponent{mu}, J);
            const double cap = std::exp2(std::max(1.0, mu));
            ReportCase c;
            c.id = "equivalence mu=" + label(mu);
            c.inputs = {{"mu", mu}, {"j_max", J}};
            c.measured = {{"min_ratio", lo}, {"max_ratio", hi}};
            c.bounds = {{"min_allowed", 1.0}, {"max_allowed", cap}};
            c.pass = lo >= 1.0 && hi <= cap;
            return c;
        });
    }
    for (const double gamma : ctx.gammas) {
        for (const KotheKind kind : {KotheKind::Echelon, KotheKind::CoEchelon}) {
            if (kind == KotheKind::CoEchelon && gamma == 0.0) continue;
            tasks.push_back([=] {
                const KotheMatrixSpec spec{gamma, kind};
                bool ok = true;
                for (std::size_t k = spec.first_row(); k < rows && ok; ++k) {
                    for (std::size_t j = 0; j <= J && ok; ++j) {
                        const double a = kothe_row(spec, k, j);
                        const double b = kothe_row(spec, k + 1, j);
                        ok = kind == KotheKind::Echelon ? a <= b : a >= b;
                    }
                }
                ReportCase c;
                c.id = std::string(kind == KotheKind::Echelon ? "echelon" : "co-echelon") +
                       " gamma=" + label(gamma);
                c.inputs = {{"gamma", gamma}, {"first_row", spec.first_row()}, {"rows", rows}, {"j_max", J}};
                c.measured = {{"rows_ordered", ok}};
                c.pass = ok;
                return c;
            });
        }
    }
    VerificationReport r;
    r.cases = run_tasks(tasks);
    return r;
}

// ---------------------------------------------------------------------------------------------

std::vector<Complex> random_vector(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub, std::size_t n) {
    return gaussian_coefficients(seed, stream, sub, n);
}

VerificationReport transform_suite(const Context& ctx) {
    const Json& cfg = ctx.section("transform");
    std::vector<Task> tasks;
    const auto trials = cfg.at("trials").get<std::size_t>();
    const double rt_tol = cfg.at("roundtrip_tolerance").get<double>();
    const std::uint64_t seed = ctx.seed;

    for (auto level = cfg.at("level_min").get<std::size_t>(); level <= ctx.level_max; ++level) {
        tasks.push_back([=] {
            const std::size_t len = std::size_t{2} << level;
            double fwd = 0.0, bwd = 0.0;
            for (std::size_t t = 0; t < trials; ++t) {
                const TaylorSeries f(random_vector(seed, 100 + level, 2 * t, len));
                const auto back = inverse_T(forward_T(f).x);
                for (std::size_t j = 0; j < len; ++j) fwd = std::max(fwd, std::abs(back[j] - f[j]));
                const auto x = random_vector(seed, 100 + level, 2 * t + 1, len);
                const auto again = forward_T(inverse_T(x)).x;
                for (std::size_t j = 0; j < len; ++j) bwd = std::max(bwd, std::abs(again[j] - x[j]));
            }
            ReportCase c;
            c.id = "roundtrip N=" + std::to_string(level);
            c.inputs = {{"level", level}, {"length", len}, {"trials", trials}};
            c.measured = {{"max_err_inverse_forward", fwd}, {"max_err_forward_inverse", bwd}};
            c.bounds = {{"tolerance", rt_tol}};
            c.pass = fwd < rt_tol && bwd < rt_tol;
            return c;
        });
    }

    for (const double gamma : ctx.gammas) {
        const auto corpus = std::make_shared<std::vector<CorpusMember>>(ctx.corpus(gamma));
        const auto t = Context::triple(gamma);
        const double block_tol = cfg.at("block_tolerance").get<double>();
        for (std::size_t i = 0; i < corpus->size(); ++i) {
            tasks.push_back([=] {
                const auto& member = (*corpus)[i];
                const auto& f = member.series;
                const auto back = inverse_T(forward_T(f).x);
                double err = 0.0, scale = 0.0;
                for (std::size_t j = 0; j <= f.degree(); ++j) {
                    err = std::max(err, std::abs(back[j] - f[j]));
                    scale = std::max(scale, std::abs(f[j]));
                }
                double worst = 0.0;
                const auto parts = block_decompose(f);
                for (const WeightExponent mu : {t.mu1, t.mu, t.mu2}) {
                    for (const auto& blk : parts.blocks) {
                        const auto b = block_norm_bounds(blk, mu);
                        if (b.upper_33 > 0.0) worst = std::max(worst, b.norm / b.upper_33);
                    }
                }
                ReportCase c;
                c.id = "corpus gamma=" + label(gamma) + " " + member.name;
                c.inputs = {{"gamma", gamma}, {"member", member.name}, {"degree", f.degree()}};
                c.measured = {{"roundtrip_rel_err", scale > 0.0 ? err / scale : err},
                              {"max_norm_over_upper_33", worst}};
                c.bounds = {{"roundtrip_tolerance", rt_tol}, {"upper_33_slack", block_tol}};
                c.pass = (scale > 0.0 ? err / scale : err) < rt_tol && worst <= 1.0 + block_tol;
                return c;
            });
        }
    }

    const auto q_levels = cfg.at("quadrature_levels").get<std::vector<std::size_t>>();
    const auto q_trials = cfg.at("quadrature_trials").get<std::size_t>();
    const double q_tol = cfg.at("quadrature_tolerance").get<double>();
    for (std::size_t level = q_levels.at(0); level <= q_levels.at(1); ++level) {
        tasks.push_back([=] {
            const long top = (1L << level) - 1;
            double worst = 0.0;
            for (std::size_t t = 0; t < q_trials; ++t) {
                const TrigPolynomial g{-top, random_vector(seed, 200 + level, t, static_cast<std::size_t>(2 * top + 1))};
                const auto [mean, b0] = quadrature_identity(g, level);
                worst = std::max(worst, std::abs(mean - b0));
            }
            ReportCase c;
            c.id = "quadrature n=" + std::to_string(level);
            c.inputs = {{"level", level}, {"max_frequency", top}, {"trials", q_trials}};
            c.measured = {{"max_abs_err", worst}};
            c.bounds = {{"tolerance", q_tol}};
            c.pass = worst <= q_tol;
            return c;
        });
    }

    const auto s_levels = cfg.at("sampling_levels").get<std::vector<std::size_t>>();
    const auto s_trials = cfg.at("sampling_trials").get<std::size_t>();
    const auto s_from = cfg.at("sampling_constant_from").get<std::size_t>();
    for (std::size_t level = s_levels.at(0); level <= s_levels.at(1); ++level) {
        tasks.push_back([=] {
            bool left = true;
            double worst = 0.0;
            for (std::size_t t = 0; t < s_trials; ++t) {
                const BlockPolynomial blk(level, random_vector(seed, 300 + level, t, std::size_t{1} << level));
                const auto s = sampling_inequality(blk);
                left = left && s.max_sample <= s.sup_modulus * (1.0 + 1e-9);
                worst = std::max(worst, s.ratio / static_cast<double>(level * level));
            }
            ReportCase c;
            c.id = "sampling n=" + std::to_string(level);
            c.inputs = {{"level", level}, {"trials", s_trials}};
            c.measured = {{"left_inequality", left}, {"max_ratio_over_n2", worst}};
            c.bounds = {{"constant_cap", level >= s_from ? Json(1.0) : Json(nullptr)}};
            c.pass = left && (level < s_from || worst <= 1.0);
            return c;
        });
    }

    const double slack = cfg.at("factor_slack").get<double>();
    for (const double mu : cfg.at("factor_mus").get<std::vector<double>>()) {
        tasks.push_back([=, &ctx] {
            double worst = 0.0;
            Json factors = Json::array();
            for (std::size_t n = 4; n <= ctx.level_max; ++n) {
                const auto b = block_norm_bounds(BlockPolynomial(n, std::vector<Complex>(std::size_t{1} << n)),
                                                 WeightExponent{mu});
                factors.push_back(b.factor_34);
                worst = std::max(worst, b.factor_34 / std::exp(2.0 * mu));
            }
            ReportCase c;
            c.id = "factor (1+mu/2^n)^(2^(n+1)) mu=" + label(mu);
            c.inputs = {{"mu", mu}, {"n_min", 4}, {"n_max", ctx.level_max}};
            c.measured = {{"factors", factors}, {"max_over_e2mu", worst}};
            c.bounds = {{"cap_over_e2mu", 1.0 + slack}};
            c.pass = worst <= 1.0 + slack;
            return c;
        });
    }

    VerificationReport r;
    r.cases = run_tasks(tasks);
    double sampling = 0.0;
    for (const auto& c : r.cases) {
        if (c.id.starts_with("sampling") && c.inputs["level"].get<std::size_t>() >= s_from) {
            sampling = std::max(sampling, c.measured["max_ratio_over_n2"].get<double>());
        }
    }
    r.constants = {{"sampling_constant", sampling},
                   {"max_norm_over_upper_33", max_constant(r.cases, "measured", "max_norm_over_upper_33")}};
    return r;
}

// ---------------------------------------------------------------------------------------------

VerificationReport isomorphism_suite(const Context& ctx) {
    const Json& cfg = ctx.section("isomorphism");
    const auto level_min = cfg.at("level_min").get<std::size_t>();
    const auto stable_from = cfg.at("stable_from").get<std::size_t>();
    const double max_change = cfg.at("max_change").get<double>();
    if (level_min < 4) throw std::invalid_argument("isomorphism.level_min must be >= 4");
    struct Point {
        double gamma;
        std::size_t level;
        TechnicalConstants k;
        Json members;
    };
    std::vector<std::pair<double, std::size_t>> grid;
    for (const double gamma : ctx.gammas) {
        for (std::size_t level = level_min; level <= ctx.level_max; ++level) grid.emplace_back(gamma, level);
    }
    const auto points = parallel_map<Point>(grid.size(), [&](std::size_t i) {
        const auto [gamma, level] = grid[i];
        const auto t = Context::triple(gamma);
        const auto corpus = ctx.corpus(gamma, level);
        std::vector<TaylorSeries> fs;
        Json members = Json::array();
        for (const auto& m : corpus) {
            // Per-member ratios; the extremes over the corpus are the reported constants.
            const auto one = technical_constants(std::span(&m.series, 1), t.mu1, t.mu, t.mu2);
            members.push_back({{"member", m.name}, {"ratio_mu1", one.d2_hat}, {"ratio_mu2", one.d1_hat}});
            fs.push_back(m.series);
        }
        return Point{gamma, level, technical_constants(fs, t.mu1, t.mu, t.mu2), std::move(members)};
    });

    VerificationReport r;
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        const auto t = Context::triple(p.gamma);
        ReportCase c;
        c.id = "isomorphism gamma=" + label(p.gamma) + " N=" + std::to_string(p.level);
        c.inputs = {{"gamma", p.gamma}, {"level", p.level}, {"mu1", t.mu1.value()}, {"mu", t.mu.value()},
                    {"mu2", t.mu2.value()}};
        const double inv_d1 = 1.0 / p.k.d1_hat;
        c.measured = {{"d2_hat", p.k.d2_hat}, {"d1_hat", p.k.d1_hat}, {"inv_d1_hat", inv_d1}, {"members", p.members}};
        c.pass = std::isfinite(p.k.d2_hat) && p.k.d2_hat > 0.0 && std::isfinite(inv_d1) && inv_d1 > 0.0;
        if (i > 0 && points[i - 1].gamma == p.gamma && p.level > stable_from) {
            const auto& q = points[i - 1];
            const double ch2 = std::abs(p.k.d2_hat / q.k.d2_hat - 1.0);
            const double ch1 = std::abs(q.k.d1_hat / p.k.d1_hat - 1.0);
            c.measured["change_d2_hat"] = ch2;
            c.measured["change_inv_d1_hat"] = ch1;
            c.bounds["max_change"] = max_change;
            worst = std::max({worst, ch2, ch1});
            c.pass = c.pass && ch2 < max_change && ch1 < max_change;
        }
        r.cases.push_back(std::move(c));
    }
    r.constants = {{"max_relative_change", worst},
                   {"max_d2_hat", max_constant(r.cases, "measured", "d2_hat")},
                   {"max_inv_d1_hat", max_constant(r.cases, "measured", "inv_d1_hat")}};
    return r;
}

}  // namespace

std::span<const Suite> all_suites() { return kSuites; }

std::string_view to_string(Suite suite) {
    for (const auto& [s, name] : kSuiteNames) {
        if (s == suite) return name;
    }
    return "UNKNOWN";
}

Suite parse_suite(std::string_view name) {
    for (const auto& [s, n] : kSuiteNames) {
        if (n == name) return s;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "' (NORMS, PROJECTIONS, BASIS, NUCLEARITY, WEIGHTS, TRANSFORM, ISOMORPHISM)");
}

Json default_config() { return Json::parse(kDefaults); }

Json merge_config(const Json& overrides) {
    Json config = default_config();
    if (overrides.is_null()) return config;
    check_shape(config, overrides, "");
    config.merge_patch(overrides);
    // merge_patch drops keys set to null; keep the optional corpus slot present.
    if (!config.contains("corpus")) config["corpus"] = nullptr;
    if (!config["corpus"].is_null()) {
        Json probe = config["corpus"];
        probe["level_max"] = config["level_max"];
        corpus_spec_from_json(probe);
    }
    return config;
}

Json load_config(const std::filesystem::path& path) {
    try {
        return merge_config(Json::parse(read_text(path)));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void apply_override(Json& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw std::invalid_argument("override '" + std::string(assignment) + "' is not key=value");
    }
    const std::string key(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    Json value = Json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;
    Json patch = value;
    std::string rest = key;
    std::vector<std::string> parts;
    for (std::size_t start = 0;;) {
        const auto dot = rest.find('.', start);
        parts.push_back(rest.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) patch = Json{{*it, patch}};
    check_shape(default_config(), patch, "");
    config.merge_patch(patch);
}

VerificationReport run_suite(Suite suite, const Json& config) {
    const Context ctx(config);
    if (ctx.level_max < 4 || ctx.level_max > 14) {
        throw std::invalid_argument("level_max must lie in [4, 14]");
    }
    VerificationReport r;
    switch (suite) {
        case Suite::Norms: r = norms_suite(ctx); break;
        case Suite::Projections: r = projections_suite(ctx); break;
        case Suite::Basis: r = basis_suite(ctx); break;
        case Suite::Nuclearity: r = nuclearity_suite(ctx); break;
        case Suite::Weights: r = weights_suite(ctx); break;
        case Suite::Transform: r = transform_suite(ctx); break;
        case Suite::Isomorphism: r = isomorphism_suite(ctx); break;
    }
    r.suite = std::string(to_string(suite));
    r.parameters = {{"seed", ctx.seed}, {"level_max", ctx.level_max}, {"gammas", ctx.gammas},
                    {"corpus", config.at("corpus")}};
    const std::string section = [&] {
        std::string s(to_string(suite));
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        return s;
    }();
    r.parameters[section] = config.at(section);
    return r;
}

}  // namespace korenblum
