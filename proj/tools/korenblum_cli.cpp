#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "korenblum/analytic.hpp"
#include "korenblum/block_transform.hpp"
#include "korenblum/corpus.hpp"
#include "korenblum/json_format.hpp"
#include "korenblum/projections.hpp"
#include "korenblum/report.hpp"
#include "korenblum/series_io.hpp"
#include "korenblum/suites.hpp"

namespace kb = korenblum;

namespace {

void print(const kb::Json& doc) { std::cout << kb::format_json(doc); }

int cmd_norm(const std::string& file, double mu_value, bool full_range) {
    const auto f = kb::read_series(file);
    const kb::WeightExponent mu{mu_value};
    kb::NormSearchOptions options;
    options.localize_tail = !full_range;
    const auto result = kb::weighted_norm_search(f, mu, options);
    print({{"mu", mu_value},
           {"degree", f.degree()},
           {"norm", result.value},
           {"argmax_radius", result.argmax_radius},
           {"evaluations", result.evaluations}});
    return 0;
}

int cmd_project(const std::string& file, std::size_t n, const std::vector<double>& mus) {
    const auto f = kb::read_series(file);
    kb::Json doc = kb::series_to_json(kb::partial_sum(f, n).coeffs());
    if (!mus.empty()) {
        kb::Json norms = kb::Json::array();
        for (const double m : mus) {
            const kb::WeightExponent mu{m};
            norms.push_back({{"mu", m},
                             {"norm_f", kb::weighted_norm(f, mu)},
                             {"norm_projection", kb::weighted_norm(kb::partial_sum(f, n), mu)},
                             {"norm_tail", kb::weighted_norm(kb::tail(f, n), mu)}});
        }
        doc["n"] = n;
        doc["norms"] = std::move(norms);
    }
    print(doc);
    return 0;
}

int cmd_transform(const std::string& file) {
    print(kb::sequence_to_json(kb::forward_T(kb::read_series(file))));
    return 0;
}

int cmd_invtransform(const std::string& file) {
    const auto seq = kb::read_sequence(file);
    print(kb::series_to_json(kb::inverse_T(seq.x).coeffs()));
    return 0;
}

int cmd_corpus(const std::string& spec_file, const std::filesystem::path& out) {
    const auto spec = kb::corpus_spec_from_json(kb::Json::parse(kb::read_text(spec_file)));
    const auto members = kb::gen_corpus(spec);
    kb::Json manifest;
    manifest["spec"] = kb::corpus_spec_to_json(spec);
    manifest["members"] = kb::Json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "member_%03zu.json", i);
        kb::write_text(out / name, kb::format_json(kb::series_to_json(members[i].series.coeffs())));
        manifest["members"].push_back({{"file", name}, {"name", members[i].name}});
    }
    kb::write_text(out / "manifest.json", kb::format_json(manifest));
    std::cerr << "wrote " << members.size() << " series to " << out.string() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite_name, const std::string& config_file, const std::string& report_path,
               const std::string& format, const std::vector<std::string>& overrides, const CLI::App& app) {
    kb::Json config = config_file.empty() ? kb::default_config() : kb::load_config(config_file);
    if (app.count("--seed")) kb::apply_override(config, "seed=" + app.get_option("--seed")->as<std::string>());
    if (app.count("--level-max")) {
        kb::apply_override(config, "level_max=" + app.get_option("--level-max")->as<std::string>());
    }
    for (const auto& o : overrides) kb::apply_override(config, o);

    std::vector<kb::Suite> suites;
    if (suite_name == "ALL") {
        suites.assign(kb::all_suites().begin(), kb::all_suites().end());
    } else {
        suites.push_back(kb::parse_suite(suite_name));
    }
    const auto fmt = kb::parse_report_format(format);
    bool ok = true;
    for (const auto suite : suites) {
        const auto report = kb::run_suite(suite, config);
        std::filesystem::path path = report_path;
        if (suites.size() > 1) {
            path = path.parent_path() / (path.stem().string() + "_" + std::string(kb::to_string(suite)) +
                                         path.extension().string());
        }
        kb::emit_report(report, path, fmt);
        std::cerr << kb::to_string(suite) << ": " << report.pass_count() << " passed, " << report.fail_count()
                  << " failed -> " << path.string() << "\n";
        ok = ok && report.passed();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted sup-norms, Dirichlet projections and dyadic block sampling for analytic functions"};
    app.require_subcommand(1);

    std::string file;
    double mu = 1.0;
    bool full_range = false;
    auto* norm = app.add_subcommand("norm", "||f||_mu of a coefficient file");
    norm->add_option("file", file, "coefficient file (JSON or CSV)")->required();
    norm->add_option("--mu", mu, "weight exponent")->required();
    norm->add_flag("--full-range", full_range, "search all of [0,1) without tail localization");

    std::size_t n = 0;
    std::vector<double> mus;
    auto* project = app.add_subcommand("project", "partial sum P_n f");
    project->add_option("file", file, "coefficient file")->required();
    project->add_option("--n", n, "truncation degree")->required();
    project->add_option("--mu", mus, "also report ||f||, ||P_n f|| and ||f - P_n f|| for these exponents");

    auto* transform = app.add_subcommand("transform", "block samples Tf");
    transform->add_option("file", file, "coefficient file")->required();

    auto* invtransform = app.add_subcommand("invtransform", "coefficients from block samples");
    invtransform->add_option("file", file, "sequence file")->required();

    std::string spec_file;
    std::string out_dir;
    auto* corpus = app.add_subcommand("corpus", "write a generated corpus");
    corpus->add_option("--spec", spec_file, "corpus spec JSON")->required();
    corpus->add_option("--out", out_dir, "output directory")->required();

    std::string suite = "ALL";
    std::string config_file;
    std::string report_path;
    std::string format = "json";
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;
    std::size_t level_max = 0;
    auto* verify = app.add_subcommand("verify", "run property suites and write a report");
    verify->add_option("--suite", suite, "suite name or ALL");
    verify->add_option("--config", config_file, "JSON config (defaults used for missing keys)");
    verify->add_option("--report", report_path, "report path")->required();
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--seed", seed, "override config seed");
    verify->add_option("--level-max", level_max, "override config level_max");
    verify->add_option("--set", overrides, "override a config key, e.g. --set transform.trials=10");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*norm) return cmd_norm(file, mu, full_range);
        if (*project) return cmd_project(file, n, mus);
        if (*transform) return cmd_transform(file);
        if (*invtransform) return cmd_invtransform(file);
        if (*corpus) return cmd_corpus(spec_file, out_dir);
        if (*verify) return cmd_verify(suite, config_file, report_path, format, overrides, *verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
