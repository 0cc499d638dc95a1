// Command-line front end: reports, grid verification, and the conjecture
// sweep for transversal polymatroid base rings.

#include "polytype/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace polytype;

struct CommonArgs {
    int n = 0, i = 0, j = 0;
    std::string presentation_path;

    bool has_family() const { return n != 0 || i != 0 || j != 0; }

    FamilyParams family() const {
        FamilyParams p{n, i, j};
        p.validate();
        return p;
    }

    Presentation load_presentation() const {
        std::ifstream in(presentation_path);
        if (!in) throw std::invalid_argument("cannot open " + presentation_path);
        auto pres = parse_presentation(in);
        pres.validate();
        return pres;
    }
};

void add_instance_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--n", args.n, "family dimension n");
    cmd->add_option("--i", args.i, "family prefix length i");
    cmd->add_option("--j", args.j, "family restricted-set count j");
    cmd->add_option("--presentation", args.presentation_path,
                    "presentation file (first line n, then n lines of elements)");
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << report.dump(2) << "\n";
    else
        out << render_report_text(report);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact type / a-invariant / Hilbert series calculator for "
                 "transversal polymatroid base rings"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CommonArgs args;
    ReportOptions report_opt;
    auto* report_cmd = app.add_subcommand("report", "full report for one instance");
    add_instance_flags(report_cmd, args);
    report_cmd->add_flag("--verify", report_opt.verify, "run per-instance oracle checks");
    report_cmd->add_flag("--full", report_opt.full, "list every canonical generator");
    report_cmd->add_option("--max-t", report_opt.max_t, "Hilbert check range");
    report_cmd->add_option("--degree-cap", report_opt.degree_cap,
                           "brute-force degree cap override");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "formula-vs-oracle grid checks");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "grid bound (default 6)");
    verify_cmd->add_option("--max-t", verify_opt.max_t, "Hilbert check range");
    verify_cmd->add_option("--only", verify_opt.only, "run a single named check");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "type-vs-numerator conjecture sweep");
    sweep_cmd->add_option("--max-n", sweep_opt.max_n, "grid bound (default 6)");
    sweep_cmd->add_option("--random", sweep_opt.random_count,
                          "random presentations per n in 4..max-n");
    sweep_cmd->add_option("--seed", sweep_opt.seed, "random seed");
    sweep_cmd->add_option("--degree-cap", sweep_opt.degree_cap,
                          "brute-force degree cap override");

    auto* rays_cmd = app.add_subcommand("rays", "facet normals and extremal rays");
    add_instance_flags(rays_cmd, args);

    bool canonical_full = false;
    int canonical_cap = 0;
    auto* canonical_cmd = app.add_subcommand("canonical", "canonical module generators");
    add_instance_flags(canonical_cmd, args);
    canonical_cmd->add_flag("--full", canonical_full, "list every generator");
    canonical_cmd->add_option("--degree-cap", canonical_cap,
                              "brute-force degree cap override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*report_cmd) {
            Json report = args.presentation_path.empty()
                              ? family_report(args.family(), report_opt)
                              : presentation_report(args.load_presentation(), report_opt);
            emit(report, format, std::cout);
            return report_exit_code(report);
        }
        if (*verify_cmd) return run_verify(verify_opt, std::cout);
        if (*sweep_cmd) {
            sweep_opt.json = format == "json";
            return run_sweep(sweep_opt, std::cout);
        }
        if (*rays_cmd) {
            const auto p = args.family();
            Json report = family_report(p);
            Json slim;
            slim["schema_version"] = kSchemaVersion;
            slim["mode"] = "rays";
            slim["params"] = report.at("params");
            slim["cone"] = report.at("cone");
            if (format == "json") {
                std::cout << slim.dump(2) << "\n";
            } else {
                std::cout << "dimension: " << slim.at("cone").at("dimension") << "\n";
                std::cout << "normals:\n";
                for (const auto& a : slim.at("cone").at("normals"))
                    std::cout << "  " << a.dump() << "\n";
                std::cout << "extremal rays:\n";
                for (const auto& ray : slim.at("cone").at("rays"))
                    std::cout << "  " << ray.dump() << "\n";
            }
            return 0;
        }
        if (*canonical_cmd) {
            CanonicalGenerators gens;
            Json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["mode"] = "canonical";
            if (args.presentation_path.empty()) {
                const auto p = args.family();
                gens = enumerate_M(p);
                doc["params"] = {{"n", p.n}, {"i", p.i}, {"j", p.j}};
            } else {
                const auto pres = args.load_presentation();
                PolymatroidGeometry geometry(pres);
                if (!geometry.full_dimensional())
                    throw std::invalid_argument("presentation cone has dimension < n");
                const int cap = canonical_cap > 0 ? canonical_cap : pres.n + 1;
                gens = canonical_generators_search(
                    geometry.base(), pres.n, cap,
                    [&](const ExponentVector& x) { return geometry.in_cone_interior(x); });
            }
            doc["canonical"] = polytype::detail::generators_json(gens, canonical_full);
            if (format == "json") {
                std::cout << doc.dump(2) << "\n";
            } else {
                const auto& canonical = doc.at("canonical");
                std::cout << "generators: " << canonical.at("count") << " (degrees "
                          << canonical.at("min_degree") << ".."
                          << canonical.at("max_degree") << ")\n";
                for (const auto& g : canonical.at("generators"))
                    std::cout << "  " << g.dump() << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SaturationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
