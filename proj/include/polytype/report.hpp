#pragma once

// Report assembly shared by the CLI and the verification suites: family
// and presentation reports (text + JSON), the grid verifier, and the
// conjecture sweep. JSON is the machine format; integers that do not fit
// the 53-bit safe range are emitted as decimal strings.

#include "polytype/canonical_type.hpp"
#include "polytype/cone_geometry.hpp"
#include "polytype/hilbert_ehrhart.hpp"
#include "polytype/presentation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace polytype {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

inline Json json_int(const Int& v) {
    static const Int safe = Int(1) << 53;
    if (v >= -safe && v <= safe) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json json_int_list(const std::vector<Int>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(json_int(v));
    return out;
}

inline Json json_vector(const ExponentVector& x) {
    return Json(std::vector<int>(x.begin(), x.end()));
}

struct OracleCheck {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string detail;
};

inline Json to_json(const std::vector<OracleCheck>& checks) {
    Json out = Json::array();
    for (const auto& c : checks)
        out.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return out;
}

inline bool any_failed(const std::vector<OracleCheck>& checks) {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

struct ReportOptions {
    bool verify = false;   // run the per-instance oracle checks
    bool full = false;     // list every canonical generator
    int max_t = 3;         // Hilbert-vs-Ehrhart range in verify mode
    int degree_cap = 0;    // 0 = instance default
};

namespace detail {

inline Json generators_json(const CanonicalGenerators& gens, bool full) {
    Json out;
    out["count"] = static_cast<std::int64_t>(gens.generators.size());
    out["min_degree"] = gens.min_degree();
    out["max_degree"] = gens.max_degree();
    const std::size_t limit = (full || gens.generators.size() <= 1000)
                                  ? gens.generators.size()
                                  : std::size_t{20};
    Json sample = Json::array();
    for (std::size_t k = 0; k < limit; ++k)
        sample.push_back(json_vector(gens.generators[k]));
    out["generators"] = std::move(sample);
    out["truncated"] = limit < gens.generators.size();
    return out;
}

inline std::vector<OracleCheck> family_oracle_checks(const FamilyParams& p,
                                                     const ReportOptions& opt) {
    std::vector<OracleCheck> checks;
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
    };

    const auto pres = build_family_presentation(p);
    const auto base = enumerate_base(pres);
    const auto cone = build_cone(p);

    add("base-characterization", base == family_base_by_characterization(p));
    add("exchange-axiom", check_exchange_property(base));
    {
        auto rep = verify_irreducible_representation(base, cone);
        std::string detail;
        for (const auto& f : rep.failures) detail += (detail.empty() ? "" : "; ") + f;
        add("irreducible-representation", rep.ok, detail);
    }
    add("extremal-ray-count",
        cone.rays.size() == static_cast<std::size_t>(p.i + 1) * (p.n - p.i));
    add("det-certificate", [&] {
        det_certificate(p);  // throws on mismatch
        return true;
    }());
    {
        const auto closed = enumerate_M(p);
        const auto brute = canonical_generators_bruteforce(p, opt.degree_cap);
        add("type-bruteforce",
            closed.generators == brute.generators &&
                Int(static_cast<long long>(closed.generators.size())) == type_formula(p));
        add("a-invariant-degree", -a_invariant(p) == brute.min_degree());
    }
    {
        bool ok = true;
        std::string detail;
        for (int t = 0; t <= opt.max_t && ok; ++t) {
            if (hilbert_function(p, t) != ehrhart_count(p, t)) {
                ok = false;
                detail = "mismatch at t=" + std::to_string(t);
            }
        }
        add("hilbert-ehrhart", ok, detail);
    }
    return checks;
}

}  // namespace detail

inline Json family_report(const FamilyParams& p, const ReportOptions& opt = {}) {
    p.validate();
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["mode"] = "family";
    out["params"] = {{"n", p.n},
                     {"i", p.i},
                     {"j", p.j},
                     {"case", p.family_case() == FamilyCase::LowSum ? "LowSum" : "HighSum"},
                     {"r", p.r()}};

    const auto cone = build_cone(p);
    Json cone_json;
    cone_json["dimension"] = cone.dimension;
    Json normals = Json::array();
    for (const auto& a : cone.normals)
        normals.push_back(Json(std::vector<int>(a.coords.begin(), a.coords.end())));
    Json rays = Json::array();
    for (const auto& ray : cone.rays) rays.push_back(json_vector(ray));
    cone_json["normals"] = std::move(normals);
    cone_json["rays"] = std::move(rays);
    out["cone"] = std::move(cone_json);

    out["type"] = json_int(type_formula(p));
    out["a_invariant"] = a_invariant(p);
    out["gorenstein"] = is_gorenstein(p);

    const int top = p.n - p.r();
    std::vector<Int> h_values;
    for (int t = 0; t <= top; ++t) h_values.push_back(hilbert_function(p, t));
    const auto numerator = numerator_from_values(h_values, p.n);
    out["h_values"] = json_int_list(h_values);
    out["numerator"] = json_int_list(numerator);
    out["hilbert_series"] = hilbert_series_render(numerator, p.n);

    out["canonical"] = detail::generators_json(enumerate_M(p), opt.full);

    if (opt.verify)
        out["oracle_checks"] = to_json(detail::family_oracle_checks(p, opt));
    else
        out["oracle_checks"] = Json::array();
    return out;
}

inline Json presentation_report(const Presentation& pres, const ReportOptions& opt = {}) {
    pres.validate();
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["mode"] = "presentation";
    Json sets = Json::array();
    for (auto mask : pres.sets) {
        std::vector<int> elems;
        for (int e = 0; e < pres.n; ++e)
            if (mask >> e & 1) elems.push_back(e + 1);
        sets.push_back(Json(elems));
    }
    out["presentation"] = {{"n", pres.n}, {"sets", std::move(sets)}};

    PolymatroidGeometry geometry(pres);
    out["base_cardinality"] = static_cast<std::int64_t>(geometry.base().size());
    out["lattice_rank"] = static_cast<std::int64_t>(geometry.lattice().basis.size());
    out["exchange_axiom"] = check_exchange_property(geometry.base());

    const auto report = conjecture_check(pres, opt.degree_cap);
    Json cj;
    cj["status"] = to_string(report.status);
    cj["detail"] = report.detail;
    if (report.status != ConjectureStatus::Skipped) {
        cj["r"] = report.r;
        cj["type"] = json_int(report.type_value);
        cj["predicted"] = json_int(report.predicted);
        cj["numerator"] = json_int_list(report.numerator);
        out["a_invariant"] = -report.r;
        out["type"] = json_int(report.type_value);
        out["hilbert_series"] = hilbert_series_render(report.numerator, pres.n);
    }
    out["conjecture"] = std::move(cj);
    out["oracle_checks"] = Json::array();
    return out;
}

inline int report_exit_code(const Json& report) {
    for (const auto& check : report.at("oracle_checks"))
        if (check.at("status") == "fail") return 1;
    return 0;
}

inline std::string render_report_text(const Json& report) {
    std::ostringstream out;
    if (report.at("mode") == "family") {
        const auto& p = report.at("params");
        out << "family (n=" << p.at("n") << ", i=" << p.at("i") << ", j=" << p.at("j")
            << ")  case=" << p.at("case").get<std::string>() << "  r=" << p.at("r")
            << "\n";
        out << "cone: dimension " << report.at("cone").at("dimension") << ", "
            << report.at("cone").at("normals").size() << " facet normals, "
            << report.at("cone").at("rays").size() << " extremal rays\n";
    } else {
        const auto& pres = report.at("presentation");
        out << "presentation (n=" << pres.at("n") << "):";
        for (const auto& s : pres.at("sets")) {
            out << " {";
            bool first = true;
            for (const auto& e : s) {
                if (!first) out << ",";
                out << e;
                first = false;
            }
            out << "}";
        }
        out << "\n";
        out << "base cardinality: " << report.at("base_cardinality")
            << ", lattice rank: " << report.at("lattice_rank") << "\n";
        out << "conjecture: " << report.at("conjecture").at("status").get<std::string>();
        const auto detail = report.at("conjecture").at("detail").get<std::string>();
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
    }
    auto dump_plain = [](const Json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (report.contains("type")) out << "type: " << dump_plain(report.at("type")) << "\n";
    if (report.contains("a_invariant"))
        out << "a-invariant: " << report.at("a_invariant") << "\n";
    if (report.contains("gorenstein"))
        out << "gorenstein: " << (report.at("gorenstein").get<bool>() ? "yes" : "no")
            << "\n";
    if (report.contains("hilbert_series"))
        out << "hilbert series: " << report.at("hilbert_series").get<std::string>()
            << "\n";
    if (report.contains("numerator")) {
        out << "numerator:";
        for (const auto& c : report.at("numerator")) out << " " << dump_plain(c);
        out << "\n";
    }
    if (report.contains("canonical")) {
        const auto& canonical = report.at("canonical");
        out << "canonical generators: " << canonical.at("count") << " (degrees "
            << canonical.at("min_degree") << ".." << canonical.at("max_degree") << ")";
        if (canonical.at("truncated").get<bool>()) out << " [sample of 20]";
        out << "\n";
        for (const auto& g : canonical.at("generators")) {
            out << "  (";
            bool first = true;
            for (const auto& c : g) {
                if (!first) out << ",";
                out << c;
                first = false;
            }
            out << ")\n";
        }
    }
    for (const auto& check : report.at("oracle_checks")) {
        out << "check " << check.at("name").get<std::string>() << ": "
            << check.at("status").get<std::string>();
        const auto detail = check.at("detail").get<std::string>();
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Grid verifier
// ---------------------------------------------------------------------------

struct VerifyOptions {
    int max_n = 6;
    int max_t = 3;
    std::string only;  // empty = all checks
};

inline const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        "base",   "exchange",   "cone", "det",  "type",
        "ainv",   "gorenstein", "hilbert", "delta"};
    return names;
}

/// Runs every formula-vs-oracle equivalence over the (n, i, j) grid.
/// Returns 0 on success, 1 with the first counterexample printed.
inline int run_verify(const VerifyOptions& opt, std::ostream& out) {
    if (opt.max_n < 3) throw std::invalid_argument("verify: --max-n >= 3 required");
    if (!opt.only.empty()) {
        bool known = false;
        for (const auto& name : verify_check_names()) known |= name == opt.only;
        if (!known) throw std::invalid_argument("verify: unknown check " + opt.only);
    }
    auto enabled = [&](const char* name) { return opt.only.empty() || opt.only == name; };

    long long instances = 0, checks_run = 0;
    for (int n = 3; n <= opt.max_n; ++n) {
        for (int i = 1; i <= n - 2; ++i) {
            for (int j = 1; j <= n - 1; ++j) {
                const FamilyParams p{n, i, j};
                ++instances;
                auto fail = [&](const std::string& what) {
                    out << "FAIL (n=" << n << ", i=" << i << ", j=" << j << "): " << what
                        << "\n";
                    return 1;
                };

                const auto pres = build_family_presentation(p);
                const auto base = enumerate_base(pres);
                const auto cone = build_cone(p);

                if (enabled("base")) {
                    ++checks_run;
                    if (base != family_base_by_characterization(p))
                        return fail("base enumeration disagrees with characterization");
                    if (hilbert_function(p, 1) != Int(static_cast<long long>(base.size())))
                        return fail("h(1) != |base|");
                }
                if (enabled("exchange")) {
                    ++checks_run;
                    if (!check_exchange_property(base))
                        return fail("exchange axiom violated");
                }
                if (enabled("cone")) {
                    ++checks_run;
                    const auto rep = verify_irreducible_representation(base, cone);
                    if (!rep.ok) return fail("irreducibility: " + rep.failures.front());
                    if (cone.rays.size() != static_cast<std::size_t>(i + 1) * (n - i))
                        return fail("extremal ray count != (i+1)(n-i)");
                    for (const auto& ray : cone.rays)
                        if (!base.count(ray)) return fail("extremal ray not in base");
                }
                if (enabled("det")) {
                    ++checks_run;
                    det_certificate(p);  // throws on mismatch
                }
                CanonicalGenerators brute;
                const bool need_brute = enabled("type") || enabled("ainv");
                if (need_brute) brute = canonical_generators_bruteforce(p);
                if (enabled("type")) {
                    ++checks_run;
                    const auto closed = enumerate_M(p);
                    if (closed.generators != brute.generators)
                        return fail("brute-force canonical generators != M");
                    if (Int(static_cast<long long>(closed.generators.size())) !=
                        type_formula(p))
                        return fail("|M| != type formula");
                }
                if (enabled("ainv")) {
                    ++checks_run;
                    if (-a_invariant(p) != brute.min_degree())
                        return fail("a-invariant != -min generator degree");
                    const auto numerator = h_vector(p);
                    if (numerator.front() != 1 || numerator.back() <= 0)
                        return fail("numerator endpoints wrong");
                    if (static_cast<int>(numerator.size()) != n - p.r() + 1)
                        return fail("numerator degree != n - r");
                }
                if (enabled("gorenstein")) {
                    ++checks_run;
                    if ((type_formula(p) == 1) != (j == n - i - 1))
                        return fail("Gorenstein characterization failed");
                }
                if (enabled("hilbert")) {
                    ++checks_run;
                    for (int t = 0; t <= opt.max_t; ++t)
                        if (hilbert_function(p, t) != ehrhart_count(p, t))
                            return fail("hilbert != ehrhart at t=" + std::to_string(t));
                }
                if (enabled("delta")) {
                    ++checks_run;
                    // Iterated first differences must reproduce the closed form.
                    std::vector<Int> values;
                    for (int t = 0; t <= n - p.r(); ++t)
                        values.push_back(hilbert_function(p, t));
                    std::vector<Int> diff = values;
                    for (int k = 0; k < n; ++k) {
                        std::vector<Int> next(diff.size());
                        for (std::size_t idx = 0; idx < diff.size(); ++idx)
                            next[idx] = diff[idx] - (idx == 0 ? Int(0) : diff[idx - 1]);
                        diff = std::move(next);
                    }
                    if (diff != numerator_from_values(values, n))
                        return fail("delta recursion disagrees with closed-form numerator");
                }
            }
        }
    }
    out << "verify: " << checks_run << " checks over " << instances
        << " instances, all passed\n";
    return 0;
}

// ---------------------------------------------------------------------------
// Conjecture sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
    int max_n = 6;
    int random_count = 0;          // per n in 4..max_n
    std::uint64_t seed = 0;
    int degree_cap = 0;
    bool json = false;
};

inline Json sweep_rows(const SweepOptions& opt) {
    if (opt.max_n < 3) throw std::invalid_argument("sweep: --max-n >= 3 required");
    Json rows = Json::array();

    for (int n = 3; n <= opt.max_n; ++n) {
        for (int i = 1; i <= n - 2; ++i) {
            for (int j = 1; j <= n - 1; ++j) {
                const FamilyParams p{n, i, j};
                const auto report = conjecture_check(p);
                Json row = {{"instance", "family(n=" + std::to_string(n) +
                                             ",i=" + std::to_string(i) +
                                             ",j=" + std::to_string(j) + ")"},
                            {"r", report.r},
                            {"type", json_int(report.type_value)},
                            {"predicted", json_int(report.predicted)},
                            {"status", to_string(report.status)},
                            {"detail", report.detail}};
                if (report.status == ConjectureStatus::Violated)
                    row["counterexample"] =
                        format_presentation(build_family_presentation(p));
                rows.push_back(std::move(row));
            }
        }
    }

    if (opt.random_count > 0) {
        SplitLcg rng(opt.seed);
        for (int n = 4; n <= opt.max_n; ++n) {
            for (int k = 0; k < opt.random_count; ++k) {
                const auto pres = random_presentation(n, rng);
                const auto report = conjecture_check(pres, opt.degree_cap);
                Json row = {{"instance", "random(n=" + std::to_string(n) +
                                             ",index=" + std::to_string(k) + ")"},
                            {"status", to_string(report.status)},
                            {"detail", report.detail}};
                if (report.status != ConjectureStatus::Skipped) {
                    row["r"] = report.r;
                    row["type"] = json_int(report.type_value);
                    row["predicted"] = json_int(report.predicted);
                }
                if (report.status == ConjectureStatus::Violated)
                    row["counterexample"] = format_presentation(pres);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

/// Exit code is 0 even when a counterexample shows up: violations are
/// findings to be reported, not runtime failures.
inline int run_sweep(const SweepOptions& opt, std::ostream& out) {
    const Json rows = sweep_rows(opt);
    if (opt.json) {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["mode"] = "sweep";
        doc["seed"] = opt.seed;
        doc["rows"] = rows;
        out << doc.dump(2) << "\n";
        return 0;
    }
    long long holds = 0, skipped = 0, violated = 0;
    for (const auto& row : rows) {
        out << row.at("instance").get<std::string>() << ": "
            << row.at("status").get<std::string>();
        if (row.contains("r"))
            out << "  r=" << row.at("r") << " type="
                << (row.at("type").is_string() ? row.at("type").get<std::string>()
                                               : row.at("type").dump())
                << " predicted="
                << (row.at("predicted").is_string()
                        ? row.at("predicted").get<std::string>()
                        : row.at("predicted").dump());
        const auto detail = row.at("detail").get<std::string>();
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        if (row.contains("counterexample"))
            out << "counterexample presentation:\n" << row.at("counterexample").get<std::string>();
        const auto status = row.at("status").get<std::string>();
        if (status == "holds") ++holds;
        else if (status == "skipped") ++skipped;
        else ++violated;
    }
    out << "sweep: " << holds << " hold, " << skipped << " skipped, " << violated
        << " violated\n";
    return 0;
}

}  // namespace polytype
