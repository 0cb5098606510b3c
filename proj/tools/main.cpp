// wiso: weak-isometry toolkit for finite metric spaces.
//
// Subcommands wrap the library: validation, weak-isometry decisions,
// Gromov-Hausdorff and rescaled dissimilarities, curvature sets,
// Vietoris-Rips persistence, bottleneck/dtilde, the stability check, and a
// deterministic random-space generator. Every command emits a
// machine-readable JSON report on stdout.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 cap exceeded.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wiso/canonical.hpp"
#include "wiso/curvature.hpp"
#include "wiso/diagram.hpp"
#include "wiso/gromov_hausdorff.hpp"
#include "wiso/isometry.hpp"
#include "wiso/persistence.hpp"
#include "wiso/random_space.hpp"
#include "wiso/space_io.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
std::string g_command_line;

struct Settings {
    double tau = 0.0;
    int gh_cap = 7;
    int brute_cap = 8;
    int curv_cap = 8;
    std::size_t tuple_cap = 1000000;
    std::size_t simplex_cap = 1000000;
    int endpoint_cap = 12;
    double tol_exact = 1e-9;
    double tol_grid = 1e-3;
};

double env_or(const char* name, double fallback) {
    const char* v = std::getenv(name);
    return v ? std::atof(v) : fallback;
}

long env_or(const char* name, long fallback) {
    const char* v = std::getenv(name);
    return v ? std::atol(v) : fallback;
}

Settings settings_from_env() {
    Settings s;
    s.tau = env_or("WISO_TAU", s.tau);
    s.gh_cap = static_cast<int>(env_or("WISO_GH_CAP", static_cast<long>(s.gh_cap)));
    s.brute_cap = static_cast<int>(env_or("WISO_BRUTE_CAP", static_cast<long>(s.brute_cap)));
    s.curv_cap = static_cast<int>(env_or("WISO_CURV_CAP", static_cast<long>(s.curv_cap)));
    s.tuple_cap = static_cast<std::size_t>(env_or("WISO_TUPLE_CAP", static_cast<long>(s.tuple_cap)));
    s.simplex_cap =
        static_cast<std::size_t>(env_or("WISO_SIMPLEX_CAP", static_cast<long>(s.simplex_cap)));
    s.endpoint_cap =
        static_cast<int>(env_or("WISO_ENDPOINT_CAP", static_cast<long>(s.endpoint_cap)));
    s.tol_exact = env_or("WISO_TOL_EXACT", s.tol_exact);
    s.tol_grid = env_or("WISO_TOL_GRID", s.tol_grid);
    return s;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

json base_report(const std::string& command, const Settings& s) {
    json r;
    r["schema_version"] = 1;
    r["version"] = kVersion;
    r["command"] = command;
    r["command_line"] = g_command_line;
    r["inputs"] = json::array();
    r["tolerances"] = {{"exact", s.tol_exact}, {"grid", s.tol_grid}};
    r["conventions"] = {{"bars", "half-open"},
                        {"simplex_rule", "d <= eps"},
                        {"distortion_factor", 0.5}};
    r["caps"] = {{"gh", s.gh_cap},
                 {"brute", s.brute_cap},
                 {"curvature", s.curv_cap},
                 {"tuples", s.tuple_cap},
                 {"simplices", s.simplex_cap},
                 {"endpoints", s.endpoint_cap}};
    if (s.tau > 0.0) r["tau"] = s.tau;
    r["status"] = "ok";
    r["timestamp"] = timestamp_utc();
    return r;
}

void note_input(json& report, const std::string& path) {
    report["inputs"].push_back(
        {{"path", path}, {"digest", wiso::content_digest(wiso::read_file(path))}});
}

int emit(const json& report) {
    std::cout << report.dump(2) << "\n";
    return 0;
}

json bar_records(const wiso::Barcode& bc) {
    json arr = json::array();
    for (const auto& b : bc.bars) {
        std::string rec = std::to_string(b.dim) + " " + wiso::format_double(b.birth) + " " +
                          (b.infinite() ? "inf" : wiso::format_double(b.death));
        arr.push_back(rec);
    }
    return arr;
}

json value_or_inf(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

// Diagram input: a space file (persistence is computed at `dim`) or a barcode
// text file produced by `wiso persistence --raw`.
wiso::Diagram load_diagram(const std::string& path, int dim, int field, const Settings& s) {
    const std::string text = wiso::read_file(path);
    if (wiso::looks_like_barcode(text))
        return wiso::Diagram::from_barcode(wiso::parse_barcode_text(text), dim);
    const wiso::FiniteMetricSpace X = wiso::read_space_file(path);
    return wiso::Diagram::from_barcode(wiso::persistence(X, dim, field, s.simplex_cap), dim);
}

json witness_json(const wiso::FiniteMetricSpace& X, const wiso::FiniteMetricSpace& Y,
                  const wiso::WeakIsometryResult& wi) {
    json w;
    json phi = json::object();
    for (int i = 0; i < X.size(); ++i) phi[X.labels()[i]] = Y.labels()[(*wi.mapping)[i]];
    w["bijection"] = phi;
    json table = json::array();
    const auto& bps = wi.rescaling->breakpoints();
    for (std::size_t i = 1; i < bps.size(); ++i) table.push_back({bps[i].first, bps[i].second});
    w["psi_table"] = table;
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) {
        if (i) g_command_line += " ";
        g_command_line += argv[i];
    }

    CLI::App app{"weak-isometry toolkit for finite metric spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global tuning flags may follow the subcommand
    Settings s = settings_from_env();

    app.add_option("--tau", s.tau, "distance grouping tolerance (default exact equality)");
    app.add_option("--gh-cap", s.gh_cap, "max points per space for correspondence search");
    app.add_option("--brute-cap", s.brute_cap, "max points for the brute-force oracle");
    app.add_option("--curv-cap", s.curv_cap, "max points for reduced curvature sets");
    app.add_option("--tuple-cap", s.tuple_cap, "max tuples for full curvature sets");
    app.add_option("--simplex-cap", s.simplex_cap, "max simplices per filtration");
    app.add_option("--endpoint-cap", s.endpoint_cap, "max endpoints in the rescaling search");
    app.add_option("--tol-exact", s.tol_exact, "tolerance for exact paths");
    app.add_option("--tol-grid", s.tol_grid, "tolerance for grid-optimized paths");

    std::string file_a, file_b, out_path, method = "canonical", kind = "uniform";
    int opt_m = 2, opt_dim = 1, opt_max_dim = 1, opt_field = 2, opt_n = 4;
    std::uint64_t opt_seed = 0;
    bool reduced = false, canonicalize_first = false, raw = false, csv_out = false;
    bool distortion_convention = false, repair = false;

    auto* c_validate = app.add_subcommand("validate", "check the metric axioms of a space file");
    c_validate->add_option("file", file_a)->required();

    auto* c_compare = app.add_subcommand("compare", "decide weak isometry of two spaces");
    c_compare->add_option("fileX", file_a)->required();
    c_compare->add_option("fileY", file_b)->required();
    c_compare->add_option("--method", method, "canonical | brute | curvature")
        ->check(CLI::IsMember({"canonical", "brute", "curvature"}));

    auto* c_gh = app.add_subcommand("gh", "exact Gromov-Hausdorff distance");
    c_gh->add_option("fileX", file_a)->required();
    c_gh->add_option("fileY", file_b)->required();

    auto* c_dhat = app.add_subcommand("dhat", "rescaling-invariant dissimilarity");
    c_dhat->add_option("fileX", file_a)->required();
    c_dhat->add_option("fileY", file_b)->required();
    c_dhat->add_flag("--distortion-convention", distortion_convention,
                     "report distortion-scale values (twice the GH-scale ones)");

    auto* c_pers = app.add_subcommand("persistence", "Vietoris-Rips persistence barcode");
    c_pers->add_option("file", file_a)->required();
    c_pers->add_option("--max-dim", opt_max_dim, "top homology dimension (default 1)");
    c_pers->add_option("--field", opt_field, "prime field characteristic (default 2)");
    c_pers->add_flag("--canonicalize", canonicalize_first, "canonicalize the space first");
    c_pers->add_flag("--raw", raw, "print plain barcode records instead of a report");

    auto* c_curv = app.add_subcommand("curvature", "curvature set canonical forms");
    c_curv->add_option("file", file_a)->required();
    c_curv->add_option("--m", opt_m, "sample size m (default 2)");
    c_curv->add_flag("--reduced", reduced, "distinct-points variant");

    auto* c_bottle = app.add_subcommand("bottleneck", "bottleneck distance between diagrams");
    c_bottle->add_option("fileA", file_a)->required();
    c_bottle->add_option("fileB", file_b)->required();
    c_bottle->add_option("--dim", opt_dim, "homology dimension (default 1)");
    c_bottle->add_option("--field", opt_field, "prime field characteristic");

    auto* c_dtilde = app.add_subcommand("dtilde", "rescaling-invariant module dissimilarity");
    c_dtilde->add_option("fileA", file_a)->required();
    c_dtilde->add_option("fileB", file_b)->required();
    c_dtilde->add_option("--dim", opt_dim, "homology dimension (default 1)");
    c_dtilde->add_option("--field", opt_field, "prime field characteristic");

    double stability_tol = 1e-6;
    auto* c_stab = app.add_subcommand("check-stability", "verify dtilde_k <= 2 dhat");
    c_stab->add_option("fileX", file_a)->required();
    c_stab->add_option("fileY", file_b)->required();
    c_stab->add_option("--max-dim", opt_max_dim, "top homology dimension (default 1)");
    c_stab->add_option("--field", opt_field, "prime field characteristic");
    c_stab->add_option("--stability-tol", stability_tol, "slack for the inequality (default 1e-6)");

    auto* c_gen = app.add_subcommand("gen-random", "deterministic random metric space");
    c_gen->add_option("--n", opt_n, "point count")->required();
    c_gen->add_option("--seed", opt_seed, "RNG seed (default 0)");
    c_gen->add_option("--kind", kind, "uniform | integer | perturbed")
        ->check(CLI::IsMember({"uniform", "integer", "perturbed"}));
    c_gen->add_option("--out", out_path, "output path")->required();
    c_gen->add_flag("--csv", csv_out, "write CSV instead of JSON");
    c_gen->add_flag("--repair", repair, "shortest-path completion instead of resampling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) {
            json r = base_report("validate", s);
            try {
                note_input(r, file_a);
                const wiso::FiniteMetricSpace X = wiso::read_space_file(file_a);
                r["result"] = {{"valid", true},
                               {"points", X.size()},
                               {"distance_set_size", wiso::distance_set(X, s.tau).size()}};
            } catch (const wiso::Error& e) {
                r["status"] = "invalid";
                r["result"] = {{"valid", false},
                               {"error", wiso::errc_name(e.code())},
                               {"detail", e.what()},
                               {"witness", e.indices()}};
                emit(r);
                return 2;
            }
            return emit(r);
        }

        if (c_compare->parsed()) {
            json r = base_report("compare", s);
            note_input(r, file_a);
            note_input(r, file_b);
            const auto X = wiso::read_space_file(file_a);
            const auto Y = wiso::read_space_file(file_b);
            r["method"] = method;

            json verdicts = json::object();
            const wiso::WeakIsometryResult wi = wiso::is_weakly_isometric(X, Y, s.tau);
            auto run = [&](const std::string& name, auto&& fn) {
                try {
                    verdicts[name] = static_cast<bool>(fn());
                } catch (const wiso::Error& e) {
                    if (e.code() != wiso::Errc::cap_exceeded || name == method) throw;
                    verdicts[name] = "skipped";
                }
            };
            run("canonical", [&] { return wi.equivalent; });
            run("brute", [&] { return wiso::brute_force_weak_isometry(X, Y, s.brute_cap); });
            run("curvature", [&] {
                return wiso::is_weakly_isometric_via_curvature(X, Y, s.tau, s.curv_cap);
            });

            bool agree = true;
            for (const auto& [k, v] : verdicts.items())
                if (v.is_boolean() && v.get<bool>() != wi.equivalent) agree = false;
            r["result"] = {{"weakly_isometric", verdicts[method]},
                           {"verdicts", verdicts},
                           {"agreement", agree}};
            if (wi.equivalent && wi.mapping) r["result"]["witness"] = witness_json(X, Y, wi);
            return emit(r);
        }

        if (c_gh->parsed()) {
            json r = base_report("gh", s);
            note_input(r, file_a);
            note_input(r, file_b);
            const auto X = wiso::read_space_file(file_a);
            const auto Y = wiso::read_space_file(file_b);
            const wiso::GhResult res = wiso::gh_distance(X, Y, s.gh_cap);
            json pairs = json::array();
            for (const auto& [i, j] : res.correspondence.pairs)
                pairs.push_back({X.labels()[i], Y.labels()[j]});
            r["result"] = {{"distance", res.distance},
                           {"distortion", res.distance * 2.0},
                           {"correspondence", pairs}};
            return emit(r);
        }

        if (c_dhat->parsed()) {
            json r = base_report("dhat", s);
            note_input(r, file_a);
            note_input(r, file_b);
            const auto X = wiso::read_space_file(file_a);
            const auto Y = wiso::read_space_file(file_b);
            const double xy = wiso::min_rescaled_gh(X, Y, s.gh_cap);
            const double yx = wiso::min_rescaled_gh(Y, X, s.gh_cap);
            const double v = xy + yx;
            const double factor = distortion_convention ? 2.0 : 1.0;
            r["conventions"]["distortion_factor"] = distortion_convention ? 1.0 : 0.5;
            r["result"] = {{"value", factor * v},
                           {"one_sided", {factor * xy, factor * yx}},
                           {"gh_convention_value", v},
                           {"distortion_convention_value", 2.0 * v}};
            return emit(r);
        }

        if (c_pers->parsed()) {
            json r = base_report("persistence", s);
            note_input(r, file_a);
            wiso::FiniteMetricSpace X = wiso::read_space_file(file_a);
            if (canonicalize_first) X = wiso::canonicalize(X, s.tau).space;
            const wiso::Barcode bc = wiso::persistence(X, opt_max_dim, opt_field, s.simplex_cap);
            if (raw) {
                std::cout << wiso::barcode_to_text(bc);
                return 0;
            }
            r["conventions"]["field_char"] = opt_field;
            r["result"] = {{"max_dim", opt_max_dim},
                           {"canonicalized", canonicalize_first},
                           {"bars", bar_records(bc)}};
            return emit(r);
        }

        if (c_curv->parsed()) {
            json r = base_report("curvature", s);
            note_input(r, file_a);
            const auto X = wiso::read_space_file(file_a);
            const wiso::CurvatureSet K = reduced
                                             ? wiso::reduced_curvature_set(X, opt_m, s.curv_cap)
                                             : wiso::curvature_set(X, opt_m, s.tuple_cap);
            json mats = json::array();
            for (const auto& M : K.canonical_forms(s.curv_cap)) mats.push_back(M.entries);
            r["result"] = {{"m", opt_m},
                           {"reduced", reduced},
                           {"count", mats.size()},
                           {"canonical_forms", mats}};
            return emit(r);
        }

        if (c_bottle->parsed() || c_dtilde->parsed()) {
            const bool is_dt = c_dtilde->parsed();
            json r = base_report(is_dt ? "dtilde" : "bottleneck", s);
            note_input(r, file_a);
            note_input(r, file_b);
            const wiso::Diagram A = load_diagram(file_a, opt_dim, opt_field, s);
            const wiso::Diagram B = load_diagram(file_b, opt_dim, opt_field, s);
            r["conventions"]["field_char"] = opt_field;
            const double v =
                is_dt ? wiso::dtilde(A, B, s.endpoint_cap) : wiso::bottleneck_distance(A, B);
            r["result"] = {{"dim", opt_dim}, {"value", value_or_inf(v)}};
            return emit(r);
        }

        if (c_stab->parsed()) {
            json r = base_report("check-stability", s);
            note_input(r, file_a);
            note_input(r, file_b);
            const auto X = wiso::read_space_file(file_a);
            const auto Y = wiso::read_space_file(file_b);
            const wiso::StabilityReport rep =
                wiso::stability_check(X, Y, opt_max_dim, stability_tol, s.gh_cap, opt_field);
            json dims = json::array();
            for (const auto& d : rep.dims)
                dims.push_back({{"k", d.k}, {"dtilde", d.dtilde}, {"within_bound", d.within_bound}});
            r["conventions"]["field_char"] = opt_field;
            r["result"] = {{"dhat", rep.dhat},
                           {"bound", 2.0 * rep.dhat + rep.tolerance},
                           {"dims", dims},
                           {"all_within_bound", rep.all_within_bound},
                           {"binding_dim", rep.binding_dim}};
            return emit(r);
        }

        if (c_gen->parsed()) {
            json r = base_report("gen-random", s);
            const wiso::SpaceKind k = kind == "integer"     ? wiso::SpaceKind::integer
                                      : kind == "perturbed" ? wiso::SpaceKind::perturbed
                                                            : wiso::SpaceKind::uniform;
            bool repaired = false;
            const auto X = wiso::random_space(opt_n, opt_seed, k, repair, &repaired);
            wiso::write_space_file(X, out_path, csv_out);
            r["result"] = {{"path", out_path},
                           {"n", opt_n},
                           {"seed", opt_seed},
                           {"kind", kind},
                           {"format", csv_out ? "csv" : "json"},
                           {"repaired", repaired},
                           {"digest", wiso::content_digest(wiso::read_file(out_path))}};
            return emit(r);
        }
    } catch (const wiso::Error& e) {
        json r;
        r["status"] = "error";
        r["error"] = wiso::errc_name(e.code());
        r["detail"] = e.what();
        r["witness"] = e.indices();
        std::cout << r.dump(2) << "\n";
        return e.code() == wiso::Errc::cap_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
