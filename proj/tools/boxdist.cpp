// boxdist: bounds, searches, witness checks and constructions for
// few-distance sets in boxes. Exit codes: 0 success, 1 usage or I/O error,
// 2 mathematical inconsistency (a theorem-violating result).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "boxdist/bounds.hpp"
#include "boxdist/constructions.hpp"
#include "boxdist/json_io.hpp"
#include "boxdist/polynomial.hpp"
#include "boxdist/search.hpp"
#include "boxdist/version.hpp"

namespace {

using boxdist::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
    if (!out) throw std::invalid_argument("failed writing output file: " + path);
}

void emit(const std::string& out_path, const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

Json wrap(const boxdist::io::RunManifest& manifest, Json result) {
    return Json{{"manifest", boxdist::io::to_json(manifest)}, {"result", std::move(result)}};
}

struct Range {
    unsigned lo = 0, hi = 0;
};

// "a" or "a:b", inclusive
Range parse_range(const std::string& text) {
    Range r;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(text));
        } else {
            r.lo = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
            r.hi = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "' (expected N or LO:HI)");
    }
    if (r.hi < r.lo) throw std::invalid_argument("bad range '" + text + "' (hi < lo)");
    return r;
}

struct SearchFlags {
    std::string mode = "exact";
    std::string palette_mode = "dynamic";
    std::uint64_t node_budget = boxdist::SearchConfig{}.node_budget;
    double time_budget = 0;
    unsigned workers = 1;
    bool no_symmetry = false;

    boxdist::SearchConfig to_config() const {
        boxdist::SearchConfig cfg;
        if (mode == "exact")
            cfg.mode = boxdist::SearchConfig::Mode::exact;
        else if (mode == "anytime")
            cfg.mode = boxdist::SearchConfig::Mode::anytime;
        else
            throw std::invalid_argument("mode must be exact or anytime");
        if (palette_mode == "dynamic")
            cfg.palette_mode = boxdist::SearchConfig::PaletteMode::dynamic;
        else if (palette_mode == "enumerate")
            cfg.palette_mode = boxdist::SearchConfig::PaletteMode::enumerate_palettes;
        else
            throw std::invalid_argument("palette-mode must be dynamic or enumerate");
        cfg.node_budget = node_budget;
        cfg.time_budget_seconds = time_budget;
        cfg.worker_count = workers;
        cfg.symmetry_reduction = !no_symmetry;
        return cfg;
    }

    Json to_params() const {
        return Json{{"mode", mode},           {"palette_mode", palette_mode},
                    {"node_budget", node_budget}, {"time_budget", time_budget},
                    {"workers", workers},     {"symmetry_reduction", !no_symmetry}};
    }
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
    cmd->add_option("--mode", f.mode, "exact | anytime");
    cmd->add_option("--palette-mode", f.palette_mode, "dynamic | enumerate");
    cmd->add_option("--node-budget", f.node_budget, "branch-and-bound node budget");
    cmd->add_option("--time-budget", f.time_budget,
                    "wall-clock budget in seconds (0 = none; trades away determinism)");
    cmd->add_option("--workers", f.workers, "worker threads (dynamic mode)");
    cmd->add_flag("--no-symmetry", f.no_symmetry, "disable symmetry reduction");
}

// ---------------------------------------------------------------------------

int run_bounds(const std::string& n_range, const std::string& q_range,
               const std::string& s_range, double tol, const std::string& format,
               const std::string& out_path, std::uint64_t seed) {
    const Range nr = parse_range(n_range), qr = parse_range(q_range), sr = parse_range(s_range);
    boxdist::io::RunManifest manifest{
        "bounds",
        Json{{"n", n_range}, {"q", q_range}, {"s", s_range}, {"tol", tol}, {"format", format}},
        {},
        out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
        seed,
        boxdist::kVersion};

    if (format == "csv") {
        std::ostringstream csv;
        csv << "# manifest: " << boxdist::io::to_json(manifest).dump() << "\n";
        csv << "n,q,s,bbs,dgs,deza_frankl,main_theorem,dfrank_box,clp_threshold_2s,"
               "corollary_lo,corollary_hi\n";
        for (unsigned n = nr.lo; n <= nr.hi; ++n)
            for (unsigned q = qr.lo; q <= qr.hi; ++q)
                for (unsigned s = sr.lo; s <= sr.hi; ++s) {
                    csv << n << "," << q << "," << s << ",";
                    csv << boxdist::to_string(boxdist::bbs_bound(n, s)) << ",";
                    if (n >= 2 && s >= 1)
                        csv << boxdist::to_string(boxdist::dgs_bound(n, s));
                    else
                        csv << "NA";
                    csv << "," << boxdist::to_string(boxdist::deza_frankl_bound(n, s)) << ","
                        << boxdist::to_string(boxdist::main_theorem_bound(n, q, s)) << ","
                        << boxdist::to_string(boxdist::dfrank_box_bound(n, q, s)) << ","
                        << boxdist::to_string(boxdist::clp_threshold(n, 2 * s)) << ",";
                    if (s >= 1) {
                        boxdist::Interval iv = boxdist::corollary_bound(n, q, s, tol);
                        csv << iv.lower() << "," << iv.upper();
                    } else {
                        csv << "NA,NA";
                    }
                    csv << "\n";
                }
        if (out_path.empty())
            std::cout << csv.str();
        else
            write_file(out_path, csv.str());
        return kExitOk;
    }
    if (format != "json") throw std::invalid_argument("format must be csv or json");

    Json rows = Json::array();
    for (unsigned n = nr.lo; n <= nr.hi; ++n)
        for (unsigned q = qr.lo; q <= qr.hi; ++q)
            for (unsigned s = sr.lo; s <= sr.hi; ++s) {
                Json row{{"n", n}, {"q", q}, {"s", s}};
                row["bbs"] = boxdist::to_string(boxdist::bbs_bound(n, s));
                row["dgs"] = (n >= 2 && s >= 1)
                                 ? Json(boxdist::to_string(boxdist::dgs_bound(n, s)))
                                 : Json(nullptr);
                row["deza_frankl"] = boxdist::to_string(boxdist::deza_frankl_bound(n, s));
                row["main_theorem"] = boxdist::to_string(boxdist::main_theorem_bound(n, q, s));
                row["dfrank_box"] = boxdist::to_string(boxdist::dfrank_box_bound(n, q, s));
                row["clp_threshold_2s"] = boxdist::to_string(boxdist::clp_threshold(n, 2 * s));
                if (s >= 1) {
                    boxdist::Interval iv = boxdist::corollary_bound(n, q, s, tol);
                    row["corollary_lo"] = iv.lower();
                    row["corollary_hi"] = iv.upper();
                } else {
                    row["corollary_lo"] = nullptr;
                    row["corollary_hi"] = nullptr;
                }
                rows.push_back(std::move(row));
            }
    emit(out_path, wrap(manifest, std::move(rows)));
    return kExitOk;
}

int run_search(const std::string& box_path, unsigned long long s, const SearchFlags& flags,
               const std::string& out_path, std::uint64_t seed) {
    boxdist::Box box = boxdist::io::box_from_json(boxdist::io::parse(read_file(box_path)));
    boxdist::SearchResult res = boxdist::search_max(box, s, flags.to_config());

    Json params = flags.to_params();
    params["s"] = s;
    boxdist::io::RunManifest manifest{"search", std::move(params),
                                      {box_path},
                                      out_path.empty() ? std::vector<std::string>{}
                                                       : std::vector<std::string>{out_path},
                                      seed,
                                      boxdist::kVersion};
    emit(out_path, wrap(manifest, boxdist::io::to_json(res)));
    std::cerr << "best " << res.best_size << (res.optimal ? " (optimal)" : " (lower bound)")
              << ", nodes " << res.nodes_explored << "\n";
    return kExitOk;
}

int run_probe(unsigned n, unsigned q, unsigned long long s, const std::string& box_path,
              const SearchFlags& flags, const std::string& out_path, std::uint64_t seed) {
    boxdist::Box box = box_path.empty()
                           ? boxdist::Box::integer_grid(n, q)
                           : boxdist::io::box_from_json(boxdist::io::parse(read_file(box_path)));
    boxdist::ProbeReport report = boxdist::conjecture_probe(n, q, s, box, flags.to_config());

    Json params = flags.to_params();
    params["n"] = n;
    params["q"] = q;
    params["s"] = s;
    boxdist::io::RunManifest manifest{
        "probe", std::move(params),
        box_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{box_path},
        out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
        seed, boxdist::kVersion};
    emit(out_path, wrap(manifest, boxdist::io::to_json(report)));
    std::cerr << "best " << report.search.best_size << " vs conjectured cap "
              << boxdist::to_string(report.monomial_count) << ", theorem cap "
              << boxdist::to_string(report.theorem_bound) << "\n";
    if (!report.theorem_consistent) {
        std::cerr << "THEOREM VIOLATION: search result exceeds a proven bound "
                     "(implementation bug)\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_witness_build(unsigned n, const std::string& palette_csv, const std::string& points_path,
                      const std::string& out_path, std::uint64_t seed) {
    boxdist::SquaredDistancePalette palette;
    std::vector<std::string> inputs;
    if (!points_path.empty()) {
        boxdist::PointSet ps =
            boxdist::io::point_set_from_json(boxdist::io::parse(read_file(points_path)));
        palette = boxdist::distance_palette(ps);
        n = static_cast<unsigned>(ps.box().dimension());
        inputs.push_back(points_path);
    } else if (!palette_csv.empty()) {
        if (n == 0) throw std::invalid_argument("witness build: --n required with --palette");
        std::vector<boxdist::Scalar> vals;
        std::stringstream ss(palette_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            vals.push_back(boxdist::Scalar::from_string(item));
        palette = boxdist::SquaredDistancePalette(std::move(vals));
    } else {
        throw std::invalid_argument("witness build: need --points or --palette");
    }
    boxdist::MultiPoly poly = boxdist::build_distance_polynomial(n, palette);

    boxdist::io::RunManifest manifest{
        "witness build",
        Json{{"n", n}, {"palette", palette_csv}, {"points", points_path}},
        std::move(inputs),
        out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
        seed,
        boxdist::kVersion};
    emit(out_path, wrap(manifest, boxdist::io::to_json(poly)));
    std::cerr << "witness polynomial: degree " << poly.total_degree() << ", "
              << poly.term_count() << " terms\n";
    return kExitOk;
}

int run_witness_check(const std::string& poly_path, const std::string& points_path, unsigned t,
                      const std::string& out_path, std::uint64_t seed) {
    boxdist::MultiPoly poly = boxdist::io::poly_from_json(boxdist::io::parse(read_file(poly_path)));
    boxdist::PointSet ps =
        boxdist::io::point_set_from_json(boxdist::io::parse(read_file(points_path)));
    if (t == 0) t = static_cast<unsigned>(ps.box().side_size());
    boxdist::WitnessCheckResult res = boxdist::verify_witness(poly, ps, t);

    boxdist::io::RunManifest manifest{
        "witness check", Json{{"poly", poly_path}, {"points", points_path}, {"t", t}},
        {poly_path, points_path},
        out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
        seed, boxdist::kVersion};
    emit(out_path, wrap(manifest, boxdist::io::to_json(res)));
    std::cerr << "condition (i) " << (res.condition_i_ok ? "ok" : "FAILED") << ", condition (ii) "
              << (res.condition_ii_ok ? "ok" : "FAILED") << "\n";
    return kExitOk;  // the check itself succeeded either way
}

int run_construct(unsigned n, unsigned s, const std::string& out_path, std::uint64_t seed) {
    boxdist::ConstructionReport report = boxdist::characteristic_vector_set(n, s);
    boxdist::io::RunManifest manifest{
        "construct charvec", Json{{"n", n}, {"s", s}},
        {},
        out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
        seed, boxdist::kVersion};
    emit(out_path, wrap(manifest, boxdist::io::to_json(report)));
    return kExitOk;
}

int run_jconst(bool limit, int t, double d, double tol, const std::string& out_path,
               std::uint64_t seed) {
    Json result;
    Json params;
    if (limit) {
        boxdist::Interval iv = boxdist::j_limit_d3();
        result = boxdist::io::to_json(iv);
        params = Json{{"limit", true}};
    } else {
        if (t < 2) throw std::invalid_argument("jconst: need --t >= 2 (or --limit)");
        boxdist::JValue jv = boxdist::compute_J(boxdist::JParams{t, d}, tol);
        result = boxdist::io::to_json(jv);
        params = Json{{"t", t}, {"d", d}, {"tol", tol}};
    }
    boxdist::io::RunManifest manifest{
        "jconst", std::move(params),
        {},
        out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
        seed, boxdist::kVersion};
    emit(out_path, wrap(manifest, std::move(result)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bounds, witness checks and extremal search for "
                 "few-distance sets in boxes"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "recorded in output manifests");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound table over a parameter grid");
    std::string b_n = "1", b_q = "2", b_s = "0";
    double b_tol = 1e-6;
    std::string b_format = "csv", b_out;
    bounds->add_option("--n", b_n, "dimension, N or LO:HI")->required();
    bounds->add_option("--q", b_q, "side size, N or LO:HI")->required();
    bounds->add_option("--s", b_s, "distance count, N or LO:HI")->required();
    bounds->add_option("--tol", b_tol, "tolerance for J-based bounds");
    bounds->add_option("--format", b_format, "csv | json");
    bounds->add_option("--out", b_out, "output path (stdout if omitted)");

    // search
    auto* search = app.add_subcommand("search", "maximum s-distance subset of a box");
    std::string se_box, se_out;
    unsigned long long se_s = 1;
    SearchFlags se_flags;
    search->add_option("--box", se_box, "box JSON file")->required();
    search->add_option("--s", se_s, "palette size cap")->required();
    search->add_option("--out", se_out, "output path (stdout if omitted)");
    add_search_flags(search, se_flags);

    // probe
    auto* probe = app.add_subcommand("probe", "search vs counting caps");
    unsigned p_n = 0, p_q = 0;
    unsigned long long p_s = 1;
    std::string p_box, p_out;
    SearchFlags p_flags;
    probe->add_option("--n", p_n, "dimension")->required();
    probe->add_option("--q", p_q, "side size")->required();
    probe->add_option("--s", p_s, "palette size cap")->required();
    probe->add_option("--box", p_box, "box JSON file (default: integer grid)");
    probe->add_option("--out", p_out, "output path (stdout if omitted)");
    add_search_flags(probe, p_flags);

    // witness build / check
    auto* witness = app.add_subcommand("witness", "distance-palette witness polynomials");
    witness->require_subcommand(1);
    auto* wbuild = witness->add_subcommand("build", "build the palette product polynomial");
    unsigned wb_n = 0;
    std::string wb_palette, wb_points, wb_out;
    wbuild->add_option("--n", wb_n, "dimension (with --palette)");
    wbuild->add_option("--palette", wb_palette, "comma-separated squared distances");
    wbuild->add_option("--points", wb_points, "point-set JSON file (palette inferred)");
    wbuild->add_option("--out", wb_out, "output path (stdout if omitted)");
    auto* wcheck = witness->add_subcommand("check", "check witness conditions against points");
    std::string wc_poly, wc_points, wc_out;
    unsigned wc_t = 0;
    wcheck->add_option("--poly", wc_poly, "polynomial JSON file")->required();
    wcheck->add_option("--points", wc_points, "point-set JSON file")->required();
    wcheck->add_option("--t", wc_t, "coordinate-set size (default: box side size)");
    wcheck->add_option("--out", wc_out, "output path (stdout if omitted)");

    // construct
    auto* construct = app.add_subcommand("construct", "lower-bound constructions");
    construct->require_subcommand(1);
    auto* charvec = construct->add_subcommand("charvec", "characteristic vectors of s-subsets");
    unsigned cv_n = 0, cv_s = 0;
    std::string cv_out;
    charvec->add_option("--n", cv_n, "dimension")->required();
    charvec->add_option("--s", cv_s, "subset size")->required();
    charvec->add_option("--out", cv_out, "output path (stdout if omitted)");

    // jconst
    auto* jconst = app.add_subcommand("jconst", "J(t,d) enclosure / limit constant");
    bool j_limit = false;
    int j_t = 0;
    double j_d = 3.0, j_tol = 1e-6;
    std::string j_out;
    jconst->add_flag("--limit", j_limit, "large-q limit of J(q,3)");
    jconst->add_option("--t", j_t, "coordinate-set size");
    jconst->add_option("--d", j_d, "degree parameter (real, > 0)");
    jconst->add_option("--tol", j_tol, "enclosure width");
    jconst->add_option("--out", j_out, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bounds->parsed())
            return run_bounds(b_n, b_q, b_s, b_tol, b_format, b_out, seed);
        if (search->parsed()) return run_search(se_box, se_s, se_flags, se_out, seed);
        if (probe->parsed()) return run_probe(p_n, p_q, p_s, p_box, p_flags, p_out, seed);
        if (witness->parsed()) {
            if (wbuild->parsed())
                return run_witness_build(wb_n, wb_palette, wb_points, wb_out, seed);
            return run_witness_check(wc_poly, wc_points, wc_t, wc_out, seed);
        }
        if (construct->parsed()) return run_construct(cv_n, cv_s, cv_out, seed);
        if (jconst->parsed()) return run_jconst(j_limit, j_t, j_d, j_tol, j_out, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
