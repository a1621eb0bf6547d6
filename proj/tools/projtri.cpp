// Command-line front end: verification suites plus direct access to the
// homology, symmetry, isomorphism, search, and fixed-point machinery.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "projtri/catalog.hpp"
#include "projtri/errors.hpp"
#include "projtri/fixed_points.hpp"
#include "projtri/homology.hpp"
#include "projtri/isomorphism.hpp"
#include "projtri/perm_group.hpp"
#include "projtri/search.hpp"
#include "projtri/simplicial_complex.hpp"
#include "projtri/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace projtri;

SimplicialComplex read_complex(const std::string& path) {
    if (path == "-") return SimplicialComplex::read(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return SimplicialComplex::read(in);
}

PermGroup read_group(const std::string& path) {
    if (path == "-") return PermGroup::read(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return PermGroup::read(in);
}

// One facet per line, vertices as integers, '#' starts a comment.
std::vector<VertexSet> read_facet_list(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw Error("cannot open " + path);
        in = &file;
    }
    std::vector<VertexSet> out;
    std::string line;
    while (std::getline(*in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        VertexSet f;
        int v;
        while (ls >> v) f.add(v);
        if (!f.empty()) out.push_back(f);
    }
    return out;
}

int env_threads() {
    const char* s = std::getenv("PROJTRI_THREADS");
    if (!s) return 1;
    long v = std::strtol(s, nullptr, 10);
    if (v < 1 || v > 256) throw Error("PROJTRI_THREADS out of range: " + std::string(s));
    return static_cast<int>(v);
}

void apply_memory_budget_env() {
    const char* s = std::getenv("PROJTRI_MEMORY_BUDGET");
    if (!s) return;
    long long v = std::strtoll(s, nullptr, 10);
    if (v <= 0) throw Error("PROJTRI_MEMORY_BUDGET must be positive: " + std::string(s));
    set_face_enumeration_budget(v);
}

json report_json(const VerificationReport& r) {
    return {{"check", r.check_name},
            {"claim", r.claim},
            {"pass", r.pass},
            {"details", r.details},
            {"elapsed_seconds", r.elapsed_seconds}};
}

int print_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
    bool ok = all_passed(reports);
    if (format == "json") {
        json checks = json::array();
        for (const auto& r : reports) checks.push_back(report_json(r));
        std::cout << json{{"checks", checks}, {"all_passed", ok}}.dump(2) << "\n";
    } else {
        std::size_t failed = 0;
        for (const auto& r : reports) {
            if (!r.pass) ++failed;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check_name << ": " << r.claim
                      << "\n       " << r.details << "  (" << std::fixed << std::setprecision(3)
                      << r.elapsed_seconds << "s)\n";
        }
        if (failed == 0)
            std::cout << "all " << reports.size() << " checks passed\n";
        else
            std::cout << failed << " of " << reports.size() << " checks FAILED\n";
    }
    return ok ? 0 : 1;
}

int run_verify(const std::string& which, const std::string& level, int threads,
               const std::string& format) {
    SearchSuiteLevel lv = level == "full" ? SearchSuiteLevel::Full : SearchSuiteLevel::Quick;
    std::vector<VerificationReport> reports;
    auto append = [&](std::vector<VerificationReport> part) {
        for (auto& r : part) reports.push_back(std::move(r));
    };
    if (which == "cp29") append(verify_cp29());
    else if (which == "rp26") append(verify_rp26());
    else if (which == "table1") append(verify_table1());
    else if (which == "bk-fvector") append(verify_bk_fvector());
    else if (which == "q8-lemma") append(verify_q8_lemma());
    else if (which == "search") append(verify_search_suite(lv, threads));
    else {  // all
        append(verify_cp29());
        append(verify_rp26());
        append(verify_table1());
        append(verify_bk_fvector());
        append(verify_q8_lemma());
        append(verify_search_suite(lv, threads));
    }
    return print_reports(reports, format);
}

int run_homology(const std::string& path, int mod, int manifold_dim, const std::string& format) {
    SimplicialComplex k = read_complex(path);
    Coefficients ring = mod ? Coefficients::mod(mod) : Coefficients::integers();
    HomologyProfile hp = homology(k, ring);
    std::string ring_name = mod ? "F_" + std::to_string(mod) : "Z";
    ManifoldCheck mc;
    if (manifold_dim >= 0) mc = is_homology_manifold(k, manifold_dim, ring);
    if (format == "json") {
        json out = {{"ring", ring_name}, {"betti", hp.betti}, {"torsion", hp.torsion}};
        if (manifold_dim >= 0) {
            out["manifold"] = mc.is_manifold;
            if (!mc.is_manifold) out["manifold_failure"] = mc.reason;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ring " << ring_name << "\nbetti";
        for (long long b : hp.betti) std::cout << " " << b;
        std::cout << "\n";
        for (std::size_t q = 0; q < hp.torsion.size(); ++q) {
            if (hp.torsion[q].empty()) continue;
            std::cout << "torsion H_" << q << ":";
            for (long long t : hp.torsion[q]) std::cout << " " << t;
            std::cout << "\n";
        }
        if (manifold_dim >= 0)
            std::cout << "homology " << manifold_dim << "-manifold: "
                      << (mc.is_manifold ? "yes" : "no (" + mc.reason + ")") << "\n";
    }
    return 0;
}

int run_sym(const std::string& path, const std::string& format) {
    SimplicialComplex k = read_complex(path);
    PermGroup g = symmetry_group(k);
    if (format == "json") {
        json gens = json::array();
        for (const Permutation& p : g.generators()) gens.push_back(p.cycle_string());
        json orders = json::object();
        for (auto [o, c] : g.element_order_multiset()) orders[std::to_string(o)] = c;
        std::cout << json{{"order", g.order()},
                          {"generators", gens},
                          {"orbit_lengths", g.orbit_lengths()},
                          {"element_orders", orders}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "order " << g.order() << "\norbit lengths";
        for (int l : g.orbit_lengths()) std::cout << " " << l;
        std::cout << "\n";
        for (const Permutation& p : g.generators()) std::cout << "gen " << p.cycle_string() << "\n";
    }
    return 0;
}

int run_iso(const std::string& path1, const std::string& path2, const std::string& format) {
    SimplicialComplex k1 = read_complex(path1);
    SimplicialComplex k2 = read_complex(path2);
    auto cert = are_isomorphic(k1, k2);
    if (format == "json") {
        json out = {{"isomorphic", cert.has_value()}};
        if (cert) out["mapping"] = cert->mapping;
        std::cout << out.dump(2) << "\n";
    } else if (cert) {
        std::cout << "isomorphic:";
        for (int img : cert->mapping) std::cout << " " << img;
        std::cout << "\n";
    } else {
        std::cout << "not isomorphic\n";
    }
    return cert ? 0 : 1;
}

int run_fixed_points(const std::string& complex_path, const std::string& group_path,
                     const std::string& format) {
    SimplicialComplex k = read_complex(complex_path);
    PermGroup g = read_group(group_path);
    FixedPointComplex fp = fixed_point_complex(k, g);
    if (format == "json") {
        json facets = json::array();
        for (VertexSet f : fp.complex.facets()) facets.push_back(f.to_vector());
        json labels = json::array();
        for (VertexSet l : fp.vertex_labels) labels.push_back(l.to_vector());
        std::cout << json{{"vertices", fp.complex.vertex_count()},
                          {"facets", facets},
                          {"vertex_labels", labels}}
                         .dump(2)
                  << "\n";
    } else {
        fp.write(std::cout);
    }
    return 0;
}

struct SearchCliArgs {
    int d = 2;
    int n = 6;
    long long min_facets = 1;
    std::string group_path;
    std::string seeds_path;
    std::string out_dir;
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;
    std::string checkpoint_path;
    double checkpoint_interval = 60;
    std::string resume_path;
    int threads = 1;
};

int run_search(const SearchCliArgs& a, const std::string& format) {
    SearchProblem p;
    p.d = a.d;
    p.n = a.n;
    p.min_facets = a.min_facets;
    p.group = a.group_path.empty() ? PermGroup::trivial(a.n) : read_group(a.group_path);
    if (!a.seeds_path.empty()) p.seed_facets = read_facet_list(a.seeds_path);
    p.limits.max_nodes = a.max_nodes;
    p.limits.max_seconds = a.max_seconds;
    p.limits.checkpoint_path = a.checkpoint_path;
    p.limits.checkpoint_interval_seconds = a.checkpoint_interval;
    p.limits.resume_path = a.resume_path;
    p.limits.threads = a.threads;

    SearchResult res = enumerate(p);
    std::vector<SimplicialComplex> classes = dedup_up_to_iso(res.complexes);

    std::vector<std::string> files;
    if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        for (const SimplicialComplex& c : classes) {
            std::string path = a.out_dir + "/" + canonical_hash(c) + ".txt";
            std::ofstream out(path);
            if (!out) throw Error("cannot write " + path);
            c.write(out);
            files.push_back(path);
        }
    }

    if (format == "json") {
        json out = {{"nodes", res.nodes},
                    {"solutions", res.complexes.size()},
                    {"classes", classes.size()}};
        if (!a.out_dir.empty()) out["files"] = files;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "nodes " << res.nodes << "\nsolutions " << res.complexes.size()
                  << "\nclasses " << classes.size() << "\n";
        for (const std::string& f : files) std::cout << "wrote " << f << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit and search engine for highly symmetric triangulations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}));

    int default_threads = 1;
    try {
        default_threads = env_threads();
        apply_memory_budget_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    // verify
    std::string verify_which, verify_level = "quick";
    int verify_threads = default_threads;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run one of the built-in verification suites");
    verify_cmd->fallthrough();
    verify_cmd
        ->add_option("which", verify_which,
                     "cp29, rp26, table1, bk-fvector, q8-lemma, search, or all")
        ->required()
        ->check(CLI::IsMember({"cp29", "rp26", "table1", "bk-fvector", "q8-lemma", "search", "all"}));
    verify_cmd->add_option("--level", verify_level, "Search suite tier (quick or full)")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--threads", verify_threads, "Worker threads for the search suite");

    // homology
    std::string hom_path;
    int hom_mod = 0, hom_manifold = -1;
    CLI::App* hom_cmd = app.add_subcommand("homology", "Betti numbers and torsion of a complex");
    hom_cmd->fallthrough();
    hom_cmd->add_option("file", hom_path, "Complex file ('-' for stdin)")->required();
    hom_cmd->add_option("--mod", hom_mod, "Prime field characteristic (default: integers)");
    hom_cmd->add_option("--manifold", hom_manifold,
                        "Also test the homology-d-manifold predicate for this d");

    // sym
    std::string sym_path;
    CLI::App* sym_cmd = app.add_subcommand("sym", "Full symmetry group of a complex");
    sym_cmd->fallthrough();
    sym_cmd->add_option("file", sym_path, "Complex file ('-' for stdin)")->required();

    // iso
    std::string iso_path1, iso_path2;
    CLI::App* iso_cmd =
        app.add_subcommand("iso", "Test two complexes for isomorphism (exit 1 when distinct)");
    iso_cmd->fallthrough();
    iso_cmd->add_option("first", iso_path1, "Complex file")->required();
    iso_cmd->add_option("second", iso_path2, "Complex file")->required();

    // fixed-points
    std::string fp_complex, fp_group;
    CLI::App* fp_cmd =
        app.add_subcommand("fixed-points", "Fixed-point complex of a group action on a complex");
    fp_cmd->fallthrough();
    fp_cmd->add_option("complex", fp_complex, "Complex file")->required();
    fp_cmd->add_option("group", fp_group, "Group file")->required();

    // search
    SearchCliArgs sa;
    sa.threads = default_threads;
    CLI::App* search_cmd = app.add_subcommand(
        "search", "Enumerate invariant half-complementary weak pseudomanifolds");
    search_cmd->fallthrough();
    search_cmd->add_option("--dim", sa.d, "Facet dimension d (facets have d+1 vertices)")
        ->required();
    search_cmd->add_option("--vertices", sa.n, "Number of vertices")->required();
    search_cmd->add_option("--min-facets", sa.min_facets, "Minimum facet count");
    search_cmd->add_option("--group", sa.group_path, "Group file (default: trivial group)");
    search_cmd->add_option("--seeds", sa.seeds_path, "Seed facet file, one facet per line");
    search_cmd->add_option("--out", sa.out_dir, "Directory for one file per isomorphism class");
    search_cmd->add_option("--max-nodes", sa.max_nodes, "Abort after this many branch decisions");
    search_cmd->add_option("--max-seconds", sa.max_seconds, "Abort after this much wall time");
    search_cmd->add_option("--checkpoint", sa.checkpoint_path, "Write periodic checkpoints here");
    search_cmd->add_option("--checkpoint-interval", sa.checkpoint_interval,
                           "Seconds between checkpoints");
    search_cmd->add_option("--resume", sa.resume_path, "Resume from this checkpoint file");
    search_cmd->add_option("--threads", sa.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify_cmd) return run_verify(verify_which, verify_level, verify_threads, format);
        if (*hom_cmd) return run_homology(hom_path, hom_mod, hom_manifold, format);
        if (*sym_cmd) return run_sym(sym_path, format);
        if (*iso_cmd) return run_iso(iso_path1, iso_path2, format);
        if (*fp_cmd) return run_fixed_points(fp_complex, fp_group, format);
        if (*search_cmd) return run_search(sa, format);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        if (!e.checkpoint_path.empty())
            std::cerr << "checkpoint written to " << e.checkpoint_path << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
