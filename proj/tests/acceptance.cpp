// Acceptance gate: runs every binding check once and prints one PASS/FAIL
// line per criterion. The flagship 15-vertex search only runs under
// --level full; everything else is part of the default quick tier.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "projtri/catalog.hpp"
#include "projtri/fixed_points.hpp"
#include "projtri/homology.hpp"
#include "projtri/isomorphism.hpp"
#include "projtri/perm_group.hpp"
#include "projtri/search.hpp"
#include "projtri/simplicial_complex.hpp"
#include "projtri/verify.hpp"

namespace {

using namespace projtri;

struct Outcome {
    bool pass = false;
    std::vector<std::string> details;
};

Outcome from_reports(const std::vector<VerificationReport>& reports) {
    Outcome out;
    out.pass = all_passed(reports);
    for (const auto& r : reports)
        if (!r.pass) out.details.push_back(r.check_name + ": " + r.claim + " -- " + r.details);
    return out;
}

// Reports from the 27-action table splitter: the order-72 subgroup analysis
// is its own criterion, everything else (filters plus planted controls) is
// the table criterion.
bool is_order72_item(const VerificationReport& r) {
    return r.claim.find("order-72") != std::string::npos;
}

std::vector<int> random_relabeling(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return img;
}

long long alternating_betti_sum(const HomologyProfile& hp) {
    long long s = 0;
    for (std::size_t q = 0; q < hp.betti.size(); ++q) s += (q % 2 ? -1 : 1) * hp.betti[q];
    return s;
}

struct NamedComplex {
    std::string name;
    SimplicialComplex k;
};

std::vector<NamedComplex> complementarity_catalog() {
    std::vector<NamedComplex> out;
    for (int k = 1; k <= 4; ++k)
        out.push_back({"point+boundary(" + std::to_string(k) + ")", pt_disjoint_boundary(k)});
    out.push_back({"rp2_6", rp2_6()});
    out.push_back({"cp2_9", cp2_9()});
    return out;
}

// Every complex with the full complementarity property must have odd Euler
// characteristic and be (n-d-2)-neighborly; checked over the catalog and
// over fresh search output.
Outcome prop_complementarity(int threads) {
    Outcome out;
    out.pass = true;
    auto fail = [&](const std::string& s) {
        out.pass = false;
        out.details.push_back(s);
    };

    std::vector<NamedComplex> pool = complementarity_catalog();
    pool.push_back({"boundary_simplex(3)", boundary_simplex(3)});
    pool.push_back({"boundary_simplex(4)", boundary_simplex(4)});
    pool.push_back({"icosahedron", icosahedron()});

    SearchProblem p6;
    p6.d = 2;
    p6.n = 6;
    p6.min_facets = 10;
    p6.group = PermGroup::trivial(6);
    p6.limits.threads = threads;
    SearchResult r6 = enumerate(p6);
    int i = 0;
    for (const auto& k : r6.complexes)
        pool.push_back({"search(2,6)#" + std::to_string(i++), k});

    SearchProblem p9;
    p9.d = 4;
    p9.n = 9;
    p9.min_facets = 36;
    p9.group = heisenberg_on_9();
    p9.limits.threads = threads;
    SearchResult r9 = enumerate(p9);
    i = 0;
    for (const auto& k : r9.complexes)
        pool.push_back({"search(4,9)#" + std::to_string(i++), k});

    int with_full = 0;
    for (const auto& [name, k] : pool) {
        if (k.complementarity_status() != Complementarity::Full) continue;
        ++with_full;
        if (k.euler_characteristic() % 2 == 0)
            fail(name + ": full complementarity with even Euler characteristic");
        int want = k.vertex_count() - k.dim() - 2;
        if (k.neighborliness() < want)
            fail(name + ": neighborliness " + std::to_string(k.neighborliness()) +
                 " below " + std::to_string(want));
    }
    if (with_full < 6) fail("too few complementarity instances exercised");
    return out;
}

// Fixed-point trichotomy for a complementarity complex K and any subgroup H
// of its symmetry group, with r = number of H-orbits on the vertices:
// r=1 gives the empty complex, r=2 a point, and r>=3 either an (r-2)-simplex
// or an r-vertex complex with complementarity. The fixed-point complex is
// empty or a simplex exactly when some orbit is a non-face, and at most one
// orbit can be a non-face.
Outcome prop_trichotomy() {
    Outcome out;
    out.pass = true;
    auto fail = [&](const std::string& s) {
        out.pass = false;
        if (out.details.size() < 8) out.details.push_back(s);
    };

    int pairs = 0, saw_r1 = 0, saw_r2 = 0, saw_comp = 0, saw_simplex = 0;
    for (const auto& [name, k] : complementarity_catalog()) {
        if (k.complementarity_status() != Complementarity::Full) {
            fail(name + ": expected the full complementarity property");
            continue;
        }
        for (const PermGroup& h : symmetry_group(k).all_subgroups()) {
            ++pairs;
            std::string tag = name + " / subgroup of order " + std::to_string(h.order());
            std::vector<VertexSet> orbits = h.orbits();
            int r = static_cast<int>(orbits.size());
            int nonface = 0;
            for (VertexSet o : orbits)
                if (!k.contains_face(o)) ++nonface;

            FixedPointComplex fp = fixed_point_complex(k, h);
            const SimplicialComplex& q = fp.complex;
            bool is_simplex = q.vertex_count() > 0 && q.facet_count() == 1 &&
                              q.facets()[0] == VertexSet::full(q.vertex_count());

            if (nonface > 1) fail(tag + ": two orbits are non-faces");
            if (static_cast<int>(fp.vertex_labels.size()) != r - nonface)
                fail(tag + ": orbit-vertex count disagrees with face orbits");

            if (r == 1) {
                ++saw_r1;
                if (q.vertex_count() != 0) fail(tag + ": transitive action left fixed points");
            } else if (r == 2) {
                ++saw_r2;
                if (!(q.vertex_count() == 1 && is_simplex))
                    fail(tag + ": two orbits did not give a point");
            } else {
                bool simplex_branch = q.vertex_count() == r - 1 && is_simplex;
                bool comp_branch = q.vertex_count() == r &&
                                   q.complementarity_status() == Complementarity::Full;
                if (simplex_branch)
                    ++saw_simplex;
                else if (comp_branch)
                    ++saw_comp;
                else
                    fail(tag + ": fixed points are neither a simplex nor complementarity");
            }

            bool empty_or_simplex = q.vertex_count() == 0 || is_simplex;
            if (empty_or_simplex != (nonface >= 1))
                fail(tag + ": empty-or-simplex does not match the non-face orbit test");
        }
    }
    if (pairs < 200) fail("too few (complex, subgroup) pairs exercised");
    if (saw_r1 == 0 || saw_r2 == 0 || saw_comp == 0)
        fail("some trichotomy branch never occurred (r=1: " + std::to_string(saw_r1) +
             ", r=2: " + std::to_string(saw_r2) + ", complementarity: " + std::to_string(saw_comp) +
             ", simplex: " + std::to_string(saw_simplex) + ")");
    return out;
}

// The alternating betti number sum must equal the Euler characteristic over
// the integers and over every prime field.
Outcome prop_euler_poincare() {
    Outcome out;
    out.pass = true;
    std::vector<NamedComplex> pool = complementarity_catalog();
    pool.push_back({"boundary_simplex(3)", boundary_simplex(3)});
    pool.push_back({"boundary_simplex(4)", boundary_simplex(4)});
    pool.push_back({"icosahedron", icosahedron()});
    std::vector<Coefficients> rings = {Coefficients::integers(), Coefficients::mod(2),
                                       Coefficients::mod(3), Coefficients::mod(5)};
    for (const auto& [name, k] : pool) {
        long long chi = k.euler_characteristic();
        for (Coefficients ring : rings) {
            long long s = alternating_betti_sum(homology(k, ring));
            if (s != chi) {
                out.pass = false;
                out.details.push_back(name + ": betti sum " + std::to_string(s) +
                                      " vs Euler characteristic " + std::to_string(chi));
            }
        }
    }
    return out;
}

// Every predicate must be invariant under relabeling the vertices.
Outcome prop_relabeling() {
    Outcome out;
    out.pass = true;
    auto fail = [&](const std::string& s) {
        out.pass = false;
        if (out.details.size() < 8) out.details.push_back(s);
    };

    std::vector<std::pair<NamedComplex, int>> plan = {
        {{"rp2_6", rp2_6()}, 40},
        {{"icosahedron", icosahedron()}, 20},
        {{"point+boundary(3)", pt_disjoint_boundary(3)}, 20},
        {{"cp2_9", cp2_9()}, 20},
    };
    std::mt19937_64 rng(0x5EED2026ull);
    int trials = 0;
    for (const auto& [nk, reps] : plan) {
        const auto& [name, k] = nk;
        int d = k.dim();
        FVector f = k.f_vector();
        Complementarity comp = k.complementarity_status();
        int nb = k.neighborliness();
        PseudomanifoldStatus pm = k.pseudomanifold_status(d);
        HomologyProfile hp = homology(k, Coefficients::integers());
        SimplicialComplex canon = canonical_form(k);
        for (int t = 0; t < reps; ++t) {
            ++trials;
            SimplicialComplex moved = k.relabeled(random_relabeling(k.vertex_count(), rng));
            std::string tag = name + " trial " + std::to_string(t);
            if (moved.f_vector() != f) fail(tag + ": f-vector changed");
            if (moved.complementarity_status() != comp) fail(tag + ": complementarity changed");
            if (moved.neighborliness() != nb) fail(tag + ": neighborliness changed");
            PseudomanifoldStatus pm2 = moved.pseudomanifold_status(d);
            if (pm2.pure != pm.pure || pm2.weak != pm.weak || pm2.strong != pm.strong ||
                pm2.orientable != pm.orientable)
                fail(tag + ": pseudomanifold status changed");
            HomologyProfile hp2 = homology(moved, Coefficients::integers());
            if (hp2.betti != hp.betti || hp2.torsion != hp.torsion)
                fail(tag + ": homology changed");
            if (canonical_form(moved) != canon) fail(tag + ": canonical form changed");
        }
    }
    if (trials < 100) fail("fewer than 100 relabeling trials");
    return out;
}

Outcome property_suites(int threads) {
    Outcome all;
    all.pass = true;
    for (Outcome part : {prop_complementarity(threads), prop_trichotomy(), prop_euler_poincare(),
                         prop_relabeling()}) {
        all.pass = all.pass && part.pass;
        for (auto& d : part.details) all.details.push_back(std::move(d));
    }
    return all;
}

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance gate for the triangulation toolkit"};
    std::string level = "quick";
    int threads = 1;
    app.add_option("--level", level, "quick (default) or full")
        ->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--threads", threads, "Worker threads for the search criteria");
    CLI11_PARSE(app, argc, argv);
    bool full = level == "full";

    // the table reports are shared between criteria 4 and 5; computed once
    std::vector<VerificationReport> table_reports;
    auto table_part = [&table_reports](bool order72) {
        if (table_reports.empty()) table_reports = verify_table1();
        std::vector<VerificationReport> part;
        for (const auto& r : table_reports)
            if (is_order72_item(r) == order72) part.push_back(r);
        return from_reports(part);
    };

    std::vector<Criterion> criteria = {
        {1, "nine-vertex complex projective plane suite", 10,
         [] { return from_reports(verify_cp29()); }},
        {2, "six-vertex real projective plane suite", 5,
         [] { return from_reports(verify_rp26()); }},
        {3, "15-vertex 8-manifold f-vector solve", 1,
         [] { return from_reports(verify_bk_fvector()); }},
        {4, "27-point action table filters with planted controls", 60,
         [&] { return table_part(false); }},
        {5, "order-72 action orbit and subgroup spectrum", 30,
         [&] { return table_part(true); }},
        {6, "quaternion sign lemma", 1, [] { return from_reports(verify_q8_lemma()); }},
        {7, "search engine quick tier", 300,
         [&] { return from_reports(verify_search_suite(SearchSuiteLevel::Quick, threads)); }},
        {8, "search engine full tier (seeded 15-vertex run)", 43200,
         [&] { return from_reports(verify_search_suite(SearchSuiteLevel::Full, threads)); }},
        {9, "cross-cutting property suites", 0, [&] { return property_suites(threads); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (c.id == 8 && !full) {
            std::printf("criterion 8: SKIP  %s  (rerun with --level full)\n", c.label.c_str());
            std::fflush(stdout);
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.pass = false;
            o.details.push_back("time budget of " + std::to_string(c.budget_seconds) +
                                "s exceeded");
        }
        std::printf("criterion %d: %s  %s  (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL",
                    c.label.c_str(), secs);
        for (std::size_t i = 0; i < o.details.size() && i < 8; ++i)
            std::printf("    - %s\n", o.details[i].c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
