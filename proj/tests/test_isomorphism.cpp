#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "projtri/catalog.hpp"
#include "projtri/isomorphism.hpp"

using namespace projtri;

namespace {

std::vector<int> random_relabeling(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return img;
}

}  // namespace

TEST_CASE("certificates transport facets") {
    std::mt19937_64 rng(0xC0FFEE);
    SimplicialComplex k = rp2_6();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> img = random_relabeling(6, rng);
        SimplicialComplex moved = k.relabeled(img);
        auto cert = are_isomorphic(k, moved);
        REQUIRE(cert.has_value());
        CHECK(cert->verified);
        CHECK(k.relabeled(cert->mapping) == moved);
    }
}

TEST_CASE("same face counts do not imply isomorphic") {
    // a 6-cycle versus two disjoint triangles: both have f = (1, 6, 6)
    auto cycle =
        SimplicialComplex::from_facets(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    auto pair =
        SimplicialComplex::from_facets(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(cycle.f_vector() == pair.f_vector());
    CHECK_FALSE(are_isomorphic(cycle, pair).has_value());
    CHECK(canonical_hash(cycle) != canonical_hash(pair));
    CHECK(canonical_form(cycle) != canonical_form(pair));

    CHECK_FALSE(are_isomorphic(rp2_6(), boundary_simplex(3)).has_value());
    CHECK_FALSE(are_isomorphic(rp2_6(), SimplicialComplex()).has_value());
    CHECK(are_isomorphic(SimplicialComplex(), SimplicialComplex()).has_value());
}

TEST_CASE("canonical forms are relabeling invariant") {
    std::mt19937_64 rng(20260815);
    for (const SimplicialComplex& k : {rp2_6(), cp2_9(), icosahedron()}) {
        SimplicialComplex canon = canonical_form(k);
        CHECK(are_isomorphic(k, canon).has_value());
        int n = k.vertex_count();
        int trials = k.vertex_count() >= 12 ? 20 : 100;
        for (int t = 0; t < trials; ++t) {
            SimplicialComplex moved = k.relabeled(random_relabeling(n, rng));
            CHECK(canonical_form(moved) == canon);
            CHECK(canonical_hash(moved) == canonical_hash(k));
        }
    }
}

TEST_CASE("symmetry group orders of the reference complexes") {
    CHECK(symmetry_group(icosahedron()).order() == 120);
    CHECK(symmetry_group(rp2_6()).order() == 60);
    CHECK(symmetry_group(cp2_9()).order() == 54);
    CHECK(symmetry_group(boundary_simplex(3)).order() == 24);

    auto cycle =
        SimplicialComplex::from_facets(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK(symmetry_group(cycle).order() == 12);  // dihedral

    // every reported symmetry really is one
    SimplicialComplex k = cp2_9();
    PermGroup aut = symmetry_group(k);
    for (const Permutation& g : aut.elements()) CHECK(k.relabeled(g.images()) == k);
}

TEST_CASE("symmetry groups transport along isomorphisms") {
    std::mt19937_64 rng(7);
    SimplicialComplex k = rp2_6();
    SimplicialComplex moved = k.relabeled(random_relabeling(6, rng));
    CHECK(symmetry_group(moved).order() == symmetry_group(k).order());
    CHECK(canonical_form(moved) == canonical_form(k));
}
