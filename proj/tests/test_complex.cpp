#include "doctest.h"

#include <bit>
#include <sstream>
#include <vector>

#include "projtri/catalog.hpp"
#include "projtri/errors.hpp"
#include "projtri/simplicial_complex.hpp"

using namespace projtri;

namespace {

// Independent h-vector oracle: expand sum_i f_{i-1} (t-1)^{d+1-i} and read the
// h_j off as the coefficient of t^{d+1-j}, with local Pascal binomials.
std::vector<long long> h_oracle(const FVector& f) {
    int m = static_cast<int>(f.size()) - 1;  // d+1
    std::vector<std::vector<long long>> pascal(m + 1);
    for (int r = 0; r <= m; ++r) {
        pascal[r].assign(r + 1, 1);
        for (int c = 1; c < r; ++c) pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
    }
    std::vector<long long> coeff(m + 1, 0);  // coeff[j] multiplies t^j
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m - i; ++j)
            coeff[j] += f[i] * pascal[m - i][j] * ((m - i - j) % 2 ? -1 : 1);
    std::vector<long long> h(m + 1);
    for (int j = 0; j <= m; ++j) h[j] = coeff[m - j];
    return h;
}

struct BudgetGuard {
    long long old = face_enumeration_budget();
    ~BudgetGuard() { set_face_enumeration_budget(old); }
};

}  // namespace

TEST_CASE("facet canonicalization absorbs duplicates and non-maximal faces") {
    auto k = SimplicialComplex::from_facets(4, {{1, 2}, {2, 1}, {1, 2, 3}, {4}});
    REQUIRE(k.facet_count() == 2);
    CHECK(k.facets()[0] == VertexSet::of({1, 2, 3}));
    CHECK(k.facets()[1] == VertexSet::of({4}));
    CHECK(k.dim() == 2);
    CHECK(k.vertex_count() == 4);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets(5, {{1, 2, 3}, {4}}), GhostVertex);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 4}}), VertexOutOfRange);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(65, {{1}}), TooManyVertices);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {{1}}), VertexOutOfRange);
    try {
        SimplicialComplex::from_facets(6, {{1, 2, 3}, {2, 3, 4}, {4, 5}});
    } catch (const GhostVertex& e) {
        CHECK(e.vertex == 6);
    }
}

TEST_CASE("the empty complex") {
    SimplicialComplex k;
    CHECK(k.vertex_count() == 0);
    CHECK(k.dim() == -1);
    CHECK(k.f_vector() == FVector{1});
    CHECK(k.euler_characteristic() == 0);
    CHECK(k.neighborliness() == 0);
    CHECK(k.complementarity_status() == Complementarity::Neither);
    CHECK(k.contains_face(VertexSet{}));
    CHECK_THROWS_AS(k.h_vector(), NotPure);
}

TEST_CASE("face counts against a direct subset scan") {
    for (const SimplicialComplex& k : {rp2_6(), cp2_9(), icosahedron()}) {
        int n = k.vertex_count();
        FVector direct(static_cast<std::size_t>(k.dim()) + 2, 0);
        direct[0] = 1;
        for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
            VertexSet s = VertexSet::from_bits(mask);
            bool is_face = false;
            for (VertexSet f : k.facets())
                if (s.subset_of(f)) is_face = true;
            if (is_face) ++direct[static_cast<std::size_t>(s.size())];
        }
        CHECK(k.f_vector() == direct);
    }
    CHECK(cp2_9().f_vector() == FVector{1, 9, 36, 84, 90, 36});
    CHECK(rp2_6().f_vector() == FVector{1, 6, 15, 10});
    CHECK(icosahedron().f_vector() == FVector{1, 12, 30, 20});
}

TEST_CASE("h-vector matches the polynomial-expansion oracle") {
    for (const SimplicialComplex& k : {icosahedron(), rp2_6(), cp2_9(), boundary_simplex(4)})
        CHECK(k.h_vector() == h_oracle(k.f_vector()));
    CHECK(icosahedron().h_vector() == HVector{1, 9, 9, 1});
    CHECK(rp2_6().h_vector() == HVector{1, 3, 6, 0});
    CHECK(cp2_9().h_vector() == HVector{1, 4, 10, 20, -1, 2});
}

TEST_CASE("euler characteristics") {
    CHECK(icosahedron().euler_characteristic() == 2);
    CHECK(rp2_6().euler_characteristic() == 1);
    CHECK(cp2_9().euler_characteristic() == 3);
    CHECK(boundary_simplex(3).euler_characteristic() == 2);
    CHECK(boundary_simplex(4).euler_characteristic() == 0);
}

TEST_CASE("links relabel compactly and reject non-faces") {
    SimplicialComplex ico = icosahedron();

    std::vector<int> labels;
    SimplicialComplex pole = ico.link(VertexSet::of({1}), labels);
    CHECK(pole.f_vector() == FVector{1, 5, 5});  // a 5-cycle
    CHECK(labels == std::vector<int>{2, 3, 4, 5, 6});

    SimplicialComplex edge = ico.link(VertexSet::of({1, 2}));
    CHECK(edge.f_vector() == FVector{1, 2});  // two points

    SimplicialComplex facet = ico.link(ico.facets()[0]);
    CHECK(facet.dim() == -1);

    CHECK_THROWS_AS(ico.link(VertexSet::of({1, 12})), NotAFace);  // opposite poles
}

TEST_CASE("all_faces groups by dimension in canonical order") {
    auto faces = rp2_6().all_faces();
    REQUIRE(faces.size() == 3);
    CHECK(faces[0].size() == 6);
    CHECK(faces[1].size() == 15);
    CHECK(faces[2].size() == 10);
    for (const auto& level : faces)
        for (std::size_t i = 1; i < level.size(); ++i) CHECK(level[i - 1] < level[i]);
}

TEST_CASE("face enumeration budget is enforced and restorable") {
    BudgetGuard guard;
    set_face_enumeration_budget(10);
    CHECK_THROWS_AS(cp2_9().all_faces(), FaceCountOverflow);
    set_face_enumeration_budget(guard.old);
    CHECK_NOTHROW(cp2_9().all_faces());
}

TEST_CASE("neighborliness") {
    CHECK(rp2_6().neighborliness() == 2);
    CHECK(cp2_9().neighborliness() == 3);
    CHECK(boundary_simplex(4).neighborliness() == 4);
    CHECK(icosahedron().neighborliness() == 1);
    CHECK(pt_disjoint_boundary(2).neighborliness() == 1);
}

TEST_CASE("pseudomanifold classification") {
    PseudomanifoldStatus ico = icosahedron().pseudomanifold_status(2);
    CHECK(ico.pure);
    CHECK(ico.weak);
    CHECK(ico.strong);
    CHECK(ico.orientable);

    PseudomanifoldStatus rp = rp2_6().pseudomanifold_status(2);
    CHECK(rp.weak);
    CHECK(rp.strong);
    CHECK_FALSE(rp.orientable);

    // boundary ridge {1, 3} lies in one facet only
    auto fan = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}});
    PseudomanifoldStatus fs = fan.pseudomanifold_status(2);
    CHECK(fs.pure);
    CHECK_FALSE(fs.weak);

    // two disjoint triangles: a weak but not strong 1-pseudomanifold
    auto two = SimplicialComplex::from_facets(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    PseudomanifoldStatus ts = two.pseudomanifold_status(1);
    CHECK(ts.weak);
    CHECK_FALSE(ts.strong);
    CHECK(ts.orientable);

    // wrong stated dimension
    CHECK_FALSE(icosahedron().pseudomanifold_status(3).pure);
}

TEST_CASE("complementarity trichotomy of statuses") {
    CHECK(rp2_6().complementarity_status() == Complementarity::Full);
    CHECK(cp2_9().complementarity_status() == Complementarity::Full);
    CHECK(pt_disjoint_boundary(2).complementarity_status() == Complementarity::Full);
    // 12 vertices, facets of size 3: no face is big enough for its complement
    // to be a face too, so the half condition holds vacuously
    CHECK(icosahedron().complementarity_status() == Complementarity::Half);
    CHECK(boundary_simplex(2).complementarity_status() == Complementarity::Neither);
    // octahedron: each facet and its antipode partition the vertex set
    auto oct = SimplicialComplex::from_facets(6, {{1, 2, 3}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6},
                                                  {4, 2, 3}, {4, 2, 6}, {4, 5, 3}, {4, 5, 6}});
    CHECK(oct.complementarity_status() == Complementarity::Neither);

    // an edge plus two isolated vertices: at most one of each pair, but the
    // pair ({1,3}, {2,4}) has no face at all
    auto half = SimplicialComplex::from_facets(4, {{1, 2}, {3}, {4}});
    CHECK(half.complementarity_status() == Complementarity::Half);

    auto wide = SimplicialComplex::from_facets(28, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                                                     15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26,
                                                     27, 28}});
    CHECK_THROWS_AS(wide.complementarity_status(), TooManyVertices);
    CHECK(wide.complementarity_status(28) == Complementarity::Neither);
}

TEST_CASE("flat residuals for the classical relations") {
    auto zero = [](const std::vector<long long>& v) {
        for (long long x : v)
            if (x != 0) return false;
        return true;
    };
    CHECK(zero(icosahedron().dehn_sommerville_residual(2)));
    CHECK(zero(rp2_6().dehn_sommerville_residual(2)));
    CHECK(zero(cp2_9().dehn_sommerville_residual(4)));
    CHECK(zero(boundary_simplex(3).dehn_sommerville_residual(2)));

    auto impure = SimplicialComplex::from_facets(4, {{1, 2, 3}, {4}});
    CHECK_THROWS_AS(impure.dehn_sommerville_residual(2), NotPure);
    CHECK_THROWS_AS(icosahedron().dehn_sommerville_residual(3), NotPure);
}

TEST_CASE("face-count solve for the 15-vertex system") {
    FVector f = solve_bk_fvector();
    CHECK(f == FVector{1, 15, 105, 455, 1365, 3003, 4515, 4230, 2205, 490});
    for (int i = 0; i <= 5; ++i) CHECK(f[static_cast<std::size_t>(i)] == binomial(15, i));
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * f[i];
    CHECK(chi == 3);
}

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(15, 5) == 3003);
    CHECK(binomial(27, 13) == 20058300);
    CHECK(binomial(64, 32) == 1832624140942590534LL);
}

TEST_CASE("text io round trip") {
    for (const SimplicialComplex& k : {rp2_6(), cp2_9(), pt_disjoint_boundary(3)}) {
        std::stringstream ss;
        k.write(ss);
        CHECK(SimplicialComplex::read(ss) == k);
    }

    std::stringstream shuffled(
        "# a comment\nvertices 4\nfacet 4\nfacet 3 2 1\n\n# trailing comment\n");
    auto k = SimplicialComplex::read(shuffled);
    CHECK(k == SimplicialComplex::from_facets(4, {{1, 2, 3}, {4}}));

    std::stringstream bad1("vertices x\n");
    CHECK_THROWS_AS(SimplicialComplex::read(bad1), FormatError);
    std::stringstream bad2("facet 1 2\n");
    CHECK_THROWS_AS(SimplicialComplex::read(bad2), FormatError);
    std::stringstream bad3("vertices 3\nridge 1 2\n");
    CHECK_THROWS_AS(SimplicialComplex::read(bad3), FormatError);
    std::stringstream bad4("dim 5\nvertices 3\nfacet 1 2 3\n");
    CHECK_THROWS_AS(SimplicialComplex::read(bad4), FormatError);
}

TEST_CASE("relabeling is an action") {
    SimplicialComplex k = rp2_6();
    CHECK(k.relabeled({1, 2, 3, 4, 5, 6}) == k);
    SimplicialComplex swapped = k.relabeled({2, 1, 3, 4, 5, 6});
    CHECK(swapped.relabeled({2, 1, 3, 4, 5, 6}) == k);
    CHECK(swapped.f_vector() == k.f_vector());
    CHECK_THROWS_AS(k.relabeled({1, 1, 3, 4, 5, 6}), VertexOutOfRange);
    CHECK_THROWS_AS(k.relabeled({1, 2, 3}), VertexOutOfRange);
}
