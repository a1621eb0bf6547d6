#include "doctest.h"

#include <vector>

#include "projtri/catalog.hpp"
#include "projtri/errors.hpp"
#include "projtri/homology.hpp"

using namespace projtri;

namespace {

BigMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    BigMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

bool equals_padded_diagonal(const BigMatrix& m, const std::vector<BigInt>& diag) {
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            BigInt want = (r == c && r < static_cast<int>(diag.size())) ? diag[static_cast<std::size_t>(r)] : 0;
            if (m.at(r, c) != want) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("smith normal form of a classic example") {
    SmithResult s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    CHECK(s.diagonal == std::vector<BigInt>{2, 4});
    CHECK_FALSE(s.left.has_value());
}

TEST_CASE("smith transforms are unimodular diagonalizers") {
    std::vector<BigMatrix> samples = {
        from_rows({{2, 4}, {6, 8}}),
        from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),
        from_rows({{0, 0}, {0, 0}}),
        from_rows({{6, 10, 15}}),
        from_rows({{2, 0}, {0, 3}, {4, 9}}),
    };
    for (const BigMatrix& m : samples) {
        SmithResult s = smith_normal_form(m, true);
        REQUIRE(s.left.has_value());
        REQUIRE(s.right.has_value());
        BigMatrix prod = multiply(multiply(*s.left, m), *s.right);
        CHECK(equals_padded_diagonal(prod, s.diagonal));
        for (std::size_t i = 1; i < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
            CHECK(s.diagonal[i] > 0);
        }
    }
    // gcd of all entries appears first: SNF of [[6,10,15]] is (1)
    CHECK(smith_normal_form(from_rows({{6, 10, 15}})).diagonal == std::vector<BigInt>{1});
}

TEST_CASE("rank over small prime fields") {
    IntMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.a = {1, 1, 1, 1};
    CHECK(rank_mod_p(m, 2) == 1);

    IntMatrix two;
    two.rows = 1;
    two.cols = 1;
    two.a = {2};
    CHECK(rank_mod_p(two, 2) == 0);
    CHECK(rank_mod_p(two, 3) == 1);

    // the parity boundary map of a triangle has rank 2 over any field
    IntMatrix d;
    d.rows = 3;
    d.cols = 3;
    d.a = {-1, -1, 0, 1, 0, -1, 0, 1, 1};
    for (int p : {2, 3, 5, 7}) CHECK(rank_mod_p(d, p) == 2);
}

TEST_CASE("boundary matrix signs follow ascending vertex positions") {
    auto tri = SimplicialComplex::from_facets(3, {{1, 2, 3}});
    auto mats = boundary_matrices(tri);
    REQUIRE(mats.size() == 3);
    CHECK(mats[0].rows == 0);
    CHECK(mats[0].cols == 3);

    // edges in canonical order {1,2}, {1,3}, {2,3}; vertices 1, 2, 3
    const IntMatrix& d1 = mats[1];
    REQUIRE(d1.rows == 3);
    REQUIRE(d1.cols == 3);
    int expected1[3][3] = {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(d1.at(r, c) == expected1[r][c]);

    const IntMatrix& d2 = mats[2];
    REQUIRE(d2.rows == 3);
    REQUIRE(d2.cols == 1);
    CHECK(d2.at(0, 0) == 1);   // remove 3: (-1)^2
    CHECK(d2.at(1, 0) == -1);  // remove 2: (-1)^1
    CHECK(d2.at(2, 0) == 1);   // remove 1: (-1)^0
}

TEST_CASE("consecutive boundary maps compose to zero") {
    for (const SimplicialComplex& k : {icosahedron(), rp2_6(), cp2_9()}) {
        auto mats = boundary_matrices(k);
        for (std::size_t q = 1; q + 1 < mats.size(); ++q) {
            BigMatrix prod = multiply(BigMatrix(mats[q]), BigMatrix(mats[q + 1]));
            for (const BigInt& x : prod.a) CHECK(x == 0);
        }
    }
}

TEST_CASE("integral homology of the reference complexes") {
    HomologyProfile ico = homology(icosahedron(), Coefficients::integers());
    CHECK(ico.betti == std::vector<long long>{1, 0, 1});
    for (const auto& t : ico.torsion) CHECK(t.empty());

    HomologyProfile rp = homology(rp2_6(), Coefficients::integers());
    CHECK(rp.betti == std::vector<long long>{1, 0, 0});
    CHECK(rp.torsion[1] == std::vector<long long>{2});

    HomologyProfile cp = homology(cp2_9(), Coefficients::integers());
    CHECK(cp.betti == std::vector<long long>{1, 0, 1, 0, 1});
    for (const auto& t : cp.torsion) CHECK(t.empty());

    HomologyProfile s3 = homology(boundary_simplex(4), Coefficients::integers());
    CHECK(s3.betti == std::vector<long long>{1, 0, 0, 1});

    HomologyProfile pd = homology(pt_disjoint_boundary(2), Coefficients::integers());
    CHECK(pd.betti == std::vector<long long>{2, 1});
}

TEST_CASE("field coefficients see the torsion differently") {
    CHECK(homology(rp2_6(), Coefficients::mod(2)).betti == std::vector<long long>{1, 1, 1});
    CHECK(homology(rp2_6(), Coefficients::mod(3)).betti == std::vector<long long>{1, 0, 0});
    CHECK(homology(rp2_6(), Coefficients::mod(5)).betti == std::vector<long long>{1, 0, 0});
    CHECK(homology(rp2_6(), Coefficients::mod(2)).torsion[1].empty());

    // Euler characteristic is ring independent
    for (const SimplicialComplex& k : {icosahedron(), rp2_6(), cp2_9()}) {
        long long chi = k.euler_characteristic();
        for (int p : {0, 2, 3, 5}) {
            Coefficients ring = p ? Coefficients::mod(p) : Coefficients::integers();
            HomologyProfile hp = homology(k, ring);
            long long alt = 0;
            for (std::size_t q = 0; q < hp.betti.size(); ++q)
                alt += (q % 2 ? -1 : 1) * hp.betti[q];
            CHECK(alt == chi);
        }
    }
}

TEST_CASE("homology manifold recognition") {
    CHECK(is_homology_manifold(icosahedron(), 2, Coefficients::integers()).is_manifold);
    CHECK(is_homology_manifold(rp2_6(), 2, Coefficients::integers()).is_manifold);
    CHECK(is_homology_manifold(rp2_6(), 2, Coefficients::mod(2)).is_manifold);
    CHECK(is_homology_manifold(cp2_9(), 4, Coefficients::integers()).is_manifold);

    // two triangles pinched at a vertex
    auto pinch = SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 4, 5}});
    ManifoldCheck mc = is_homology_manifold(pinch, 2, Coefficients::integers());
    CHECK_FALSE(mc.is_manifold);
    REQUIRE(mc.witness.has_value());
    CHECK(*mc.witness == VertexSet::of({1}));
    CHECK_FALSE(mc.reason.empty());
}
