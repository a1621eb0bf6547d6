#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "projtri/simplicial_complex.hpp"

namespace projtri {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient ring: the integers, or the field with p elements.
struct Coefficients {
    static Coefficients integers() { return {}; }
    static Coefficients mod(int prime) {
        Coefficients c;
        c.p = prime;
        return c;
    }
    bool integral() const { return p == 0; }
    int p = 0;
    friend bool operator==(Coefficients, Coefficients) = default;
};

// Dense matrix with signed char entries; enough for boundary matrices.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<signed char> a;  // row major
    signed char& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    signed char at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Dense arbitrary-precision matrix for Smith normal form work.
struct BigMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;
    BigMatrix() = default;
    BigMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    explicit BigMatrix(const IntMatrix& m);
    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);

// diagonal holds the nonzero invariant factors d_1 | d_2 | ..., all positive.
// When transforms are tracked, left * input * right equals the diagonal
// matrix padded with zeros, and both transforms are unimodular.
struct SmithResult {
    std::vector<BigInt> diagonal;
    int rank = 0;
    std::optional<BigMatrix> left, right;
};

SmithResult smith_normal_form(BigMatrix m, bool track_transforms = false);

// rank over F_p
int rank_mod_p(const IntMatrix& m, int p);

// result[k] is the boundary map from k-chains to (k-1)-chains, with columns
// indexed by the k-faces and rows by the (k-1)-faces, both in ascending
// bitmask order; the coefficient of F minus its i-th smallest vertex is
// (-1)^i. result[0] has zero rows. Length dim+1 (empty for the empty
// complex).
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k);

// Unreduced homology ranks: betti[k] for k = 0..dim (so betti[0] counts the
// connected components). Over the integers, torsion[k] lists the invariant
// factors > 1 of H_k, ascending; over a field torsion is empty.
struct HomologyProfile {
    Coefficients ring;
    std::vector<long long> betti;
    std::vector<std::vector<long long>> torsion;
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology(const SimplicialComplex& k, Coefficients ring);

// Checks that the link of every nonempty face of dimension < d has the
// homology profile of a sphere of the matching dimension (two points for
// ridges). The witness on failure is the offending face, with a short reason.
struct ManifoldCheck {
    bool is_manifold = false;
    std::optional<VertexSet> witness;
    std::string reason;
};

ManifoldCheck is_homology_manifold(const SimplicialComplex& k, int d, Coefficients ring);

}  // namespace projtri
