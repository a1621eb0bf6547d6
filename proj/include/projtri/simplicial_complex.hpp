#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "projtri/vertex_set.hpp"

namespace projtri {

// f-vector (f_{-1}, f_0, ..., f_d) with f_{-1} = 1, and
// h-vector (h_0, ..., h_{d+1}) for a pure d-complex.
using FVector = std::vector<long long>;
using HVector = std::vector<long long>;

enum class Complementarity { Full, Half, Neither };

struct PseudomanifoldStatus {
    bool pure = false;
    bool weak = false;        // pure and every ridge is in exactly two facets
    bool strong = false;      // weak and the facet adjacency graph is connected
    bool orientable = false;  // only meaningful when weak
};

// Process-wide budget on face enumeration work (number of facet submasks a
// single call may visit). Guards f_vector/all_faces/complementarity on inputs
// far outside this library's intended scale.
long long face_enumeration_budget();
void set_face_enumeration_budget(long long submask_visits);

// Finite abstract simplicial complex on vertex set {1,...,n}, n <= 64, stored
// by its inclusion-maximal faces in ascending bitmask order. Every vertex must
// lie in some facet. The default-constructed object is the empty complex
// (n = 0, faces = {the empty face}).
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Throws VertexOutOfRange / TooManyVertices / GhostVertex. Non-maximal
    // and duplicate entries are absorbed.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_facet_sets(int n, std::vector<VertexSet> facets);

    int vertex_count() const { return n_; }
    // -1 for the empty complex.
    int dim() const { return facets_.empty() ? -1 : max_facet_size_ - 1; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    long long facet_count() const { return static_cast<long long>(facets_.size()); }

    bool contains_face(VertexSet sigma) const;

    // Link of a face, with vertices relabeled to 1..m preserving order.
    // labels_out[i] is the original label of new vertex i+1.
    // Throws NotAFace.
    SimplicialComplex link(VertexSet sigma) const;
    SimplicialComplex link(VertexSet sigma, std::vector<int>& labels_out) const;

    // All faces of the complex grouped by dimension: result[k] holds the
    // k-faces in ascending bitmask order, k = 0..dim. The empty face is
    // implicit. Throws FaceCountOverflow past the enumeration budget.
    std::vector<std::vector<VertexSet>> all_faces() const;

    FVector f_vector() const;
    long long euler_characteristic() const;

    // Throws NotPure.
    HVector h_vector() const;

    // Largest k such that every k-subset of the vertex set is a face
    // (0 for the empty complex).
    int neighborliness() const;

    // Purity and ridge degrees are judged against the stated dimension d.
    PseudomanifoldStatus pseudomanifold_status(int d) const;

    // Full: for every subset sigma of V, exactly one of sigma, V - sigma is a
    // face. Half: at most one. Works by a dense indicator over all 2^n
    // subsets; throws TooManyVertices when n exceeds max_vertices.
    Complementarity complementarity_status(int max_vertices = 27) const;

    // r_i = h_{d+1-i} - h_i - (-1)^i binom(d+1, i) (chi - 2), i = 0..d+1.
    // Throws NotPure when the complex is not pure of dimension d.
    std::vector<long long> dehn_sommerville_residual(int d) const;

    // image[v-1] is the new label of vertex v; image must be a bijection on
    // {1..n}.
    SimplicialComplex relabeled(const std::vector<int>& image) const;

    bool operator==(const SimplicialComplex&) const = default;

    // Text format:
    //   dim 2
    //   vertices 6
    //   facet 1 2 3
    //   ...
    // '#' starts a comment; facet lines in canonical (ascending bitmask)
    // order. read() accepts facets in any order and re-canonicalizes.
    void write(std::ostream& os) const;
    static SimplicialComplex read(std::istream& is);

  private:
    int n_ = 0;
    int max_facet_size_ = 0;
    std::vector<VertexSet> facets_;
};

// binom(n, k) as long long (n <= 64); 0 when k < 0 or k > n.
long long binomial(int n, int k);

// Solves the linear system pinning the f-vector of a hypothetical
// 8-dimensional weak pseudomanifold on 15 vertices that satisfies
// complementarity: f_{i-1} = binom(15, i) for i <= 5 together with the
// Dehn-Sommerville relations for d = 8, chi = 3. Asserts the solution is
// unique (trivial kernel) and integral; returns (f_{-1}, ..., f_8).
FVector solve_bk_fvector();

}  // namespace projtri
