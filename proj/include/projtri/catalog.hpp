#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "projtri/perm_group.hpp"
#include "projtri/simplicial_complex.hpp"

namespace projtri {

// Reference complexes -------------------------------------------------------

// Boundary of the k-dimensional simplex on vertices 1..k+1: facets are all
// k-element subsets; dimension k-1. k >= 1.
SimplicialComplex boundary_simplex(int k);

// boundary_simplex(k) together with the isolated vertex k+2.
SimplicialComplex pt_disjoint_boundary(int k);

// Icosahedron boundary: 12 vertices, 20 triangles, poles 1 and 12,
// upper ring 2..6, lower ring 7..11.
SimplicialComplex icosahedron();

// Quotient of the icosahedron by its antipodal involution: the 6-vertex real
// projective plane. Vertex i of the quotient is the antipodal vertex pair
// listed by antipodal_pairs()[i-1].
SimplicialComplex rp2_6();
std::array<VertexSet, 6> antipodal_pairs();

// The 9-vertex 4-dimensional complex projective plane, on the affine plane
// over F_3. Facets are the 27 unions of two distinct lines through a common
// point avoiding the "special" parallel class (the three horizontal lines
// y = const), plus the 9 sets (full special line) + (special line minus a
// point).
SimplicialComplex cp2_9();

struct AffinePoint {
    int x = 0, y = 0;  // coordinates in {0,1,2}
    friend bool operator==(AffinePoint, AffinePoint) = default;
};

// vertex <-> affine point of F_3^2; vertex_of({x,y}) = 1 + x + 3y
int vertex_of(AffinePoint p);
AffinePoint point_of(int v);
std::array<AffinePoint, 9> vertex_map();

// Full symmetry group of cp2_9: order 54, the maps
// (x, y) -> (±x + c y + a, y + b).
PermGroup sym_cp2_9();

// Index-2 subgroup of sym_cp2_9: the 27 maps with +x. Transitive on the 9
// vertices, exponent 3, nonabelian.
PermGroup heisenberg_on_9();

// Catalog of 27 group actions on 27 points --------------------------------

struct CatalogEntry {
    std::string name;                // group structure, plus orbit signature when ambiguous
    PermGroup group;                 // degree 27
    std::vector<int> orbit_lengths;  // descending; validated at construction
};

// Every entry is checked at construction time: degree 27, stated group order,
// stated orbit lengths. Throws Error on any mismatch.
std::vector<CatalogEntry> table1_actions();

// Actions that the symmetry filter must reject, for control tests:
// a C6 (element of order 6) and a regular C2^4 (order-16 2-group).
PermGroup planted_c6_action();
PermGroup planted_c2_4_action();

// Q8 acting on itself by left multiplication (degree 8), for the
// orientation-sign lemma and its C2^3 comparison group.
PermGroup q8_regular();
PermGroup c2_3_regular();

// Seed data for the 15-vertex search: the order-4 permutation
// (1 3 2 4)(5 7 6 8)(9 11 10 12) together with twelve 9-element seed facets
// whose closure under the permutation is a clean partial complex.
std::pair<Permutation, std::vector<VertexSet>> c4_seed_configuration();

}  // namespace projtri
