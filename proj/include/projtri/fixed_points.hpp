#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "projtri/perm_group.hpp"
#include "projtri/simplicial_complex.hpp"

namespace projtri {

// True when every generator of g maps the facet set of k onto itself and
// degrees match.
bool is_simplicial_action(const SimplicialComplex& k, const PermGroup& g);

// Complex whose vertices are the group orbits that happen to be faces of the
// ambient complex (ordered by minimum ambient vertex) and whose faces are the
// sets of orbits whose union is a face.
struct FixedPointComplex {
    SimplicialComplex complex;
    // vertex_labels[i] is the ambient orbit behind quotient vertex i+1
    std::vector<VertexSet> vertex_labels;

    bool operator==(const FixedPointComplex&) const = default;

    // complex format plus one "label <ambient vertices>" line per vertex
    void write(std::ostream& os) const;
    static FixedPointComplex read(std::istream& is);
};

// Throws NotAnAction unless g acts simplicially on k.
FixedPointComplex fixed_point_complex(const SimplicialComplex& k, const PermGroup& g);

// Fixed-point complex of the normal subgroup n together with the action of g
// on it induced on orbit-vertices. Throws NotNormal / NotAnAction.
std::pair<FixedPointComplex, PermGroup> induced_action(const SimplicialComplex& k,
                                                       const PermGroup& g, const PermGroup& n);

}  // namespace projtri
