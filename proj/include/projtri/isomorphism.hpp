#pragma once

#include <optional>
#include <vector>

#include "projtri/perm_group.hpp"
#include "projtri/simplicial_complex.hpp"

namespace projtri {

// Vertex bijection carrying the facets of the first complex onto the facets
// of the second; mapping[v-1] is the image of vertex v. verified is set after
// the facet transport has been re-checked directly.
struct IsoCertificate {
    std::vector<int> mapping;
    bool verified = false;
};

std::optional<IsoCertificate> are_isomorphic(const SimplicialComplex& k1,
                                             const SimplicialComplex& k2);

// Full automorphism group of the complex.
PermGroup symmetry_group(const SimplicialComplex& k);

// Canonical representative of the isomorphism class: a deterministic
// relabeling invariant under arbitrary relabelings of the input
// (canonical_form(K) == canonical_form(K relabeled) for every permutation).
SimplicialComplex canonical_form(const SimplicialComplex& k);

// Stable hex fingerprint of the canonical form (FNV-1a over the canonical
// facet masks); used for solution filenames.
std::string canonical_hash(const SimplicialComplex& k);

}  // namespace projtri
