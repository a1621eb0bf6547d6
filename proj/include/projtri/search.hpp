#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projtri/perm_group.hpp"
#include "projtri/simplicial_complex.hpp"

namespace projtri {

struct SearchLimits {
    std::uint64_t max_nodes = 0;  // 0 = unlimited; counts branch decisions
    double max_seconds = 0;       // 0 = unlimited
    std::string checkpoint_path;  // write periodic checkpoints when nonempty
    double checkpoint_interval_seconds = 60;
    std::string resume_path;      // reload this checkpoint before searching
    int threads = 1;              // >1 fans out the top two branch levels
};

// Enumerate the complexes on exactly n vertices, generated by (d+1)-element
// facets, that are invariant under the group, are weak pseudomanifolds of
// dimension d with at least min_facets facets, and contain at most one of
// each complementary subset pair.
struct SearchProblem {
    int d = 2;
    int n = 6;
    long long min_facets = 1;
    PermGroup group;  // degree n
    std::vector<VertexSet> seed_facets;
    SearchLimits limits;
};

struct SearchResult {
    std::vector<SimplicialComplex> complexes;  // sorted by facet lists
    std::uint64_t nodes = 0;
};

// Orbits of the group on all (d+1)-subsets of {1..n}, each orbit sorted, the
// orbit list ordered by smallest member facet.
std::vector<std::vector<VertexSet>> facet_orbits(const SearchProblem& p);

// Throws InfeasibleSeed when the seeds violate the constraints outright,
// BudgetExceeded (carrying the checkpoint path, possibly empty) when a
// node/time budget runs out, NotAnAction on a degree mismatch.
SearchResult enumerate(const SearchProblem& p);

// One representative (the canonical form) per isomorphism class, sorted by
// facet lists.
std::vector<SimplicialComplex> dedup_up_to_iso(const std::vector<SimplicialComplex>& list);

}  // namespace projtri
