#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "projtri/permutation.hpp"

namespace projtri {

// Permutation group on {1..degree} with all elements materialized, sorted by
// image tuple (so elements()[0] is the identity). Intended for small groups;
// generation throws OrderCapExceeded past the cap.
class PermGroup {
  public:
    static constexpr std::size_t kDefaultOrderCap = 1'000'000;

    static PermGroup trivial(int degree);
    static PermGroup generate(int degree, std::vector<Permutation> gens,
                              std::size_t order_cap = kDefaultOrderCap);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    bool contains(const Permutation& p) const;
    bool same_element_set(const PermGroup& other) const;
    bool is_subgroup_of(const PermGroup& other) const;
    // conjugation test by the generators of g
    bool is_normal_in(const PermGroup& g) const;
    bool is_abelian() const;

    VertexSet orbit_of(int v) const;
    // orbits ordered by minimum element
    std::vector<VertexSet> orbits() const;
    // orbit sizes, descending
    std::vector<int> orbit_lengths() const;

    PermGroup stabilizer(int v) const;

    // element order -> multiplicity
    std::map<long long, std::size_t> element_order_multiset() const;

    // All subgroups of the given order, each represented by at most
    // max_generators generators; sorted by element list. Complete for
    // subgroups generated by that many elements.
    std::vector<PermGroup> subgroups_of_order(std::size_t k, int max_generators = 3) const;

    // Every subgroup, via closure of subgroup-plus-one-element steps.
    // Exponential in general; meant for orders up to a few hundred.
    std::vector<PermGroup> all_subgroups() const;

    // Text format:
    //   degree 27
    //   gen (1 2 3)(4 5 6)
    //   ...
    // Identity group: no gen lines.
    void write(std::ostream& os) const;
    static PermGroup read(std::istream& is, std::size_t order_cap = kDefaultOrderCap);

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

  private:
    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;  // sorted
};

}  // namespace projtri
