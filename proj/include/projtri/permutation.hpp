#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "projtri/vertex_set.hpp"

namespace projtri {

// Permutation of {1,...,n}, n <= 64. Composition is function composition:
// (a * b)(x) = a(b(x)).
class Permutation {
  public:
    // identity on {1..n}
    explicit Permutation(int n = 0);

    // images[i] is the image of i+1; must be a bijection.
    static Permutation from_images(std::vector<int> images);

    // Disjoint-cycle notation, e.g. "(1 3 2)(4 5)"; commas between entries
    // also accepted. Points not mentioned are fixed. Cycles need not be
    // disjoint; they compose left to right as written, i.e. "(1 2)(2 3)" is
    // the product (1 2) * (2 3).
    static Permutation from_cycles(int n, std::string_view text);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v - 1]; }
    VertexSet operator()(VertexSet s) const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    bool is_identity() const;
    long long order() const;

    // cycle length -> number of cycles of that length (fixed points included
    // as length 1)
    std::map<int, int> cycle_type() const;
    VertexSet fixed_points() const;

    // Disjoint-cycle string; cycles start at and are ordered by their minimum
    // element; fixed points omitted; "()" for the identity.
    std::string cycle_string() const;

    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

  private:
    std::vector<int> img_;
};

}  // namespace projtri
