#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "projtri/errors.hpp"

namespace projtri {

// Subset of the vertex universe {1,...,64}. Vertex v lives in bit v-1, so the
// numeric order on the underlying words is the canonical order used for facet
// lists everywhere in this library.
class VertexSet {
  public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t b) {
        VertexSet s;
        s.bits_ = b;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    // {1,...,n}
    static constexpr VertexSet full(int n) {
        return from_bits(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }

    VertexSet& add(int v) {
        check(v);
        bits_ |= 1ull << (v - 1);
        return *this;
    }

    VertexSet& remove(int v) {
        check(v);
        bits_ &= ~(1ull << (v - 1));
        return *this;
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Smallest element; set must be nonempty.
    int min_vertex() const { return std::countr_zero(bits_) + 1; }
    // Largest element; set must be nonempty.
    int max_vertex() const { return 64 - std::countl_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return from_bits(bits_ ^ o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        return a.bits_ <=> b.bits_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b) + 1);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // "1 4 7" style, elements ascending; "{}" for the empty set.
    std::string to_string() const {
        if (empty()) return "{}";
        std::string s;
        for_each([&](int v) {
            if (!s.empty()) s += ' ';
            s += std::to_string(v);
        });
        return s;
    }

  private:
    static void check(int v) {
        if (v < 1 || v > 64)
            throw VertexOutOfRange("vertex label " + std::to_string(v) + " outside 1..64");
    }

    std::uint64_t bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const {
        std::uint64_t x = s.bits();
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ull;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace projtri
