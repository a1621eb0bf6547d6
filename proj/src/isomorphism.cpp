#include "projtri/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

namespace projtri {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// Label-free per-vertex keys: face-count-by-dimension vectors refined twice
// by the multiset of neighbor keys.
std::vector<std::uint64_t> vertex_invariants(const SimplicialComplex& k) {
    int n = k.vertex_count();
    std::vector<std::uint64_t> key(n, 0x9ae16a3b2f90404full);
    if (n == 0) return key;

    auto faces = k.all_faces();
    std::vector<std::vector<std::uint64_t>> counts(n,
                                                   std::vector<std::uint64_t>(faces.size(), 0));
    for (int q = 0; q < static_cast<int>(faces.size()); ++q)
        for (VertexSet f : faces[q])
            f.for_each([&](int v) { ++counts[v - 1][q]; });
    for (int v = 0; v < n; ++v) {
        std::uint64_t h = 0x9ae16a3b2f90404full;
        for (std::uint64_t c : counts[v]) h = mix(h, c);
        key[v] = h;
    }

    // adjacency from the edges
    std::vector<VertexSet> nbr(n);
    if (faces.size() > 1)
        for (VertexSet e : faces[1]) {
            auto vs = e.to_vector();
            nbr[vs[0] - 1].add(vs[1]);
            nbr[vs[1] - 1].add(vs[0]);
        }

    for (int round = 0; round < 2; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> around;
            nbr[v].for_each([&](int w) { around.push_back(key[w - 1]); });
            std::sort(around.begin(), around.end());
            std::uint64_t h = mix(0x51afd7ed558ccdull, key[v]);
            for (std::uint64_t x : around) h = mix(h, x);
            next[v] = h;
        }
        key = std::move(next);
    }
    return key;
}

struct IsoSearch {
    const SimplicialComplex& k1;
    const SimplicialComplex& k2;
    std::vector<std::uint64_t> inv1, inv2;
    int n = 0;
    std::vector<int> order;    // k1 vertices, most constrained first
    std::vector<int> map12;    // 1-based images, 0 while unassigned
    VertexSet used2;
    bool collect_all = false;
    std::vector<std::vector<int>> found;

    IsoSearch(const SimplicialComplex& a, const SimplicialComplex& b) : k1(a), k2(b) {
        n = k1.vertex_count();
        inv1 = vertex_invariants(k1);
        inv2 = vertex_invariants(k2);
        map12.assign(n, 0);

        std::map<std::uint64_t, int> class_size;
        for (auto x : inv1) ++class_size[x];
        order.resize(n);
        for (int v = 1; v <= n; ++v) order[v - 1] = v;
        std::sort(order.begin(), order.end(), [&](int a_, int b_) {
            auto ka = std::make_tuple(class_size[inv1[a_ - 1]], inv1[a_ - 1], a_);
            auto kb = std::make_tuple(class_size[inv1[b_ - 1]], inv1[b_ - 1], b_);
            return ka < kb;
        });
    }

    bool feasible() {
        if (k1.vertex_count() != k2.vertex_count()) return false;
        if (k1.dim() != k2.dim()) return false;
        if (k1.facet_count() != k2.facet_count()) return false;
        auto sizes = [](const SimplicialComplex& k) {
            std::vector<int> s;
            for (VertexSet f : k.facets()) s.push_back(f.size());
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sizes(k1) != sizes(k2)) return false;
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        return s1 == s2;
    }

    // partial images of k1 facets touching v must stay faces of k2; full
    // images must be facets
    bool consistent(int v) {
        const auto& facets2 = k2.facets();
        for (VertexSet f : k1.facets()) {
            if (!f.contains(v)) continue;
            VertexSet img;
            bool complete = true;
            f.for_each([&](int u) {
                if (map12[u - 1])
                    img.add(map12[u - 1]);
                else
                    complete = false;
            });
            if (complete) {
                if (!std::binary_search(facets2.begin(), facets2.end(), img)) return false;
            } else if (!k2.contains_face(img)) {
                return false;
            }
        }
        return true;
    }

    bool dfs(int pos) {
        if (pos == n) {
            found.push_back(map12);
            return !collect_all;
        }
        int v = order[pos];
        for (int w = 1; w <= n; ++w) {
            if (used2.contains(w) || inv2[w - 1] != inv1[v - 1]) continue;
            map12[v - 1] = w;
            used2.add(w);
            if (consistent(v) && dfs(pos + 1)) return true;
            used2.remove(w);
            map12[v - 1] = 0;
        }
        return false;
    }
};

bool transports_facets(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::vector<int>& mapping) {
    std::vector<VertexSet> image;
    for (VertexSet f : k1.facets()) {
        VertexSet g;
        f.for_each([&](int v) { g.add(mapping[v - 1]); });
        image.push_back(g);
    }
    std::sort(image.begin(), image.end());
    return image == k2.facets();
}

}  // namespace

std::optional<IsoCertificate> are_isomorphic(const SimplicialComplex& k1,
                                             const SimplicialComplex& k2) {
    if (k1.vertex_count() == 0 && k2.vertex_count() == 0) return IsoCertificate{{}, true};
    IsoSearch s(k1, k2);
    if (!s.feasible()) return std::nullopt;
    if (!s.dfs(0)) return std::nullopt;
    IsoCertificate cert;
    cert.mapping = s.found.front();
    cert.verified = transports_facets(k1, k2, cert.mapping);
    if (!cert.verified) throw Error("isomorphism search produced an unverified mapping");
    return cert;
}

PermGroup symmetry_group(const SimplicialComplex& k) {
    if (k.vertex_count() == 0) return PermGroup::trivial(0);
    IsoSearch s(k, k);
    s.collect_all = true;
    s.dfs(0);
    std::vector<Permutation> autos;
    for (auto& img : s.found) {
        if (!transports_facets(k, k, img)) throw Error("automorphism candidate failed transport");
        autos.push_back(Permutation::from_images(img));
    }
    return PermGroup::generate(k.vertex_count(), std::move(autos));
}

namespace {

struct CanonSearch {
    const SimplicialComplex& k;
    int n;
    int nf;
    // label_class[l-1]: invariant class that must receive label l
    std::vector<int> label_class;
    std::vector<int> vertex_class;
    std::vector<std::uint64_t> masks;     // partial encodings, parallel to facets
    std::vector<int> label_of;            // per vertex, 0 while unassigned
    std::vector<std::uint64_t> incumbent;  // sorted full encoding, empty until first leaf
    std::vector<std::uint64_t> scratch;

    explicit CanonSearch(const SimplicialComplex& kk) : k(kk) {
        n = k.vertex_count();
        nf = static_cast<int>(k.facets().size());
        masks.assign(nf, 0);
        label_of.assign(n, 0);

        auto inv = vertex_invariants(k);
        std::vector<std::uint64_t> keys(inv.begin(), inv.end());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        vertex_class.resize(n);
        for (int v = 0; v < n; ++v)
            vertex_class[v] =
                static_cast<int>(std::lower_bound(keys.begin(), keys.end(), inv[v]) - keys.begin());
        // classes in key order receive consecutive label blocks from 1 up
        label_class.reserve(n);
        for (std::size_t c = 0; c < keys.size(); ++c)
            for (int v = 0; v < n; ++v)
                if (vertex_class[v] == static_cast<int>(c)) label_class.push_back(static_cast<int>(c));
    }

    // The canonical labeling minimizes the sequence of sorted bit-plane
    // vectors (masks >> s for s = n-1 down to 0). Truncation is monotone, so
    // shifting the sorted masks componentwise gives each sorted plane, and a
    // plane at shift s only depends on labels above s: comparing all assigned
    // planes against the current incumbent yields a sound bound. Comparing a
    // single plane would not, because masks tied in the assigned bits can
    // later sort either way on the unassigned ones.
    int plane_compare(int low_shift) {
        scratch = masks;
        std::sort(scratch.begin(), scratch.end());
        for (int s = n - 1; s >= low_shift; --s)
            for (int i = 0; i < nf; ++i) {
                std::uint64_t mine = scratch[i] >> s, ref = incumbent[i] >> s;
                if (mine != ref) return mine < ref ? -1 : 1;
            }
        return 0;
    }

    void assign(int v, int label) {
        label_of[v - 1] = label;
        const auto& facets = k.facets();
        for (int i = 0; i < nf; ++i)
            if (facets[i].contains(v)) masks[i] |= 1ull << (label - 1);
    }

    void unassign(int v, int label) {
        label_of[v - 1] = 0;
        const auto& facets = k.facets();
        for (int i = 0; i < nf; ++i)
            if (facets[i].contains(v)) masks[i] &= ~(1ull << (label - 1));
    }

    void dfs(int label) {  // labels assigned from n down to 1
        if (label == 0) {
            if (incumbent.empty()) {
                scratch = masks;
                std::sort(scratch.begin(), scratch.end());
                incumbent = scratch;
            } else if (plane_compare(0) < 0) {
                incumbent = scratch;  // plane_compare left the sorted masks here
            }
            return;
        }
        int cls = label_class[label - 1];
        for (int v = 1; v <= n; ++v) {
            if (label_of[v - 1] || vertex_class[v - 1] != cls) continue;
            assign(v, label);
            if (incumbent.empty() || plane_compare(label - 1) <= 0) dfs(label - 1);
            unassign(v, label);
        }
    }
};

}  // namespace

SimplicialComplex canonical_form(const SimplicialComplex& k) {
    if (k.vertex_count() == 0) return k;
    CanonSearch s(k);
    s.dfs(s.n);
    std::vector<VertexSet> facets;
    facets.reserve(s.incumbent.size());
    for (std::uint64_t m : s.incumbent) facets.push_back(VertexSet::from_bits(m));
    return SimplicialComplex::from_facet_sets(k.vertex_count(), std::move(facets));
}

std::string canonical_hash(const SimplicialComplex& k) {
    SimplicialComplex c = canonical_form(k);
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto eat = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    eat(static_cast<std::uint64_t>(c.vertex_count()));
    for (VertexSet f : c.facets()) eat(f.bits());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace projtri
