#include "projtri/simplicial_complex.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace projtri {

namespace {

std::atomic<long long> g_face_budget{1ll << 28};

// Visits all submasks of every facet once; cost sum(2^|F|).
template <class F>
void visit_face_masks(const std::vector<VertexSet>& facets, F&& f) {
    long long budget = face_enumeration_budget();
    long long cost = 0;
    for (VertexSet facet : facets) {
        cost += 1ll << facet.size();
        if (cost > budget)
            throw FaceCountOverflow("face enumeration budget exceeded (" +
                                    std::to_string(budget) + " submask visits)");
        std::uint64_t m = facet.bits();
        // enumerate submasks of m, descending, including m and 0
        std::uint64_t sub = m;
        while (true) {
            f(VertexSet::from_bits(sub));
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
}

}  // namespace

long long face_enumeration_budget() { return g_face_budget.load(); }
void set_face_enumeration_budget(long long submask_visits) { g_face_budget.store(submask_visits); }

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    // 128-bit intermediate: r * (n - k + i) can pass 2^63 for n near 64 even
    // though every binom(n <= 64, k) fits in long long.
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<long long>(r);
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& facets) {
    std::vector<VertexSet> sets;
    sets.reserve(facets.size());
    for (const auto& f : facets) sets.push_back(VertexSet::of(f));
    return from_facet_sets(n, std::move(sets));
}

SimplicialComplex SimplicialComplex::from_facet_sets(int n, std::vector<VertexSet> facets) {
    if (n < 0 || n > 64) throw TooManyVertices("vertex count " + std::to_string(n) + " outside 0..64");
    if (n == 0) {
        if (!facets.empty() && !(facets.size() == 1 && facets[0].empty()))
            throw VertexOutOfRange("facets given for a complex on 0 vertices");
        return SimplicialComplex{};
    }
    if (facets.empty()) throw GhostVertex(1);

    VertexSet universe = VertexSet::full(n);
    VertexSet covered;
    for (VertexSet f : facets) {
        if (!f.subset_of(universe))
            throw VertexOutOfRange("facet {" + f.to_string() + "} not inside 1.." +
                                   std::to_string(n));
        covered |= f;
    }
    if (covered != universe) throw GhostVertex((universe - covered).min_vertex());

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // drop non-maximal entries
    std::vector<VertexSet> maximal;
    maximal.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
            if (i != j && facets[i].subset_of(facets[j]) && facets[i] != facets[j])
                dominated = true;
        if (!dominated) maximal.push_back(facets[i]);
    }

    SimplicialComplex K;
    K.n_ = n;
    K.facets_ = std::move(maximal);
    for (VertexSet f : K.facets_) K.max_facet_size_ = std::max(K.max_facet_size_, f.size());
    return K;
}

bool SimplicialComplex::contains_face(VertexSet sigma) const {
    if (sigma.empty()) return true;
    if (!sigma.subset_of(VertexSet::full(n_))) return false;
    for (VertexSet f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

SimplicialComplex SimplicialComplex::link(VertexSet sigma) const {
    std::vector<int> labels;
    return link(sigma, labels);
}

SimplicialComplex SimplicialComplex::link(VertexSet sigma, std::vector<int>& labels_out) const {
    if (!contains_face(sigma)) throw NotAFace("link of a non-face {" + sigma.to_string() + "}");

    std::vector<VertexSet> raw;
    VertexSet support;
    for (VertexSet f : facets_)
        if (sigma.subset_of(f)) {
            raw.push_back(f - sigma);
            support |= f - sigma;
        }

    labels_out = support.to_vector();
    if (labels_out.empty()) {
        // sigma is a facet: its link is the empty complex
        return SimplicialComplex{};
    }

    std::vector<int> compact(65, 0);
    for (std::size_t i = 0; i < labels_out.size(); ++i) compact[labels_out[i]] = static_cast<int>(i + 1);

    std::vector<VertexSet> relabeled;
    relabeled.reserve(raw.size());
    for (VertexSet f : raw) {
        VertexSet g;
        f.for_each([&](int v) { g.add(compact[v]); });
        relabeled.push_back(g);
    }
    return from_facet_sets(static_cast<int>(labels_out.size()), std::move(relabeled));
}

std::vector<std::vector<VertexSet>> SimplicialComplex::all_faces() const {
    std::vector<std::vector<VertexSet>> by_dim(std::max(dim() + 1, 0));
    std::unordered_set<std::uint64_t> seen;
    visit_face_masks(facets_, [&](VertexSet f) {
        if (f.empty()) return;
        if (seen.insert(f.bits()).second) by_dim[f.size() - 1].push_back(f);
    });
    for (auto& v : by_dim) std::sort(v.begin(), v.end());
    return by_dim;
}

FVector SimplicialComplex::f_vector() const {
    FVector f(dim() + 2, 0);
    f[0] = 1;
    auto faces = all_faces();
    for (int k = 0; k <= dim(); ++k) f[k + 1] = static_cast<long long>(faces[k].size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    FVector f = f_vector();
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 ? f[i] : -f[i]);
    return chi;
}

HVector SimplicialComplex::h_vector() const {
    int d = dim();
    for (VertexSet f : facets_)
        if (f.size() != d + 1) throw NotPure("h-vector of a non-pure complex");
    if (d < 0) throw NotPure("h-vector of the empty complex");

    FVector f = f_vector();
    HVector h(d + 2, 0);
    for (int j = 0; j <= d + 1; ++j)
        for (int i = 0; i <= j; ++i) {
            long long term = binomial(d + 1 - i, j - i) * f[i];
            h[j] += ((j - i) % 2 ? -term : term);
        }
    return h;
}

int SimplicialComplex::neighborliness() const {
    if (n_ == 0) return 0;
    for (int k = 1; k <= n_; ++k) {
        // iterate k-subsets of {1..n}
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        bool all_faces_k = true;
        while (true) {
            VertexSet s = VertexSet::of(idx);
            if (!contains_face(s)) {
                all_faces_k = false;
                break;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n_ - (k - 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!all_faces_k) return k - 1;
    }
    return n_;
}

PseudomanifoldStatus SimplicialComplex::pseudomanifold_status(int d) const {
    PseudomanifoldStatus st;
    if (dim() != d || d < 0) return st;
    for (VertexSet f : facets_)
        if (f.size() != d + 1) return st;
    st.pure = true;

    // ridge -> incident facet ids
    std::unordered_map<std::uint64_t, std::vector<int>> ridges;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        facets_[i].for_each([&](int v) {
            ridges[(facets_[i] - VertexSet::of({v})).bits()].push_back(static_cast<int>(i));
        });

    st.weak = true;
    for (const auto& [r, inc] : ridges)
        if (inc.size() != 2) {
            st.weak = false;
            break;
        }
    if (!st.weak) return st;

    // dual graph connectivity
    std::vector<std::vector<int>> adj(facets_.size());
    for (const auto& [r, inc] : ridges) {
        adj[inc[0]].push_back(inc[1]);
        adj[inc[1]].push_back(inc[0]);
    }
    std::vector<char> vis(facets_.size(), 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!vis[y]) {
                vis[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    st.strong = (reached == facets_.size());

    // orientability: propagate signs facet by facet; the incidence sign of
    // ridge F - {v} in F is (-1)^(position of v in ascending order of F)
    auto incidence_sign = [&](int facet_id, VertexSet ridge) -> int {
        VertexSet f = facets_[facet_id];
        int v = (f - ridge).min_vertex();
        int pos = (f & VertexSet::from_bits((1ull << (v - 1)) - 1)).size();
        return pos % 2 ? -1 : 1;
    };
    std::vector<int> sign(facets_.size(), 0);
    st.orientable = true;
    for (std::size_t start = 0; start < facets_.size() && st.orientable; ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::queue<int> bfs;
        bfs.push(static_cast<int>(start));
        while (!bfs.empty() && st.orientable) {
            int x = bfs.front();
            bfs.pop();
            facets_[x].for_each([&](int v) {
                VertexSet r = facets_[x] - VertexSet::of({v});
                const auto& inc = ridges[r.bits()];
                int y = inc[0] == x ? inc[1] : inc[0];
                // compatible: the two induced orientations of r disagree
                int want = -sign[x] * incidence_sign(x, r) * incidence_sign(y, r);
                if (sign[y] == 0) {
                    sign[y] = want;
                    bfs.push(y);
                } else if (sign[y] != want) {
                    st.orientable = false;
                }
            });
        }
    }
    return st;
}

Complementarity SimplicialComplex::complementarity_status(int max_vertices) const {
    int cap = std::min(max_vertices, 62);  // keep 1ull << n_ defined
    if (n_ > cap)
        throw TooManyVertices("complementarity check capped at " + std::to_string(cap) +
                              " vertices");
    // degenerate: the empty set equals its own complement and is a face
    if (n_ == 0) return Complementarity::Neither;

    std::vector<std::uint64_t> is_face((1ull << n_) / 64 + 1, 0);
    visit_face_masks(facets_, [&](VertexSet f) {
        is_face[f.bits() >> 6] |= 1ull << (f.bits() & 63);
    });

    std::uint64_t all = (1ull << n_) - 1;
    bool full = true, half = true;
    for (std::uint64_t m = 0; m <= all; ++m) {
        bool a = (is_face[m >> 6] >> (m & 63)) & 1;
        std::uint64_t c = all & ~m;
        bool b = (is_face[c >> 6] >> (c & 63)) & 1;
        if (a && b) {
            half = false;
            full = false;
            break;
        }
        if (!a && !b) full = false;
    }
    if (full) return Complementarity::Full;
    return half ? Complementarity::Half : Complementarity::Neither;
}

std::vector<long long> SimplicialComplex::dehn_sommerville_residual(int d) const {
    if (dim() != d) throw NotPure("complex is not pure of the stated dimension");
    HVector h = h_vector();  // throws NotPure unless pure
    long long chi = euler_characteristic();
    std::vector<long long> r(d + 2, 0);
    for (int i = 0; i <= d + 1; ++i) {
        long long corr = binomial(d + 1, i) * (chi - 2);
        r[i] = h[d + 1 - i] - h[i] - (i % 2 ? -corr : corr);
    }
    return r;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != n_)
        throw VertexOutOfRange("relabeling image has wrong length");
    VertexSet seen;
    for (int w : image) {
        if (w < 1 || w > n_) throw VertexOutOfRange("relabeling image out of range");
        seen.add(w);
    }
    if (seen != VertexSet::full(n_)) throw VertexOutOfRange("relabeling image not a bijection");

    std::vector<VertexSet> mapped;
    mapped.reserve(facets_.size());
    for (VertexSet f : facets_) {
        VertexSet g;
        f.for_each([&](int v) { g.add(image[v - 1]); });
        mapped.push_back(g);
    }
    return from_facet_sets(n_, std::move(mapped));
}

void SimplicialComplex::write(std::ostream& os) const {
    os << "dim " << dim() << "\n";
    os << "vertices " << n_ << "\n";
    for (VertexSet f : facets_) os << "facet " << f.to_string() << "\n";
}

SimplicialComplex SimplicialComplex::read(std::istream& is) {
    int declared_dim = -2, n = -1;
    std::vector<std::vector<int>> facets;
    std::string line;
    while (std::getline(is, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "dim") {
            if (!(ls >> declared_dim)) throw FormatError("bad dim line");
        } else if (key == "vertices") {
            if (!(ls >> n)) throw FormatError("bad vertices line");
        } else if (key == "facet") {
            std::vector<int> f;
            int v;
            while (ls >> v) f.push_back(v);
            facets.push_back(std::move(f));
        } else {
            throw FormatError("unknown key '" + key + "' in complex file");
        }
    }
    if (n < 0) throw FormatError("missing vertices line");
    SimplicialComplex K = from_facets(n, facets);
    if (declared_dim != -2 && declared_dim != K.dim())
        throw FormatError("declared dim " + std::to_string(declared_dim) +
                          " does not match facets (dim " + std::to_string(K.dim()) + ")");
    return K;
}

FVector solve_bk_fvector() {
    using boost::multiprecision::cpp_rational;
    const int d = 8, nv = 15;
    const cpp_rational chi = 3;

    // unknowns x_0..x_9 stand for f_{-1}..f_8
    const int m = 10;
    std::vector<std::vector<cpp_rational>> rows;  // each row: m coefficients + rhs

    // f_{i-1} = binom(15, i) for i = 0..5
    for (int i = 0; i <= 5; ++i) {
        std::vector<cpp_rational> r(m + 1, 0);
        r[i] = 1;
        r[m] = binomial(nv, i);
        rows.push_back(std::move(r));
    }

    // h_{d+1-i} - h_i = (-1)^i binom(d+1, i) (chi - 2), i = 0..d+1,
    // expanded through h_j = sum_i (-1)^(j-i) binom(d+1-i, j-i) f_{i-1}
    auto h_coeffs = [&](int j) {
        std::vector<cpp_rational> c(m, 0);
        for (int i = 0; i <= j; ++i) {
            cpp_rational t = binomial(d + 1 - i, j - i);
            c[i] += ((j - i) % 2 ? -t : t);
        }
        return c;
    };
    for (int i = 0; i <= d + 1; ++i) {
        std::vector<cpp_rational> r(m + 1, 0);
        auto a = h_coeffs(d + 1 - i), b = h_coeffs(i);
        for (int k = 0; k < m; ++k) r[k] = a[k] - b[k];
        cpp_rational rhs = binomial(d + 1, i) * (chi - 2);
        r[m] = (i % 2 ? -rhs : rhs);
        rows.push_back(std::move(r));
    }

    // Gaussian elimination; track rank and detect inconsistency
    int rank = 0;
    for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        cpp_rational p = rows[rank][col];
        for (auto& x : rows[rank]) x /= p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            cpp_rational f = rows[r][col];
            for (int k = col; k <= m; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][m] != 0) throw Error("f-vector system inconsistent");
    if (rank != m) throw Error("f-vector system underdetermined: kernel dimension " +
                               std::to_string(m - rank));

    FVector f(m, 0);
    for (int r = 0; r < rank; ++r) {
        int lead = 0;
        while (rows[r][lead] == 0) ++lead;
        cpp_rational val = rows[r][m];
        if (denominator(val) != 1) throw Error("f-vector solution not integral");
        f[lead] = static_cast<long long>(numerator(val));
    }
    return f;
}

}  // namespace projtri
