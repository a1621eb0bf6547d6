#include "projtri/homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace projtri {

BigMatrix::BigMatrix(const IntMatrix& m) : BigMatrix(m.rows, m.cols) {
    for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = m.a[i];
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
    BigMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace {

BigMatrix identity(int n) {
    BigMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

}  // namespace

SmithResult smith_normal_form(BigMatrix m, bool track_transforms) {
    SmithResult res;
    if (track_transforms) {
        res.left = identity(m.rows);
        res.right = identity(m.cols);
    }

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        if (res.left)
            for (int c = 0; c < res.left->cols; ++c) std::swap(res.left->at(i, c), res.left->at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        if (res.right)
            for (int r = 0; r < res.right->rows; ++r)
                std::swap(res.right->at(r, i), res.right->at(r, j));
    };
    // row[i] += f * row[j]
    auto add_row = [&](int i, int j, const BigInt& f) {
        for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
        if (res.left)
            for (int c = 0; c < res.left->cols; ++c) res.left->at(i, c) += f * res.left->at(j, c);
    };
    auto add_col = [&](int i, int j, const BigInt& f) {
        for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
        if (res.right)
            for (int r = 0; r < res.right->rows; ++r)
                res.right->at(r, i) += f * res.right->at(r, j);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
        if (res.left)
            for (int c = 0; c < res.left->cols; ++c) res.left->at(i, c) = -res.left->at(i, c);
    };

    int t = 0;
    int bound = std::min(m.rows, m.cols);
    while (t < bound) {
        // smallest nonzero entry in the remaining block becomes the pivot
        int pr = -1, pc = -1;
        BigInt best;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                if (m.at(r, c) == 0) continue;
                BigInt v = abs(m.at(r, c));
                if (pr < 0 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // block is zero
        swap_rows(t, pr);
        swap_cols(t, pc);
        if (m.at(t, t) < 0) negate_row(t);

        bool clean = true;
        for (int r = t + 1; r < m.rows; ++r) {
            if (m.at(r, t) == 0) continue;
            BigInt q = m.at(r, t) / m.at(t, t);
            if (q != 0) add_row(r, t, -q);
            if (m.at(r, t) != 0) clean = false;  // remainder survives; new smaller entry
        }
        for (int c = t + 1; c < m.cols; ++c) {
            if (m.at(t, c) == 0) continue;
            BigInt q = m.at(t, c) / m.at(t, t);
            if (q != 0) add_col(c, t, -q);
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // re-pick pivot; |entries| strictly shrank

        // pivot must divide the whole remaining block for the invariant
        // factor chain; drag a bad row up and restart the step
        bool divides_all = true;
        for (int r = t + 1; r < m.rows && divides_all; ++r)
            for (int c = t + 1; c < m.cols; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    add_row(t, r, 1);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        ++t;
    }

    res.rank = t;
    for (int i = 0; i < t; ++i) res.diagonal.push_back(m.at(i, i));
    return res;
}

int rank_mod_p(const IntMatrix& m, int p) {
    std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = ((m.at(r, c) % p) + p) % p;

    auto inv_mod = [&](long long x) {
        // p is prime; Fermat
        long long e = p - 2, base = x % p, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };

    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        long long inv = inv_mod(a[rank][col]);
        for (int c = col; c < m.cols; ++c) a[rank][c] = a[rank][c] * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            long long f = a[r][col];
            for (int c = col; c < m.cols; ++c)
                a[r][c] = ((a[r][c] - f * a[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k) {
    int d = k.dim();
    std::vector<IntMatrix> out;
    if (d < 0) return out;
    auto faces = k.all_faces();

    out.resize(d + 1);
    out[0].rows = 0;
    out[0].cols = static_cast<int>(faces[0].size());
    for (int q = 1; q <= d; ++q) {
        const auto& rows_faces = faces[q - 1];
        const auto& cols_faces = faces[q];
        IntMatrix& b = out[q];
        b.rows = static_cast<int>(rows_faces.size());
        b.cols = static_cast<int>(cols_faces.size());
        b.a.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
        for (int c = 0; c < b.cols; ++c) {
            VertexSet f = cols_faces[c];
            int i = 0;
            f.for_each([&](int v) {
                VertexSet sub = f - VertexSet::of({v});
                auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                int r = static_cast<int>(it - rows_faces.begin());
                b.at(r, c) = (i % 2 ? -1 : 1);
                ++i;
            });
        }
    }
    return out;
}

HomologyProfile homology(const SimplicialComplex& k, Coefficients ring) {
    HomologyProfile prof;
    prof.ring = ring;
    int d = k.dim();
    if (d < 0) return prof;

    auto bnd = boundary_matrices(k);
    std::vector<int> rank(d + 2, 0);  // rank[q] = rank of boundary map on q-chains
    std::vector<std::vector<long long>> tor(d + 1);

    for (int q = 1; q <= d; ++q) {
        if (ring.integral()) {
            SmithResult s = smith_normal_form(BigMatrix(bnd[q]));
            rank[q] = s.rank;
            for (const BigInt& x : s.diagonal)
                if (x > 1) tor[q - 1].push_back(static_cast<long long>(x));
        } else {
            rank[q] = rank_mod_p(bnd[q], ring.p);
        }
    }

    prof.betti.resize(d + 1);
    prof.torsion.resize(d + 1);
    auto faces = k.all_faces();
    for (int q = 0; q <= d; ++q) {
        prof.betti[q] = static_cast<long long>(faces[q].size()) - rank[q] - rank[q + 1];
        if (ring.integral()) prof.torsion[q] = tor[q];
    }
    return prof;
}

ManifoldCheck is_homology_manifold(const SimplicialComplex& k, int d, Coefficients ring) {
    ManifoldCheck out;
    if (k.dim() != d || d < 0) {
        out.reason = "complex is not d-dimensional";
        return out;
    }
    for (VertexSet f : k.facets())
        if (f.size() != d + 1) {
            out.witness = f;
            out.reason = "facet of dimension below d";
            return out;
        }

    auto faces = k.all_faces();
    for (int q = 0; q < d; ++q) {
        for (VertexSet sigma : faces[q]) {
            SimplicialComplex link = k.link(sigma);
            int m = d - q - 1;  // expected sphere dimension
            if (link.dim() != m) {
                out.witness = sigma;
                out.reason = "link has wrong dimension";
                return out;
            }
            HomologyProfile h = homology(link, ring);
            bool ok = true;
            for (int i = 0; i <= m && ok; ++i) {
                long long want = (m == 0) ? 2 : (i == 0 || i == m ? 1 : 0);
                if (h.betti[i] != want) ok = false;
                if (ring.integral() && !h.torsion[i].empty()) ok = false;
            }
            if (!ok) {
                out.witness = sigma;
                out.reason = "link is not a homology sphere";
                return out;
            }
        }
    }
    out.is_manifold = true;
    return out;
}

}  // namespace projtri
