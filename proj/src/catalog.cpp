#include "projtri/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace projtri {

namespace {

Permutation pf(int n, const std::function<int(int)>& f) {
    std::vector<int> img(n);
    for (int v = 1; v <= n; ++v) img[v - 1] = f(v);
    return Permutation::from_images(std::move(img));
}

constexpr int m3(int x) { return ((x % 3) + 3) % 3; }

// index of an element inside a sorted element list (used for regular actions)
int elem_index(const std::vector<Permutation>& sorted, const Permutation& p) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
}

CatalogEntry make_entry(std::string name, std::size_t expect_order, std::vector<int> expect_orbits,
                        std::vector<Permutation> gens) {
    CatalogEntry e;
    e.name = std::move(name);
    e.group = PermGroup::generate(27, std::move(gens));
    e.orbit_lengths = std::move(expect_orbits);
    if (e.group.order() != expect_order)
        throw Error("catalog entry " + e.name + ": order " + std::to_string(e.group.order()) +
                    ", expected " + std::to_string(expect_order));
    if (e.group.orbit_lengths() != e.orbit_lengths)
        throw Error("catalog entry " + e.name + ": orbit lengths do not match");
    return e;
}

}  // namespace

SimplicialComplex boundary_simplex(int k) {
    if (k < 1 || k > 62) throw Error("boundary_simplex wants 1 <= k <= 62");
    std::vector<VertexSet> facets;
    VertexSet all = VertexSet::full(k + 1);
    for (int v = 1; v <= k + 1; ++v) facets.push_back(all - VertexSet::of({v}));
    return SimplicialComplex::from_facet_sets(k + 1, std::move(facets));
}

SimplicialComplex pt_disjoint_boundary(int k) {
    SimplicialComplex b = boundary_simplex(k);
    std::vector<VertexSet> facets = b.facets();
    facets.push_back(VertexSet::of({k + 2}));
    return SimplicialComplex::from_facet_sets(k + 2, std::move(facets));
}

SimplicialComplex icosahedron() {
    auto u = [](int i) { return 2 + ((i % 5) + 5) % 5; };
    auto l = [](int i) { return 7 + ((i % 5) + 5) % 5; };
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 5; ++i) {
        f.push_back({1, u(i), u(i + 1)});
        f.push_back({12, l(i), l(i + 1)});
        f.push_back({u(i), u(i + 1), l(i)});
        f.push_back({l(i), l(i + 1), u(i + 1)});
    }
    return SimplicialComplex::from_facets(12, f);
}

std::array<VertexSet, 6> antipodal_pairs() {
    // antipodal map of the icosahedron above: 1 <-> 12, u(i) <-> l(i+2)
    auto u = [](int i) { return 2 + ((i % 5) + 5) % 5; };
    auto l = [](int i) { return 7 + ((i % 5) + 5) % 5; };
    std::vector<VertexSet> pairs = {VertexSet::of({1, 12})};
    for (int i = 0; i < 5; ++i) pairs.push_back(VertexSet::of({u(i), l(i + 2)}));
    std::sort(pairs.begin(), pairs.end(),
              [](VertexSet a, VertexSet b) { return a.min_vertex() < b.min_vertex(); });
    std::array<VertexSet, 6> out;
    std::copy(pairs.begin(), pairs.end(), out.begin());
    return out;
}

SimplicialComplex rp2_6() {
    SimplicialComplex ico = icosahedron();
    auto pairs = antipodal_pairs();
    std::vector<int> cls(13, 0);
    for (int i = 0; i < 6; ++i)
        pairs[i].for_each([&](int v) { cls[v] = i + 1; });
    std::vector<VertexSet> facets;
    for (VertexSet f : ico.facets()) {
        VertexSet q;
        f.for_each([&](int v) { q.add(cls[v]); });
        facets.push_back(q);
    }
    return SimplicialComplex::from_facet_sets(6, std::move(facets));
}

int vertex_of(AffinePoint p) { return 1 + m3(p.x) + 3 * m3(p.y); }
AffinePoint point_of(int v) { return {(v - 1) % 3, (v - 1) / 3}; }

std::array<AffinePoint, 9> vertex_map() {
    std::array<AffinePoint, 9> m;
    for (int v = 1; v <= 9; ++v) m[v - 1] = point_of(v);
    return m;
}

SimplicialComplex cp2_9() {
    // lines of the affine plane over F_3; the horizontal class is special
    auto line = [](int kind, int c) {  // kind 0: y=c (special), 1: x=c, 2: y=x+c, 3: y=2x+c
        VertexSet s;
        for (int t = 0; t < 3; ++t) {
            switch (kind) {
                case 0: s.add(vertex_of({t, c})); break;
                case 1: s.add(vertex_of({c, t})); break;
                case 2: s.add(vertex_of({t, t + c})); break;
                case 3: s.add(vertex_of({t, 2 * t + c})); break;
            }
        }
        return s;
    };

    std::vector<VertexSet> nonspecial;
    for (int kind = 1; kind <= 3; ++kind)
        for (int c = 0; c < 3; ++c) nonspecial.push_back(line(kind, c));

    std::vector<VertexSet> facets;
    // unions of two intersecting non-special lines
    for (std::size_t i = 0; i < nonspecial.size(); ++i)
        for (std::size_t j = i + 1; j < nonspecial.size(); ++j)
            if ((nonspecial[i] & nonspecial[j]).size() == 1)
                facets.push_back(nonspecial[i] | nonspecial[j]);
    // a special line plus the next special line minus one point
    for (int t = 0; t < 3; ++t) {
        VertexSet cur = line(0, t), next = line(0, (t + 1) % 3);
        next.for_each([&](int p) { facets.push_back(cur | (next - VertexSet::of({p}))); });
    }
    return SimplicialComplex::from_facet_sets(9, std::move(facets));
}

namespace {

// the affine maps (x, y) -> (ex + cy + a, y + b), e = +-1
Permutation cp2_map(int e, int c, int a, int b) {
    return pf(9, [&](int v) {
        AffinePoint p = point_of(v);
        return vertex_of({e * p.x + c * p.y + a, p.y + b});
    });
}

}  // namespace

PermGroup sym_cp2_9() {
    return PermGroup::generate(
        9, {cp2_map(1, 0, 1, 0), cp2_map(1, 0, 0, 1), cp2_map(1, 1, 0, 0), cp2_map(-1, 0, 0, 0)});
}

PermGroup heisenberg_on_9() {
    return PermGroup::generate(9,
                               {cp2_map(1, 0, 1, 0), cp2_map(1, 0, 0, 1), cp2_map(1, 1, 0, 0)});
}

PermGroup q8_regular() {
    // element u + 4s: u in {0=1, 1=i, 2=j, 3=k}, s = 0 for +, 1 for -
    static constexpr int wtab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int stab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto lmul = [&](int gu) {
        return pf(8, [=](int v) {
            int u = (v - 1) % 4, s = (v - 1) / 4;
            int w = wtab[gu][u], t = s ^ stab[gu][u];
            return 1 + w + 4 * t;
        });
    };
    return PermGroup::generate(8, {lmul(1), lmul(2)});
}

PermGroup c2_3_regular() {
    auto x1 = pf(8, [](int v) { return 1 + ((v - 1) ^ 1); });
    auto x2 = pf(8, [](int v) { return 1 + ((v - 1) ^ 2); });
    auto x3 = pf(8, [](int v) { return 1 + ((v - 1) ^ 4); });
    return PermGroup::generate(8, {x1, x2, x3});
}

std::vector<CatalogEntry> table1_actions() {
    std::vector<CatalogEntry> out;

    // coordinates for F_3^3 on points 1..27
    auto idx3 = [](int a, int b, int c) { return 1 + m3(a) + 3 * m3(b) + 9 * m3(c); };
    auto co3 = [](int v) { int t = v - 1; return std::array<int, 3>{t % 3, (t / 3) % 3, t / 9}; };

    // blocks of 9 = F_3^2 at bases 0, 9, 18
    auto blk9 = [](const std::function<AffinePoint(AffinePoint)>& f) {
        return pf(27, [f](int v) {
            int base = (v - 1) / 9 * 9;
            AffinePoint p = point_of(v - base);
            return base + vertex_of(f(p));
        });
    };

    // order-351: translations of F_3^3 extended by the order-13 companion
    // matrix of x^3 - x - 1, which maps (a, b, c) to (c, a + c, b)
    {
        auto t1 = pf(27, [&](int v) { auto q = co3(v); return idx3(q[0] + 1, q[1], q[2]); });
        auto mm = pf(27, [&](int v) { auto q = co3(v); return idx3(q[2], q[0] + q[2], q[1]); });
        out.push_back(make_entry("C3^3:C13", 351, {27}, {t1, mm}));
    }

    // order-72: F_3^2 affine group with Q8 point stabilizer, diagonally on
    // three blocks of 9
    {
        auto t1 = blk9([](AffinePoint p) { return AffinePoint{p.x + 1, p.y}; });
        auto t2 = blk9([](AffinePoint p) { return AffinePoint{p.x, p.y + 1}; });
        auto mi = blk9([](AffinePoint p) { return AffinePoint{-p.y, p.x}; });
        auto mj = blk9([](AffinePoint p) { return AffinePoint{p.x + p.y, p.x - p.y}; });
        out.push_back(make_entry("PSU(3,2)", 72, {9, 9, 9}, {t1, t2, mi, mj}));
    }

    // order-52: x -> x+1 and x -> 5x on two copies of Z_13, one fixed point
    {
        auto zz = [](int v) { return v <= 13 ? std::pair{v - 1, 0} : std::pair{v - 14, 13}; };
        auto c = pf(27, [&](int v) {
            if (v == 27) return 27;
            auto [x, base] = zz(v);
            return base + 1 + (x + 1) % 13;
        });
        auto d = pf(27, [&](int v) {
            if (v == 27) return 27;
            auto [x, base] = zz(v);
            return base + 1 + (5 * x) % 13;
        });
        out.push_back(make_entry("C13:C4", 52, {13, 13, 1}, {c, d}));
    }

    // order-36: translations and the order-4 rotation of F_3^2, three blocks
    {
        auto t1 = blk9([](AffinePoint p) { return AffinePoint{p.x + 1, p.y}; });
        auto t2 = blk9([](AffinePoint p) { return AffinePoint{p.x, p.y + 1}; });
        auto mi = blk9([](AffinePoint p) { return AffinePoint{-p.y, p.x}; });
        out.push_back(make_entry("C3^2:C4", 36, {9, 9, 9}, {t1, t2, mi}));
    }

    // order-27 elementary abelian, regular
    {
        auto t1 = pf(27, [&](int v) { auto q = co3(v); return idx3(q[0] + 1, q[1], q[2]); });
        auto t2 = pf(27, [&](int v) { auto q = co3(v); return idx3(q[0], q[1] + 1, q[2]); });
        auto t3 = pf(27, [&](int v) { auto q = co3(v); return idx3(q[0], q[1], q[2] + 1); });
        out.push_back(make_entry("C3^3", 27, {27}, {t1, t2, t3}));
    }

    // order-27 exponent-3 nonabelian (Heisenberg), regular via left
    // multiplication on triples with product (a,b,c)(a',b',c') =
    // (a+a', b+b', c+c'+ab')
    {
        auto g1 = pf(27, [&](int v) { auto q = co3(v); return idx3(q[0] + 1, q[1], q[2] + q[1]); });
        auto g2 = pf(27, [&](int v) { auto q = co3(v); return idx3(q[0], q[1] + 1, q[2]); });
        out.push_back(make_entry("He3", 27, {27}, {g1, g2}));
    }

    // order-27 exponent-9 nonabelian: C9:C3 with b a b^-1 = a^4, regular on
    // normal forms a^i b^j, point 1 + i + 9j
    {
        auto ga = pf(27, [](int v) {
            int i = (v - 1) % 9, j = (v - 1) / 9;
            return 1 + (i + 1) % 9 + 9 * j;
        });
        auto gb = pf(27, [](int v) {
            int i = (v - 1) % 9, j = (v - 1) / 9;
            return 1 + (4 * i) % 9 + 9 * ((j + 1) % 3);
        });
        out.push_back(make_entry("3^{1+2}_-", 27, {27}, {ga, gb}));
    }

    // order-26 dihedral on two copies of Z_13, one fixed point
    {
        auto zz = [](int v) { return v <= 13 ? std::pair{v - 1, 0} : std::pair{v - 14, 13}; };
        auto c = pf(27, [&](int v) {
            if (v == 27) return 27;
            auto [x, base] = zz(v);
            return base + 1 + (x + 1) % 13;
        });
        auto r = pf(27, [&](int v) {
            if (v == 27) return 27;
            auto [x, base] = zz(v);
            return base + 1 + (13 - x) % 13;
        });
        out.push_back(make_entry("D13", 26, {13, 13, 1}, {c, r}));
    }

    // order-22 dihedral: two copies of Z_11, two reflected pairs, one fixed
    {
        auto c = pf(27, [](int v) {
            if (v <= 11) return 1 + (v % 11);
            if (v <= 22) return 12 + ((v - 11) % 11);
            return v;
        });
        auto r = pf(27, [](int v) {
            if (v <= 11) return 1 + (12 - v) % 11;
            if (v <= 22) return 12 + (23 - v) % 11;
            if (v == 23) return 24;
            if (v == 24) return 23;
            if (v == 25) return 26;
            if (v == 26) return 25;
            return v;
        });
        out.push_back(make_entry("D11", 22, {11, 11, 2, 2, 1}, {c, r}));
    }

    // order-18 generalized dihedral over C3^2: translations and negation,
    // three blocks of 9
    {
        auto t1 = blk9([](AffinePoint p) { return AffinePoint{p.x + 1, p.y}; });
        auto t2 = blk9([](AffinePoint p) { return AffinePoint{p.x, p.y + 1}; });
        auto ng = blk9([](AffinePoint p) { return AffinePoint{-p.x, -p.y}; });
        out.push_back(make_entry("C3:S3", 18, {9, 9, 9}, {t1, t2, ng}));
    }

    // order-18 dihedral over Z_9, three blocks
    {
        auto z9 = [](int v) { return std::pair{(v - 1) % 9, (v - 1) / 9 * 9}; };
        auto c = pf(27, [&](int v) {
            auto [x, base] = z9(v);
            return base + 1 + (x + 1) % 9;
        });
        auto r = pf(27, [&](int v) {
            auto [x, base] = z9(v);
            return base + 1 + (9 - x) % 9;
        });
        out.push_back(make_entry("D9", 18, {9, 9, 9}, {c, r}));
    }

    // order-13 cyclic
    {
        auto c = pf(27, [](int v) {
            if (v <= 13) return 1 + (v % 13);
            if (v <= 26) return 14 + ((v - 13) % 13);
            return v;
        });
        out.push_back(make_entry("C13", 13, {13, 13, 1}, {c}));
    }

    // order-12 alternating group: two regular blocks plus the C3 quotient on
    // a block of three
    {
        PermGroup a4 = PermGroup::generate(
            4, {Permutation::from_cycles(4, "(1 2)(3 4)"), Permutation::from_cycles(4, "(1 2 3)")});
        const auto& el = a4.elements();
        auto lmul = [&](const Permutation& g, int tail_img_25) {
            return pf(27, [&, tail_img_25](int v) {
                if (v <= 12) return 1 + elem_index(el, g * el[v - 1]);
                if (v <= 24) return 13 + elem_index(el, g * el[v - 13]);
                if (tail_img_25 == 25) return v;                  // quotient class of g is trivial
                return 25 + (v - 25 + 1) % 3;                     // 3-cycle (25 26 27)
            });
        };
        auto gx = lmul(Permutation::from_cycles(4, "(1 2)(3 4)"), 25);
        auto gy = lmul(Permutation::from_cycles(4, "(1 2 3)"), 26);
        out.push_back(make_entry("A4", 12, {12, 12, 3}, {gx, gy}));
    }

    // order-11 cyclic: two 11-cycles, five fixed points
    {
        auto c = pf(27, [](int v) {
            if (v <= 11) return 1 + (v % 11);
            if (v <= 22) return 12 + ((v - 11) % 11);
            return v;
        });
        out.push_back(make_entry("C11", 11, {11, 11, 1, 1, 1, 1, 1}, {c}));
    }

    // order-9 elementary abelian, three blocks of 9
    {
        auto t1 = blk9([](AffinePoint p) { return AffinePoint{p.x + 1, p.y}; });
        auto t2 = blk9([](AffinePoint p) { return AffinePoint{p.x, p.y + 1}; });
        out.push_back(make_entry("C3^2", 9, {9, 9, 9}, {t1, t2}));
    }

    // order-9 cyclic, three 9-cycles
    {
        auto c = pf(27, [](int v) {
            int base = (v - 1) / 9 * 9;
            return base + 1 + (v - base) % 9;
        });
        out.push_back(make_entry("C9", 9, {9, 9, 9}, {c}));
    }

    // order-8 elementary abelian, three regular blocks, three fixed points
    {
        auto xo = [](int bit) {
            return pf(27, [bit](int v) {
                if (v > 24) return v;
                int base = (v - 1) / 8 * 8;
                return base + 1 + (((v - base) - 1) ^ bit);
            });
        };
        out.push_back(make_entry("C2^3", 8, {8, 8, 8, 1, 1, 1}, {xo(1), xo(2), xo(4)}));
    }

    // order-8 dihedral, three regular blocks (points r^i s^j at base+1+i+4j),
    // three fixed points
    {
        auto gr = pf(27, [](int v) {
            if (v > 24) return v;
            int base = (v - 1) / 8 * 8, t = v - base - 1, i = t % 4, j = t / 4;
            return base + 1 + (i + 1) % 4 + 4 * j;
        });
        auto gs = pf(27, [](int v) {
            if (v > 24) return v;
            int base = (v - 1) / 8 * 8, t = v - base - 1, i = t % 4, j = t / 4;
            return base + 1 + (4 - i) % 4 + 4 * (j ^ 1);
        });
        out.push_back(make_entry("D4/8.8.8.1.1.1", 8, {8, 8, 8, 1, 1, 1}, {gr, gs}));
    }

    // order-8 dihedral with mixed orbits: two regular blocks, the square
    // vertices 17..20, the square edges 21..24 (edge i = {i, i+1}), a
    // reflected pair, a fixed point
    {
        auto gr = pf(27, [](int v) {
            if (v <= 16) {
                int base = (v - 1) / 8 * 8, t = v - base - 1, i = t % 4, j = t / 4;
                return base + 1 + (i + 1) % 4 + 4 * j;
            }
            if (v <= 20) return 17 + (v - 16) % 4;
            if (v <= 24) return 21 + (v - 20) % 4;
            return v;
        });
        auto gs = pf(27, [](int v) {
            if (v <= 16) {
                int base = (v - 1) / 8 * 8, t = v - base - 1, i = t % 4, j = t / 4;
                return base + 1 + (4 - i) % 4 + 4 * (j ^ 1);
            }
            switch (v) {
                case 18: return 20;
                case 20: return 18;
                case 21: return 24;
                case 24: return 21;
                case 22: return 23;
                case 23: return 22;
                case 25: return 26;
                case 26: return 25;
                default: return v;
            }
        });
        out.push_back(make_entry("D4/8.8.4.4.2.1", 8, {8, 8, 4, 4, 2, 1}, {gr, gs}));
    }

    // order-8 quaternion, three regular blocks, three fixed points
    {
        static constexpr int wtab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int stab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        auto lmul = [&](int gu) {
            return pf(27, [gu](int v) {
                if (v > 24) return v;
                int base = (v - 1) / 8 * 8, t = v - base - 1, u = t % 4, s = t / 4;
                return base + 1 + wtab[gu][u] + 4 * (s ^ stab[gu][u]);
            });
        };
        out.push_back(make_entry("Q8", 8, {8, 8, 8, 1, 1, 1}, {lmul(1), lmul(2)}));
    }

    // order-6 symmetric group: three regular blocks of 6, three natural
    // blocks of 3
    {
        PermGroup s3 = PermGroup::generate(
            3, {Permutation::from_cycles(3, "(1 2 3)"), Permutation::from_cycles(3, "(1 2)")});
        const auto& el = s3.elements();
        auto act = [&](const Permutation& g) {
            return pf(27, [&](int v) {
                if (v <= 18) {
                    int base = (v - 1) / 6 * 6;
                    return base + 1 + elem_index(el, g * el[v - base - 1]);
                }
                int base = 18 + (v - 19) / 3 * 3;
                return base + g(v - base);
            });
        };
        auto ga = act(Permutation::from_cycles(3, "(1 2 3)"));
        auto gb = act(Permutation::from_cycles(3, "(1 2)"));
        out.push_back(make_entry("S3", 6, {6, 6, 6, 3, 3, 3}, {ga, gb}));
    }

    // order-4 Klein, six regular blocks of 4, three fixed points
    {
        auto xo = [](int bit) {
            return pf(27, [bit](int v) {
                if (v > 24) return v;
                int base = (v - 1) / 4 * 4;
                return base + 1 + (((v - base) - 1) ^ bit);
            });
        };
        out.push_back(
            make_entry("C2^2/4.4.4.4.4.4.1.1.1", 4, {4, 4, 4, 4, 4, 4, 1, 1, 1}, {xo(1), xo(2)}));
    }

    // order-4 Klein with the three pair-orbits having the three distinct
    // point stabilizers: five regular blocks, pairs {21,22} (stabilizer x),
    // {23,24} (stabilizer y), {25,26} (stabilizer xy), one fixed point
    {
        auto gx = pf(27, [](int v) {
            if (v <= 20) {
                int base = (v - 1) / 4 * 4;
                return base + 1 + (((v - base) - 1) ^ 1);
            }
            switch (v) {
                case 23: return 24;
                case 24: return 23;
                case 25: return 26;
                case 26: return 25;
                default: return v;
            }
        });
        auto gy = pf(27, [](int v) {
            if (v <= 20) {
                int base = (v - 1) / 4 * 4;
                return base + 1 + (((v - base) - 1) ^ 2);
            }
            switch (v) {
                case 21: return 22;
                case 22: return 21;
                case 25: return 26;
                case 26: return 25;
                default: return v;
            }
        });
        out.push_back(
            make_entry("C2^2/4.4.4.4.4.2.2.2.1", 4, {4, 4, 4, 4, 4, 2, 2, 2, 1}, {gx, gy}));
    }

    // order-4 cyclic, six 4-cycles, three fixed points
    {
        auto c = pf(27, [](int v) {
            if (v > 24) return v;
            int base = (v - 1) / 4 * 4;
            return base + 1 + (v - base) % 4;
        });
        out.push_back(make_entry("C4", 4, {4, 4, 4, 4, 4, 4, 1, 1, 1}, {c}));
    }

    // order-3 cyclic, nine 3-cycles
    {
        auto c = pf(27, [](int v) {
            int base = (v - 1) / 3 * 3;
            return base + 1 + (v - base) % 3;
        });
        out.push_back(make_entry("C3", 3, {3, 3, 3, 3, 3, 3, 3, 3, 3}, {c}));
    }

    // order-2: twelve transpositions, three fixed points
    {
        auto c = pf(27, [](int v) {
            if (v > 24) return v;
            return ((v - 1) ^ 1) + 1;
        });
        out.push_back(make_entry("C2", 2, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1}, {c}));
    }

    // trivial group
    {
        std::vector<int> ones(27, 1);
        out.push_back(make_entry("1", 1, ones, {}));
    }

    return out;
}

PermGroup planted_c6_action() {
    return PermGroup::generate(27, {Permutation::from_cycles(27, "(1 2 3 4 5 6)")});
}

PermGroup planted_c2_4_action() {
    // regular C2^4 on 1..16, eleven fixed points
    auto xo = [](int bit) {
        return pf(27, [bit](int v) {
            if (v > 16) return v;
            return 1 + ((v - 1) ^ bit);
        });
    };
    return PermGroup::generate(27, {xo(1), xo(2), xo(4), xo(8)});
}

std::pair<Permutation, std::vector<VertexSet>> c4_seed_configuration() {
    Permutation a = Permutation::from_cycles(15, "(1 3 2 4)(5 7 6 8)(9 11 10 12)");
    std::vector<VertexSet> seeds = {
        VertexSet::of({1, 2, 3, 4, 5, 6, 7, 8, 15}),
        VertexSet::of({1, 2, 3, 4, 5, 6, 7, 8, 13}),
        VertexSet::of({5, 6, 7, 8, 9, 10, 11, 12, 13}),
        VertexSet::of({5, 6, 7, 8, 9, 10, 11, 12, 14}),
        VertexSet::of({1, 2, 3, 4, 9, 10, 11, 12, 14}),
        VertexSet::of({1, 2, 3, 4, 9, 10, 11, 12, 15}),
        VertexSet::of({1, 2, 3, 4, 5, 6, 9, 10, 14}),
        VertexSet::of({1, 2, 3, 4, 5, 6, 9, 10, 15}),
        VertexSet::of({1, 2, 5, 6, 7, 8, 9, 10, 15}),
        VertexSet::of({1, 2, 5, 6, 7, 8, 9, 10, 13}),
        VertexSet::of({1, 2, 5, 6, 9, 10, 11, 12, 13}),
        VertexSet::of({1, 2, 5, 6, 9, 10, 11, 12, 14}),
    };
    return {a, seeds};
}

}  // namespace projtri
