#include "doctest.h"

#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "projtri/catalog.hpp"
#include "projtri/errors.hpp"
#include "projtri/perm_group.hpp"

using namespace projtri;

TEST_CASE("cycle notation composes left to right") {
    Permutation p = Permutation::from_cycles(3, "(1 2)(2 3)");
    CHECK(p == Permutation::from_images({2, 3, 1}));
    CHECK(p.cycle_string() == "(1 2 3)");

    Permutation a = Permutation::from_cycles(4, "(1 2)");
    Permutation b = Permutation::from_cycles(4, "(3 4)");
    CHECK((a * b) == (b * a));
    CHECK((a * b).cycle_type() == std::map<int, int>{{2, 2}});

    CHECK(Permutation::from_cycles(5, "(1, 2, 3)")(1) == 2);  // commas allowed
    CHECK(Permutation::from_cycles(5, "") == Permutation(5));
}

TEST_CASE("permutation invariants") {
    Permutation p = Permutation::from_cycles(6, "(1 2 3)(4 5)");
    CHECK(p.order() == 6);
    CHECK(p.cycle_type() == std::map<int, int>{{3, 1}, {2, 1}, {1, 1}});
    CHECK(p.fixed_points() == VertexSet::of({6}));
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.inverse()(2) == 1);
    CHECK(p(VertexSet::of({1, 4, 6})) == VertexSet::of({2, 5, 6}));
}

TEST_CASE("bad permutations are rejected") {
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), VertexOutOfRange);
    CHECK_THROWS_AS(Permutation::from_images({1, 5, 3}), VertexOutOfRange);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 4)"), VertexOutOfRange);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "1 2"), FormatError);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2"), FormatError);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2 1)"), FormatError);
    Permutation a(3), b(4);
    CHECK_THROWS_AS(a * b, VertexOutOfRange);
}

TEST_CASE("cycle strings round trip over random permutations") {
    std::mt19937_64 rng(20240817);
    std::vector<int> img(10);
    for (int trial = 0; trial < 50; ++trial) {
        for (int i = 0; i < 10; ++i) img[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(img.begin(), img.end(), rng);
        Permutation p = Permutation::from_images(img);
        CHECK(Permutation::from_cycles(10, p.cycle_string()) == p);
    }
}

TEST_CASE("closure generates the full symmetric group") {
    PermGroup s4 = PermGroup::generate(
        4, {Permutation::from_cycles(4, "(1 2)"), Permutation::from_cycles(4, "(1 2 3 4)")});
    CHECK(s4.order() == 24);
    CHECK(s4.elements().front().is_identity());
    for (std::size_t i = 1; i < s4.elements().size(); ++i)
        CHECK(s4.elements()[i - 1] < s4.elements()[i]);
    CHECK_FALSE(s4.is_abelian());

    CHECK(PermGroup::trivial(7).order() == 1);
    CHECK_THROWS_AS(PermGroup::generate(4, {Permutation(3)}), VertexOutOfRange);
    CHECK_THROWS_AS(
        PermGroup::generate(
            4, {Permutation::from_cycles(4, "(1 2)"), Permutation::from_cycles(4, "(1 2 3 4)")},
            10),
        OrderCapExceeded);
}

TEST_CASE("orbit stabilizer bookkeeping") {
    PermGroup g = sym_cp2_9();
    REQUIRE(g.order() == 54);
    for (int v = 1; v <= 9; ++v) {
        CHECK(g.orbit_of(v).size() == 9);
        PermGroup st = g.stabilizer(v);
        CHECK(st.order() * g.orbit_of(v).size() == g.order());
        CHECK(st.is_subgroup_of(g));
    }
    CHECK(g.orbits().size() == 1);
    CHECK(g.orbit_lengths() == std::vector<int>{9});
    CHECK_THROWS_AS(g.orbit_of(10), VertexOutOfRange);

    PermGroup c2 = PermGroup::generate(6, {Permutation::from_cycles(6, "(1 2)(3 4)")});
    CHECK(c2.orbits() ==
          std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({3, 4}),
                                 VertexSet::of({5}), VertexSet::of({6})});
    CHECK(c2.orbit_lengths() == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("element order census of the regular order-8 actions") {
    CHECK(q8_regular().element_order_multiset() ==
          std::map<long long, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
    CHECK(c2_3_regular().element_order_multiset() ==
          std::map<long long, std::size_t>{{1, 1}, {2, 7}});
    CHECK(q8_regular().stabilizer(1).order() == 1);  // the action is free
    CHECK(c2_3_regular().is_abelian());
    CHECK_FALSE(q8_regular().is_abelian());
}

TEST_CASE("subgroup sweeps") {
    auto q8_c4s = q8_regular().subgroups_of_order(4, 2);
    CHECK(q8_c4s.size() == 3);
    for (const PermGroup& h : q8_c4s) CHECK(h.is_abelian());
    CHECK(q8_regular().subgroups_of_order(2, 1).size() == 1);  // the centre
    CHECK(q8_regular().subgroups_of_order(8, 2).size() == 1);

    CHECK(c2_3_regular().subgroups_of_order(4, 2).size() == 7);
    CHECK(c2_3_regular().subgroups_of_order(2, 1).size() == 7);

    // the three dihedral Sylow 2-subgroups of S4
    PermGroup s4 = PermGroup::generate(
        4, {Permutation::from_cycles(4, "(1 2)"), Permutation::from_cycles(4, "(1 2 3 4)")});
    CHECK(s4.subgroups_of_order(8, 3).size() == 3);
    CHECK(s4.subgroups_of_order(3, 1).size() == 4);
}

TEST_CASE("the full subgroup lattice of S3") {
    PermGroup s3 = PermGroup::generate(
        3, {Permutation::from_cycles(3, "(1 2)"), Permutation::from_cycles(3, "(1 2 3)")});
    auto subs = s3.all_subgroups();
    REQUIRE(subs.size() == 6);
    std::map<std::size_t, int> by_order;
    for (const PermGroup& h : subs) {
        ++by_order[h.order()];
        CHECK(h.is_subgroup_of(s3));
    }
    CHECK(by_order == std::map<std::size_t, int>{{1, 1}, {2, 3}, {3, 1}, {6, 1}});
    for (const PermGroup& h : subs)
        CHECK(h.is_normal_in(s3) == (h.order() != 2));
}

TEST_CASE("normality of the index-2 translation-shear subgroup") {
    PermGroup sym = sym_cp2_9();
    PermGroup he = heisenberg_on_9();
    CHECK(he.order() == 27);
    CHECK(he.is_subgroup_of(sym));
    CHECK(he.is_normal_in(sym));
    CHECK_FALSE(he.is_abelian());

    Permutation invol;
    for (const Permutation& e : sym.elements())
        if (e.order() == 2) invol = e;
    PermGroup c2 = PermGroup::generate(9, {invol});
    CHECK(c2.is_subgroup_of(sym));
    CHECK_FALSE(c2.is_normal_in(sym));
    CHECK(sym.same_element_set(sym));
    CHECK_FALSE(sym.same_element_set(he));
}

TEST_CASE("group text io round trip") {
    for (const PermGroup& g : {sym_cp2_9(), q8_regular(), PermGroup::trivial(5)}) {
        std::stringstream ss;
        g.write(ss);
        PermGroup back = PermGroup::read(ss);
        CHECK(back.same_element_set(g));
    }
    std::stringstream bad1("degree x\n");
    CHECK_THROWS_AS(PermGroup::read(bad1), FormatError);
    std::stringstream bad2("gen (1 2)\n");
    CHECK_THROWS_AS(PermGroup::read(bad2), FormatError);
    std::stringstream bad3("degree 3\nmystery (1 2)\n");
    CHECK_THROWS_AS(PermGroup::read(bad3), FormatError);
}
