#include "doctest.h"

#include "sdkappa/poset.hpp"

using namespace sdkappa;

namespace {

// deterministic little generator for property-style tests
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 11;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

Poset random_poset(Rng& rng, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.below(3) == 0) rel.emplace_back(a, b);  // a < b keeps it acyclic
    return make_poset_idx(labels, rel);
}

OrderMap random_monotone_map(Rng& rng, const Poset& v, const Poset& w) {
    // build a monotone assignment by iterating ranks upward and choosing
    // targets above the images of all predecessors
    std::vector<int> order(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return v.rank(a) < v.rank(b); });
    std::vector<int> assign(static_cast<std::size_t>(v.size()), -1);
    for (int x : order) {
        std::vector<int> candidates;
        for (int t = 0; t < w.size(); ++t) {
            bool ok = true;
            for (int p = 0; p < v.size(); ++p)
                if (assign[static_cast<std::size_t>(p)] >= 0 && v.leq(p, x) &&
                    !w.leq(assign[static_cast<std::size_t>(p)], t)) {
                    ok = false;
                    break;
                }
            if (ok) candidates.push_back(t);
        }
        REQUIRE(!candidates.empty());  // w has a maximum in the tests that use this
        assign[static_cast<std::size_t>(x)] = candidates[static_cast<std::size_t>(
            rng.below(static_cast<int>(candidates.size())))];
    }
    return OrderMap(v, w, assign);
}

}  // namespace

TEST_CASE("make_poset closes chains") {
    Poset p = make_poset({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
    CHECK(p == chain_poset(2));
    CHECK(p.leq(p.index("0"), p.index("2")));
    CHECK(p.height() == 2);
}

TEST_CASE("make_poset rejects cycles and duplicates") {
    CHECK_THROWS_AS(make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(make_poset({"a", "a"}, {}), DuplicateLabelError);
}

TEST_CASE("2x2 grid product order") {
    Poset g = product_poset(chain_poset(1), chain_poset(1));
    CHECK(g.size() == 4);
    CHECK(g.covers().size() == 4);
    CHECK(g.minimum().has_value());
    CHECK(g.label(*g.minimum()) == "(0,0)");
    CHECK(g.label(*g.maximum()) == "(1,1)");
}

TEST_CASE("down_set basics") {
    Poset c2 = chain_poset(2);
    Poset d = down_set(c2, "1");
    CHECK(d.size() == 2);
    CHECK(d.find("2") == std::nullopt);

    Poset anti = make_poset({"a", "b"}, {});
    CHECK(down_set(anti, "a").size() == 1);
    CHECK_THROWS_AS(down_set(anti, "zzz"), UnknownElement);
}

TEST_CASE("restrict_map") {
    Poset c2 = chain_poset(2);
    OrderMap id = OrderMap::identity(c2);
    OrderMap idv = restrict_map(id, "1");
    CHECK(idv.source().size() == 2);
    CHECK(idv == OrderMap::identity(down_set(c2, "1")));

    // sigma_1 : [2] -> [1], 0 |-> 0, 1,2 |-> 1
    OrderMap sigma1(chain_poset(2), chain_poset(1), std::vector<int>{0, 1, 1});
    OrderMap s1v = restrict_map(sigma1, "1");
    CHECK(s1v.source().size() == 2);
    CHECK(s1v.target().size() == 2);
    CHECK(s1v.apply_label("0") == "0");
    CHECK(s1v.apply_label("1") == "1");

    Poset v = make_poset({"x", "y"}, {{"x", "y"}});
    OrderMap cst = OrderMap::constant(v, chain_poset(0), "0");
    OrderMap cv = restrict_map(cst, "y");
    CHECK(cv.source().size() == 2);
    CHECK(cv.target().size() == 1);
}

TEST_CASE("mapping cylinder order law") {
    // P(sigma_1) contains 0'<1'<1<2 as a chain; P(sigma_0) does not relate 1' and 1.
    OrderMap sigma1(chain_poset(2), chain_poset(1), std::vector<int>{0, 1, 1});
    MappingCylinder m1 = mapping_cylinder(sigma1);
    const Poset& p1 = m1.total;
    CHECK(p1.size() == 5);
    CHECK(p1.leq(p1.index("0|1"), p1.index("1|1")));
    CHECK(p1.leq(p1.index("0|0"), p1.index("0|1")));
    CHECK(p1.leq(p1.index("1|1"), p1.index("1|2")));

    OrderMap sigma0(chain_poset(2), chain_poset(1), std::vector<int>{0, 0, 1});
    MappingCylinder m0 = mapping_cylinder(sigma0);
    CHECK_FALSE(m0.total.leq(m0.total.index("0|1"), m0.total.index("1|1")));

    // generated-order law, on random instances
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poset v = random_poset(rng, 1 + rng.below(5));
        Poset w = chain_poset(rng.below(4));
        OrderMap phi = random_monotone_map(rng, v, w);
        MappingCylinder mc = mapping_cylinder(phi);
        for (int wi = 0; wi < w.size(); ++wi)
            for (int vi = 0; vi < v.size(); ++vi) {
                bool lhs = mc.total.leq(mc.total.index("0|" + w.label(wi)),
                                        mc.total.index("1|" + v.label(vi)));
                bool rhs = w.leq(wi, phi.apply(vi));
                CHECK(lhs == rhs);
            }
        // no V element below a W element
        for (int vi = 0; vi < v.size(); ++vi)
            for (int wi = 0; wi < w.size(); ++wi)
                CHECK_FALSE(mc.total.leq(mc.total.index("1|" + v.label(vi)),
                                         mc.total.index("0|" + w.label(wi))));
        CHECK(mc.projection.compose(mc.front_in) == phi);
    }
}

TEST_CASE("P(id_[1]) is the square") {
    OrderMap id1 = OrderMap::identity(chain_poset(1));
    MappingCylinder mc = mapping_cylinder(id1);
    Poset square = product_poset(chain_poset(1), chain_poset(1));
    // brute-force order isomorphism between two 4-element posets
    std::vector<int> perm{0, 1, 2, 3};
    bool found = false;
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int a = 0; a < 4 && ok; ++a)
            for (int b = 0; b < 4 && ok; ++b)
                if (mc.total.leq(a, b) !=
                    square.leq(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
                    ok = false;
        found = found || ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
}

TEST_CASE("P(epsilon) is a chain") {
    // epsilon : [r-1] -> [0]; the cylinder is order-isomorphic to [r]
    for (int r = 1; r <= 4; ++r) {
        OrderMap eps = OrderMap::constant(chain_poset(r - 1), chain_poset(0), "0");
        MappingCylinder mc = mapping_cylinder(eps);
        CHECK(mc.total.size() == r + 1);
        CHECK(mc.total.height() == r);
        // 0|0 is the bottom, 1|i sits at height i+1
        CHECK(mc.total.rank(mc.total.index("0|0")) == 0);
        for (int i = 0; i < r; ++i)
            CHECK(mc.total.rank(mc.total.index("1|" + std::to_string(i))) == i + 1);
    }
}

TEST_CASE("iterated cylinder") {
    OrderMap sigma1(chain_poset(2), chain_poset(1), std::vector<int>{0, 1, 1});
    SUBCASE("r=1 matches the single cylinder") {
        IteratedCylinder it = iterated_cylinder({sigma1});
        MappingCylinder mc = mapping_cylinder(sigma1);
        CHECK(it.total == mc.total);
        CHECK(it.coord == mc.coord);
    }
    SUBCASE("terminal sequence is a chain") {
        std::vector<OrderMap> seq;
        for (int i = 0; i < 3; ++i)
            seq.push_back(OrderMap::identity(chain_poset(0)));
        IteratedCylinder it = iterated_cylinder(seq);
        CHECK(it.total.size() == 4);
        CHECK(it.coord.is_bijective());
    }
    SUBCASE("inductive construction agrees") {
        // P(phi_2, phi_1) = P(psi_1) with psi_1 = phi_1 o (psi_2 v 1)
        OrderMap phi2(chain_poset(1), chain_poset(2), std::vector<int>{0, 2});
        OrderMap phi1(chain_poset(2), chain_poset(1), std::vector<int>{0, 0, 1});
        IteratedCylinder direct = iterated_cylinder({phi2, phi1});
        MappingCylinder inner = mapping_cylinder(phi2);  // P(phi_2), labels "1|v","0|w"
        // psi_1 = phi_1 o (phi_2 v 1)
        OrderMap psi1 = phi1.compose(inner.projection);
        MappingCylinder outer = mapping_cylinder(psi1);
        // relabel: outer "1|1|x" -> "2|x", "1|0|x" -> "1|x", "0|y" -> "0|y"
        std::vector<std::string> relabeled;
        for (int i = 0; i < outer.total.size(); ++i) {
            std::string l = outer.total.label(i);
            if (l.rfind("1|1|", 0) == 0)
                relabeled.push_back("2|" + l.substr(4));
            else if (l.rfind("1|0|", 0) == 0)
                relabeled.push_back("1|" + l.substr(4));
            else
                relabeled.push_back(l);
        }
        Poset renamed = outer.total.relabel(relabeled);
        // compare element-for-element and relation-for-relation
        REQUIRE(renamed.size() == direct.total.size());
        for (int a = 0; a < renamed.size(); ++a) {
            int da = direct.total.index(renamed.label(a));
            for (int b = 0; b < renamed.size(); ++b) {
                int db = direct.total.index(renamed.label(b));
                CHECK(renamed.leq(a, b) == direct.total.leq(da, db));
            }
        }
    }
    SUBCASE("composition mismatch is rejected") {
        OrderMap a = OrderMap::identity(chain_poset(1));
        OrderMap b = OrderMap::identity(chain_poset(2));
        CHECK_THROWS_AS(iterated_cylinder({a, b}), CompositionMismatch);
    }
}

TEST_CASE("ideals") {
    Poset c2 = chain_poset(2);
    CHECK(is_left_ideal(c2, {"0", "1"}));
    CHECK_FALSE(is_left_ideal(c2, {"2"}));
    CHECK(is_right_ideal(c2, {"2"}));
    CHECK(is_right_ideal(c2, {}));
    // a down-set is a left ideal
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Poset v = random_poset(rng, 1 + rng.below(6));
        int x = rng.below(v.size());
        std::vector<std::string> ds;
        for (int i = 0; i < v.size(); ++i)
            if (v.leq(i, x)) ds.push_back(v.label(i));
        CHECK(is_left_ideal(v, ds));
    }
}

TEST_CASE("dismantling cores") {
    SUBCASE("cone dismantles to a point") {
        Poset c3 = chain_poset(3);
        CoreResult r = poset_core(c3);
        CHECK(r.core.size() == 1);
        CHECK(verify_dismantling(c3, r.trace, r.core));
    }
    SUBCASE("fence dismantles to a point") {
        // zig-zag a0 < b0 > a1 < b1 > a2
        Poset fence = make_poset({"a0", "b0", "a1", "b1", "a2"},
                                 {{"a0", "b0"}, {"a1", "b0"}, {"a1", "b1"}, {"a2", "b1"}});
        CoreResult r = poset_core(fence);
        CHECK(r.core.size() == 1);
        CHECK(verify_dismantling(fence, r.trace, r.core));
    }
    SUBCASE("hollow square has no beat points") {
        Poset sq = make_poset({"a", "b", "c", "d"},
                              {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
        CoreResult r = poset_core(sq);
        CHECK(r.trace.empty());
        CHECK(r.core == sq);
    }
}
