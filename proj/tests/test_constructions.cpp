#include "hvs/constructions.hpp"

#include <doctest.h>

#include "hvs/errors.hpp"
#include "hvs/oracle.hpp"
#include "support.hpp"

using namespace hvs;
using fixtures::R;

TEST_CASE("characteristic construction tracks subhyperspace status (non-empty X)") {
    auto v = fixtures::z4();
    const std::uint32_t limit = 1u << v->size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        VectorSubset x;
        for (Elem e = 0; e < v->size(); ++e) {
            if (mask & (1u << e)) x.push_back(e);
        }
        const bool shs = is_subhyperspace(*v, x);
        for (auto variant : {CharVariant::pos, CharVariant::neg, CharVariant::both}) {
            auto g = characteristic_bfs(v, x, {"p"}, variant);
            CHECK(is_bfs_hvs_direct(g) == shs);
        }
    }
}

TEST_CASE("the empty set is the one boundary where the equivalence breaks") {
    auto v = fixtures::z4();
    CHECK_FALSE(is_subhyperspace(*v, {}));
    for (auto variant : {CharVariant::pos, CharVariant::neg, CharVariant::both}) {
        auto g = characteristic_bfs(v, {}, {"p"}, variant);
        CHECK(is_bfs_hvs_direct(g));  // all grades zero, every inequality ties
    }
}

TEST_CASE("characteristic grades per variant; `both` on a shs is normal") {
    auto v = fixtures::z4();
    auto pos = characteristic_bfs(v, {0, 2}, {"p"}, CharVariant::pos);
    CHECK(pos.pos(0, 0) == R("1"));
    CHECK(pos.pos(0, 1) == R("0"));
    CHECK(pos.neg(0, 0) == R("0"));
    auto neg = characteristic_bfs(v, {0, 2}, {"p"}, CharVariant::neg);
    CHECK(neg.pos(0, 0) == R("0"));
    CHECK(neg.neg(0, 0) == R("-1"));
    CHECK(neg.neg(0, 1) == R("0"));
    auto both = characteristic_bfs(v, {0, 2}, {"p"}, CharVariant::both);
    CHECK(is_normal(both));
    auto full = characteristic_bfs(v, v->full_carrier(), {"p"}, CharVariant::pos);
    CHECK(is_bfs_hvs_direct(full));  // constant grades
}

TEST_CASE("level promotion: golden cut, containment, re-check") {
    auto v = fixtures::z4();
    auto f = fixtures::g_base(v);

    auto g = level_promote(f, "d", R("7/10"), R("-3/5"));  // cut = {0,2}
    for (std::size_t e = 0; e < 3; ++e) {
        CHECK(g.pos(e, 0) == R("1"));
        CHECK(g.pos(e, 2) == R("1"));
        CHECK(g.neg(e, 0) == R("-1"));
        CHECK(g.pos(e, 1) == f.pos(e, 1));
        CHECK(g.neg(e, 3) == f.neg(e, 3));
    }
    CHECK(is_bfs_hvs_direct(g));
    CHECK(bfs_contains(f, g));

    // empty cut leaves the input untouched
    CHECK(level_promote(f, "c", R("1"), R("-1")) == f);

    // a cut equal to the carrier yields the constant (1,-1) set
    auto top = level_promote(f, "d", R("1/5"), R("-3/10"));
    CHECK(top == fixtures::constant_bfs(v, {"c", "d", "e"}, R("1"), R("-1")));

    CHECK_THROWS_AS(level_promote(fixtures::g_skew(v), "c", R("1/2"), R("-1/2")),
                    HypothesisError);
    CHECK_THROWS_AS(level_promote(f, "zz", R("1/2"), R("-1/2")), DomainError);
    CHECK_THROWS_AS(level_promote(f, "c", R("0"), R("-1/2")), DomainError);
}

TEST_CASE("level promotion passes the direct check at every realized grid point") {
    auto v = fixtures::z4();
    auto f = fixtures::g_base(v);
    for (std::size_t e = 0; e < f.param_count(); ++e) {
        for (Elem x = 0; x < v->size(); ++x) {
            const Rational alpha = f.pos(e, x);
            if (alpha == R("0")) continue;
            for (Elem y = 0; y < v->size(); ++y) {
                const Rational beta = f.neg(e, y);
                if (beta == R("0")) continue;
                auto g = level_promote(f, f.params()[e], alpha, beta);
                CHECK(is_bfs_hvs_direct(g));
                CHECK(bfs_contains(f, g));
            }
        }
    }
}

TEST_CASE("generated set: single spike hand trace") {
    auto v = fixtures::z4();
    auto f = fixtures::make_bfs(
        v, {"p"}, {{{"1/10", "1/10", "4/5", "1/10"}, {"-1/10", "-1/10", "-9/10", "-1/10"}}});
    auto out = generate_bfs_hvs(f);

    REQUIRE(out.shells.chain.size() == 2);
    CHECK(out.shells.seeds[0] == VectorSubset{2});
    CHECK(out.shells.chain[0] == VectorSubset{0, 2});
    CHECK(out.shells.shells[1] == VectorSubset{1, 3});
    CHECK(out.shells.pos_grades[0][0] == R("4/5"));
    CHECK(out.shells.neg_grades[0][0] == R("-9/10"));
    CHECK(out.shells.pos_grades[1][0] == R("1/10"));
    CHECK(out.shells.neg_grades[1][0] == R("-1/10"));

    auto expected = fixtures::make_bfs(
        v, {"p"}, {{{"4/5", "1/10", "4/5", "1/10"}, {"-9/10", "-1/10", "-9/10", "-1/10"}}});
    CHECK(out.result == expected);
    CHECK(is_bfs_hvs_direct(out.result));
    CHECK(bfs_contains(f, out.result));

    // independent exhaustive minimum over the 2x2 grid of realized grades
    auto grid = oracle::GradeGrid::make({R("1/10"), R("4/5")}, {R("-9/10"), R("-1/10")});
    CHECK(oracle::brute_force_min_bfs_hvs(f, grid) == out.result);
}

TEST_CASE("generated set: fixpoint on inputs that are already bfs-hvs") {
    auto v = fixtures::z4();
    auto g = fixtures::g_base(v);
    CHECK(generate_bfs_hvs(g).result == g);

    auto chi = characteristic_bfs(v, {0, 2}, {"p"}, CharVariant::pos);
    auto out = generate_bfs_hvs(chi);
    CHECK(out.result == chi);
    CHECK(out.shells.seeds[0] == VectorSubset{0, 2});
    CHECK(out.shells.chain[0] == VectorSubset{0, 2});
}

TEST_CASE("generated set: stuck constructions fail loudly") {
    auto v = fixtures::z4();
    // two parameters whose peaks are disjoint: U_0 is empty
    auto f0 = fixtures::make_bfs(
        v, {"p", "q"},
        {{{"1", "0", "0", "0"}, {"-1", "0", "0", "0"}},
         {{"0", "0", "0", "1"}, {"0", "0", "0", "-1"}}});
    CHECK_THROWS_AS(generate_bfs_hvs(f0), ConstructionStuckError);
    try {
        generate_bfs_hvs(f0);
    } catch (const ConstructionStuckError& e) {
        CHECK(e.step == 0);
        CHECK(std::string(e.what()).find("p") != std::string::npos);
    }

    // stuck one step later: peak at 0 spans {0,2}, then 1 and 3 disagree
    auto f1 = fixtures::make_bfs(
        v, {"p"}, {{{"1", "1/2", "1", "1/4"}, {"-1", "0", "-1", "-1/10"}}});
    try {
        generate_bfs_hvs(f1);
        FAIL("expected ConstructionStuckError");
    } catch (const ConstructionStuckError& e) {
        CHECK(e.step == 1);
    }
}

TEST_CASE("generated set agrees with the brute-force minimum on seeded instances") {
    auto v = fixtures::z4();
    auto grid = fixtures::grid3x3();
    int successes = 0;
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        auto f = oracle::random_bfs(v, {"p"}, grid, seed);
        try {
            auto gen = generate_bfs_hvs(f);
            CHECK(oracle::brute_force_min_bfs_hvs(f, grid) == gen.result);
            ++successes;
        } catch (const ConstructionStuckError&) {
            // reported, not repaired
        }
    }
    CHECK(successes > 0);
}

TEST_CASE("shell traces: partition, strict chain, subhyperspace steps") {
    auto grid = fixtures::grid3x3();
    int traced = 0;
    for (auto v : {fixtures::z4(), fixtures::z5()}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto f = oracle::random_bfs(v, {"p"}, grid, 9000 + seed);
            try {
                auto out = generate_bfs_hvs(f);
                const auto& t = out.shells;
                ++traced;
                REQUIRE(t.chain.size() == t.shells.size());
                CHECK(t.chain.back() == v->full_carrier());
                VectorSubset covered;
                for (std::size_t i = 0; i < t.chain.size(); ++i) {
                    CHECK(is_subhyperspace(*v, t.chain[i]));
                    if (i) {
                        CHECK(subset_of(t.chain[i - 1], t.chain[i]));
                        CHECK(t.chain[i - 1].size() < t.chain[i].size());
                    }
                    CHECK(subset_intersection(covered, t.shells[i]).empty());
                    covered = subset_union(covered, t.shells[i]);
                }
                CHECK(covered == v->full_carrier());
            } catch (const ConstructionStuckError&) {
            }
        }
    }
    CHECK(traced > 10);
}

TEST_CASE("normality golden verdicts") {
    auto v = fixtures::z4();
    CHECK(is_normal(fixtures::f_norm(v)));
    CHECK_FALSE(is_normal(fixtures::g_base(v)));  // grades at 0 stay below (1,-1)
    CHECK(is_normal(fixtures::constant_bfs(v, {"p"}, R("1"), R("-1"))));
    CHECK_THROWS_AS(is_normal(fixtures::g_skew(v)), HypothesisError);
}

TEST_CASE("shift normalization: golden values, fixpoint, idempotence") {
    auto v = fixtures::z4();
    auto g = fixtures::g_base(v);
    auto shifted = normalize_shift(g);
    CHECK(shifted.pos(0, 0) == R("1"));
    CHECK(shifted.pos(0, 1) == R("4/5"));
    CHECK(shifted.neg(0, 0) == R("-1"));
    CHECK(shifted.neg(0, 1) == R("-4/5"));
    CHECK(is_normal(shifted));
    CHECK(bfs_contains(g, shifted));
    CHECK(normalize_shift(shifted) == shifted);

    auto f = fixtures::f_norm(v);
    CHECK(normalize_shift(f) == f);
    CHECK_THROWS_AS(normalize_shift(fixtures::g_skew(v)), HypothesisError);
}

TEST_CASE("the mirrored negative shift leaves the grade range") {
    auto g = fixtures::g_base(fixtures::z4());
    CHECK_THROWS_WITH_AS(
        normalize_shift(g, NegativeShiftRule::mirror),
        "mirror shift leaves [-1,0]: parameter 'c', element '0' maps to -9/5",
        DomainError);
}

TEST_CASE("scale normalization: golden values, fixpoint, hypothesis gate") {
    auto v = fixtures::z4();
    auto g = fixtures::g_base(v);
    auto scaled = normalize_scale(g);
    CHECK(scaled.pos(0, 0) == R("1"));
    CHECK(scaled.pos(0, 1) == R("3/5"));
    CHECK(scaled.neg(0, 0) == R("-1"));
    CHECK(scaled.neg(0, 1) == R("-1/2"));
    CHECK(is_normal(scaled));
    CHECK(bfs_contains(g, scaled));
    CHECK(normalize_scale(scaled) == scaled);

    auto f = fixtures::f_norm(v);
    CHECK(normalize_scale(f) == f);

    auto zero = fixtures::constant_bfs(v, {"p"}, R("0"), R("0"));
    CHECK_THROWS_AS(normalize_scale(zero), HypothesisError);
}

TEST_CASE("every bfs-hvs peaks at the zero vector") {
    auto v = fixtures::z4();
    auto grid = fixtures::grid3x3();
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto f = oracle::random_bfs(v, {"p"}, grid, 4000 + seed);
        BipolarFuzzySoftSet g = f;
        try {
            g = generate_bfs_hvs(f).result;
        } catch (const ConstructionStuckError&) {
            continue;
        }
        ++checked;
        for (std::size_t e = 0; e < g.param_count(); ++e) {
            for (Elem x = 0; x < v->size(); ++x) {
                CHECK(g.pos(e, x) <= g.pos(e, v->zero));
                CHECK(g.neg(e, x) >= g.neg(e, v->zero));
            }
        }
    }
    CHECK(checked > 0);
}
