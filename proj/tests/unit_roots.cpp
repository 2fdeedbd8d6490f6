#include <catch2/catch_amalgamated.hpp>

#include "weylkit/catalog.hpp"

using namespace weylkit;

namespace {

CartanScheme one_object(const Mat& c) {
    std::vector<std::vector<int>> refl(static_cast<size_t>(c.n), std::vector<int>{0});
    return standard_scheme(c, {"x"}, refl);
}

Vec v2(Int a, Int b) { return Vec{a, b}; }

}  // namespace

TEST_CASE("closures of the rank-2 one-object schemes") {
    struct Row {
        Int c12, c21;
        std::vector<Vec> pos;
    };
    std::vector<Row> rows{
        {0, 0, {v2(0, 1), v2(1, 0)}},
        {-1, -1, {v2(0, 1), v2(1, 0), v2(1, 1)}},
        {-1, -2, {v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2)}},
        {-1, -3, {v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2), v2(1, 3), v2(2, 3)}},
    };
    for (const Row& row : rows) {
        RootClosureResult r = root_closure(one_object(detail::mat2(2, row.c12, row.c21, 2)));
        REQUIRE(r.verdict == RootVerdict::Finite);
        REQUIRE(r.system.pos[0] == row.pos);
        REQUIRE(r.total_roots == 2 * row.pos.size());
    }
}

TEST_CASE("positive roots of the exceptional two-object rank-2 schemes") {
    // frozen expected output; lists are per object, sorted ascending
    RootClosureResult ra = root_closure(two_object_rank2_exceptional(-4));
    REQUIRE(ra.verdict == RootVerdict::Finite);
    std::vector<Vec> ax{v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2),
                        v2(1, 3), v2(2, 3), v2(3, 4), v2(3, 5)};
    std::vector<Vec> ay{v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2),
                        v2(1, 3), v2(1, 4), v2(2, 3), v2(2, 5)};
    REQUIRE(ra.system.pos[0] == ax);
    REQUIRE(ra.system.pos[1] == ay);

    RootClosureResult rb = root_closure(two_object_rank2_exceptional(-5));
    REQUIRE(rb.verdict == RootVerdict::Finite);
    std::vector<Vec> bx{v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2), v2(1, 3), v2(2, 3),
                        v2(3, 4), v2(3, 5), v2(4, 5), v2(4, 7), v2(5, 7), v2(5, 8)};
    std::vector<Vec> by{v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2), v2(1, 3), v2(1, 4),
                        v2(1, 5), v2(2, 3), v2(2, 5), v2(2, 7), v2(3, 7), v2(3, 8)};
    REQUIRE(rb.system.pos[0] == bx);
    REQUIRE(rb.system.pos[1] == by);
}

TEST_CASE("three-object closure sizes match the stabilized counts") {
    struct Row {
        std::array<Int, 4> q;
        size_t npos;
    };
    std::vector<Row> rows{{{1, 2, 4, 2}, 6}, {{1, 3, 6, 2}, 12}, {{1, 4, 5, 2}, 12},
                          {{1, 3, 7, 2}, 18}, {{1, 5, 5, 2}, 18}};
    for (const Row& row : rows) {
        CartanScheme s = three_object_rank2(row.q[0], row.q[1], row.q[2], row.q[3]);
        RootClosureResult r = root_closure(s);
        REQUIRE(r.verdict == RootVerdict::Finite);
        for (int a = 0; a < 3; ++a) {
            const auto& pos = r.system.pos[static_cast<size_t>(a)];
            REQUIRE(pos.size() == row.npos);
            REQUIRE(std::is_sorted(pos.begin(), pos.end()));
        }
    }
}

TEST_CASE("mixed-sign witness with replayable trail") {
    CartanScheme s = three_object_rank2(2, 1, 1, 1);
    RootClosureResult r = root_closure(s);
    REQUIRE(r.verdict == RootVerdict::NoFiniteSystem);
    REQUIRE(r.witness.has_value());
    RootWitness w = *r.witness;
    REQUIRE(w.kind == RootWitness::Kind::MixedSign);
    bool has_pos = false, has_neg = false;
    for (Int x : w.vec) {
        if (x > 0) has_pos = true;
        if (x < 0) has_neg = true;
    }
    REQUIRE((has_pos && has_neg));
    REQUIRE(replay_trail(s, w) == w.vec);
    REQUIRE_FALSE(w.describe(s).empty());

    RootWitness bad = w;
    bad.trail[0].second = (bad.trail[0].second + 1) % 3;
    REQUIRE_THROWS_AS(replay_trail(s, bad), error);
}

TEST_CASE("pair-period witness when the object orbit does not close") {
    // A2 matrices at two objects with only the first reflection swapping:
    // m = 3 is odd, so the (1 2 1 2 1 2) orbit ends at the wrong object.
    CartanScheme s = standard_scheme(detail::mat2(2, -1, -1, 2), {"x", "y"},
                                     {{1, 0}, {0, 1}});
    RootClosureResult r = root_closure(s);
    REQUIRE(r.verdict == RootVerdict::NoFiniteSystem);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness->kind == RootWitness::Kind::PairPeriod);
    REQUIRE(r.witness->m == 3);

    // the same shape with an even m closes fine
    CartanScheme b2 = standard_scheme(detail::mat2(2, -1, -2, 2), {"x", "y"},
                                      {{1, 0}, {0, 1}});
    REQUIRE(root_closure(b2).verdict == RootVerdict::Finite);
}

TEST_CASE("infinite-order witness decides capped closures") {
    CartanScheme hyper = one_object(detail::mat2(2, -1, -4, 2));
    REQUIRE(root_closure(hyper).verdict == RootVerdict::CapExceeded);
    RootClosureResult r = decide_finiteness(hyper);
    REQUIRE(r.verdict == RootVerdict::NoFiniteSystem);
    REQUIRE(r.witness->kind == RootWitness::Kind::InfiniteOrder);
    REQUIRE_FALSE(r.witness->word.empty());

    Mat aff = detail::mat_rows({{2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}});
    RootClosureResult r4 = decide_finiteness(one_object(aff));
    REQUIRE(r4.verdict == RootVerdict::NoFiniteSystem);
    REQUIRE(r4.witness->kind == RootWitness::Kind::InfiniteOrder);
}

TEST_CASE("cap semantics: per-object count of both signs, strict") {
    CartanScheme g2 = one_object(detail::mat2(2, -1, -3, 2));
    REQUIRE(root_closure(g2, 12).verdict == RootVerdict::Finite);
    REQUIRE(root_closure(g2, 11).verdict == RootVerdict::CapExceeded);
    // the probe finds nothing wrong with a genuinely finite scheme
    FinitenessOptions opt;
    opt.root_cap = 11;
    REQUIRE(decide_finiteness(g2, opt).verdict == RootVerdict::CapExceeded);
}

TEST_CASE("axiom checks accept closures and reject doctored sets") {
    CartanScheme s = three_object_rank2(1, 2, 4, 2);
    RootClosureResult r = root_closure(s);
    REQUIRE(r.verdict == RootVerdict::Finite);
    AxiomReport rep = check_axioms(s, full_root_sets(r.system));
    REQUIRE(rep.ok());
    REQUIRE((rep.r1 && rep.r2 && rep.r3 && rep.r4 && rep.m1 && rep.m2 && rep.c2));

    auto doctored = full_root_sets(r.system);
    for (auto& list : doctored) {
        list.push_back(v2(2, 0));
        list.push_back(v2(-2, 0));
    }
    AxiomReport bad = check_axioms(s, doctored);
    REQUIRE(bad.r1);
    REQUIRE_FALSE(bad.r2);
    REQUIRE_FALSE(bad.ok());
    REQUIRE_FALSE(bad.detail.empty());
}

TEST_CASE("m values count roots in a pair span") {
    auto m_of = [](const Mat& c, int i, int j) {
        CartanScheme s = one_object(c);
        RootClosureResult r = root_closure(s);
        REQUIRE(r.verdict == RootVerdict::Finite);
        return m_value(r.system, 0, i, j);
    };
    REQUIRE(m_of(detail::mat2(2, -1, -1, 2), 0, 1) == 3);
    REQUIRE(m_of(detail::mat2(2, -1, -2, 2), 0, 1) == 4);
    REQUIRE(m_of(detail::mat2(2, -1, -3, 2), 0, 1) == 6);
    Mat b3 = detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    RootClosureResult r = root_closure(one_object(b3));
    REQUIRE(r.system.pos[0].size() == 9);
    REQUIRE(m_value(r.system, 0, 0, 1) == 3);
    REQUIRE(m_value(r.system, 0, 0, 2) == 2);
    REQUIRE(m_value(r.system, 0, 1, 2) == 4);
    REQUIRE(m_value(r.system, 0, 1, 0) == 3);
    REQUIRE_THROWS_AS(m_value(r.system, 0, 1, 1), error);
}

TEST_CASE("restriction carries roots to the subscheme") {
    Mat b3 = detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CartanScheme s = one_object(b3);
    RootClosureResult r = root_closure(s);
    RootSystem sub = restrict_roots(s, r.system, {1, 2});
    REQUIRE(sub.pos[0] == std::vector<Vec>{v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2)});
    RootSystem top = restrict_roots(s, r.system, {0, 1, 2});
    REQUIRE(top.pos[0] == r.system.pos[0]);
}

TEST_CASE("components and irreducibility") {
    CartanScheme prod = one_object(detail::mat2(2, 0, 0, 2));
    RootClosureResult rp = root_closure(prod);
    REQUIRE(root_system_components(prod, rp.system) ==
            std::vector<std::vector<int>>{{0}, {1}});
    REQUIRE_FALSE(is_irreducible(prod, rp.system));

    CartanScheme a2 = one_object(detail::mat2(2, -1, -1, 2));
    RootClosureResult ra = root_closure(a2);
    REQUIRE(is_irreducible(a2, ra.system));
}

TEST_CASE("root system equivalence requires matching root data") {
    CartanScheme s1 = three_object_rank2(1, 2, 4, 2);
    CartanScheme s2 = three_object_rank2(2, 4, 2, 1);  // mirror
    CartanScheme s3 = three_object_rank2(1, 3, 6, 2);
    RootClosureResult r1 = root_closure(s1), r2 = root_closure(s2), r3 = root_closure(s3);
    REQUIRE(root_systems_equivalent(s1, r1.system, s2, r2.system).has_value());
    REQUIRE_FALSE(root_systems_equivalent(s1, r1.system, s3, r3.system).has_value());
    auto self = root_systems_equivalent(s1, r1.system, s1, r1.system);
    REQUIRE(self.has_value());
}
