#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "mutvis/automorphism.hpp"
#include "mutvis/visibility.hpp"
#include "oracles.hpp"

using namespace mutvis;

TEST_CASE("pair visibility basics", "[visibility]") {
    const ProductGraph p2c3(Factor::path(2), Factor::cycle(3));
    const VertexSet m1 = VertexSet::of(p2c3, {{0, 0}, {1, 1}});
    CHECK(is_visible(p2c3, m1, {0, 0}, {1, 1}));

    // Three on the grid diagonal stay pairwise visible: the corner paths
    // (0,0)-(1,0)-(2,0)-(2,1)-(2,2) and its transpose avoid the middle
    // vertex. Confirmed against explicit path enumeration below.
    const ProductGraph p3p3(Factor::path(3), Factor::path(3));
    const VertexSet diag = VertexSet::of(p3p3, {{0, 0}, {1, 1}, {2, 2}});
    const bool by_sweep = is_visible(p3p3, diag, {0, 0}, {2, 2});
    const bool by_paths = oracles::visible_by_enumeration(p3p3, diag, {0, 0}, {2, 2});
    CHECK(by_sweep == by_paths);
    CHECK(by_sweep);

    // a middle vertex plus both its lateral guards does block
    const VertexSet walled =
        VertexSet::of(p3p3, {{0, 0}, {1, 1}, {2, 2}, {1, 0}, {0, 1}, {2, 1}, {1, 2}});
    CHECK_FALSE(is_visible(p3p3, walled, {0, 0}, {2, 2}));

    const ProductGraph c4c4(Factor::cycle(4), Factor::cycle(4));
    const VertexSet m3 = VertexSet::of(c4c4, {{0, 0}, {2, 2}});
    CHECK(is_visible(c4c4, m3, {0, 0}, {2, 2}));  // antipodal pair, interval is the torus

    CHECK_THROWS_AS(is_visible(p3p3, diag, {1, 1}, {1, 1}), InputError);
    CHECK_THROWS_AS(is_visible(p3p3, diag, {0, 0}, {3, 0}), InputError);
}

TEST_CASE("whole-set verification", "[visibility]") {
    const ProductGraph p2c3(Factor::path(2), Factor::cycle(3));
    // a 4-vertex mutual-visibility set on P2 x C3: one full column plus a
    // neighbour (found by exhaustive enumeration over all 4-subsets)
    const VertexSet four = VertexSet::of(p2c3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}});
    CHECK(is_mutual_visibility_set(p2c3, four).ok);
    CHECK(is_mutual_visibility_set(p2c3, four).pairs_checked == 6);

    CHECK(is_mutual_visibility_set(p2c3, VertexSet(p2c3)).ok);  // empty set
    const VertexSet single = VertexSet::of(p2c3, {{1, 2}});
    CHECK(is_mutual_visibility_set(p2c3, single).ok);

    SECTION("no 7-subset of C3 x C3 verifies") {
        const ProductGraph g(Factor::cycle(3), Factor::cycle(3));
        for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
            if (std::popcount(mask) != 7) continue;
            VertexSet m(g);
            for (int i = 0; i < 9; ++i)
                if ((mask >> i) & 1) m.insert(g.vertex_at(i));
            CHECK_FALSE(is_mutual_visibility_set(g, m).ok);
        }
    }

    SECTION("failing pair is the lexicographic first, serial or parallel") {
        const ProductGraph g(Factor::path(5), Factor::path(5));
        const VertexSet m = VertexSet::of(
            g, {{0, 0}, {0, 2}, {0, 4}, {1, 1}, {2, 2}, {4, 0}, {4, 4}, {2, 0}});
        const VisibilityReport serial = is_mutual_visibility_set(g, m);
        const VisibilityReport parallel = is_mutual_visibility_set(g, m, 4);
        REQUIRE_FALSE(serial.ok);
        CHECK(serial.failing_pair == parallel.failing_pair);
        CHECK(serial.pairs_checked == parallel.pairs_checked);
        // lexicographically earlier pairs are all visible
        const auto [fu, fv] = *serial.failing_pair;
        const auto mem = m.members_lex();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                if (std::pair(mem[i], mem[j]) < std::pair(fu, fv))
                    CHECK(is_visible(g, m, mem[i], mem[j]));
            }
    }
}

TEST_CASE("shortest-path enumeration", "[visibility]") {
    const ProductGraph p3p3(Factor::path(3), Factor::path(3));
    CHECK(brute_force_paths(p3p3, {0, 0}, {2, 2}).size() == 6);
    const ProductGraph p2p2(Factor::path(2), Factor::path(2));
    CHECK(brute_force_paths(p2p2, {0, 0}, {1, 1}).size() == 2);
    const ProductGraph c4p2(Factor::cycle(4), Factor::path(2));
    CHECK(brute_force_paths(c4p2, {0, 0}, {2, 1}).size() == 6);

    const ProductGraph big(Factor::path(20), Factor::path(20));
    CHECK_THROWS_AS(brute_force_paths(big, {0, 0}, {19, 19}), RefusalError);

    // every enumerated path is a shortest path with unit steps
    const ProductGraph c5c4(Factor::cycle(5), Factor::cycle(4));
    for (const auto& path : brute_force_paths(c5c4, {0, 0}, {2, 2})) {
        CHECK(path.size() == static_cast<std::size_t>(dist(c5c4, {0, 0}, {2, 2})) + 1);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(dist(c5c4, path[i], path[i + 1]) == 1);
    }
}

TEST_CASE("sweep agrees with path enumeration on random sets", "[visibility]") {
    std::mt19937_64 rng(99);
    for (const ProductGraph& g : oracles::all_products(6, 6)) {
        for (int trial = 0; trial < 8; ++trial) {
            const VertexSet m = oracles::random_set(g, 0.25, rng);
            const auto mem = m.members_lex();
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j) {
                    const bool a = is_visible(g, m, mem[i], mem[j]);
                    const bool b = oracles::visible_by_enumeration(g, m, mem[i], mem[j]);
                    INFO(g.to_string() << " pair (" << mem[i].x << "," << mem[i].y << ")-("
                                       << mem[j].x << "," << mem[j].y << ")");
                    CHECK(a == b);
                }
        }
    }
}

TEST_CASE("visibility monotonicity and symmetry", "[visibility]") {
    std::mt19937_64 rng(7);
    for (const ProductGraph& g : oracles::all_products(5, 5)) {
        const int n = static_cast<int>(g.vertex_count());
        for (int trial = 0; trial < 10; ++trial) {
            VertexSet m = oracles::random_set(g, 0.3, rng);
            const Vertex u = g.vertex_at(static_cast<std::int64_t>(rng() % n));
            Vertex v = g.vertex_at(static_cast<std::int64_t>(rng() % n));
            if (u == v) continue;
            const bool vis = is_visible(g, m, u, v);
            CHECK(is_visible(g, m, v, u) == vis);
            // blockers only accumulate
            VertexSet bigger = m;
            for (int extra = 0; extra < 3; ++extra)
                bigger.insert(g.vertex_at(static_cast<std::int64_t>(rng() % n)));
            if (!vis) CHECK_FALSE(is_visible(g, bigger, u, v));
        }
    }
}

TEST_CASE("automorphisms preserve mutual visibility", "[visibility]") {
    std::mt19937_64 rng(5150);
    for (const ProductGraph& g : {ProductGraph(Factor::cycle(4), Factor::cycle(5)),
                                  ProductGraph(Factor::path(4), Factor::cycle(4)),
                                  ProductGraph(Factor::path(3), Factor::path(5)),
                                  ProductGraph(Factor::cycle(4), Factor::cycle(4))}) {
        const auto auts = automorphisms(g);
        // sanity: maps are bijections preserving adjacency
        for (const Automorphism& a : auts) {
            std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
            for (std::int64_t i = 0; i < g.vertex_count(); ++i) {
                const Vertex w = a.apply(g, g.vertex_at(i));
                REQUIRE(g.contains(w));
                seen[static_cast<std::size_t>(g.index(w))] = 1;
            }
            for (char c : seen) REQUIRE(c == 1);
        }
        for (int trial = 0; trial < 6; ++trial) {
            const VertexSet m = oracles::random_set(g, 0.2, rng);
            const bool base = is_mutual_visibility_set(g, m).ok;
            for (std::size_t ai = 0; ai < auts.size(); ai += 7) {
                VertexSet img(g);
                for (const Vertex v : m.members_lex()) img.insert(auts[ai].apply(g, v));
                CHECK(is_mutual_visibility_set(g, img).ok == base);
            }
        }
    }
}
