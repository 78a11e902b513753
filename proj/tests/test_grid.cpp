#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mutvis/grid.hpp"
#include "oracles.hpp"

using namespace mutvis;

TEST_CASE("circular distance", "[grid]") {
    CHECK(circ_dist(0, 0, 7) == 0);
    CHECK(circ_dist(0, 5, 7) == 2);
    CHECK(circ_dist(0, 2, 4) == 2);
    CHECK(circ_dist(5, 0, 7) == 2);  // symmetric
    CHECK_THROWS_AS(circ_dist(7, 0, 7), InputError);
    CHECK_THROWS_AS(circ_dist(0, -1, 7), InputError);
    CHECK_THROWS_AS(circ_dist(0, 1, 2), InputError);
    for (int s = 3; s <= 9; ++s)
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) CHECK(circ_dist(a, b, s) <= s / 2);
}

TEST_CASE("path intervals", "[grid]") {
    CHECK(lin_interval(2, 5).members == std::vector<int>{2, 3, 4, 5});
    CHECK(lin_interval(5, 2).members == std::vector<int>{2, 3, 4, 5});
    CHECK(lin_interval(3, 3).members == std::vector<int>{3});
}

TEST_CASE("cycle intervals", "[grid]") {
    CHECK(circ_interval(0, 2, 4).members == std::vector<int>{0, 1, 2, 3});  // antipodal
    CHECK(circ_interval(1, 3, 7).members == std::vector<int>{1, 2, 3});
    CHECK(circ_interval(0, 5, 7).members == std::vector<int>{0, 5, 6});
    CHECK(circ_interval(4, 4, 5).members == std::vector<int>{4});

    SECTION("membership predicate and cardinality law") {
        for (int s = 3; s <= 11; ++s)
            for (int k = 0; k < s; ++k)
                for (int n = 0; n < s; ++n) {
                    const CoordInterval iv = circ_interval(k, n, s);
                    CHECK(iv.contains(k));
                    CHECK(iv.contains(n));
                    const int d = circ_dist(k, n, s);
                    if (2 * d == s)
                        CHECK(iv.size() == static_cast<std::size_t>(s));
                    else
                        CHECK(iv.size() == static_cast<std::size_t>(d + 1));
                    for (int m = 0; m < s; ++m) {
                        const bool geodesic =
                            circ_dist(k, m, s) + circ_dist(m, n, s) == d;
                        CHECK(iv.contains(m) == geodesic);
                    }
                }
    }
}

TEST_CASE("product distance", "[grid]") {
    const ProductGraph p5c7(Factor::path(5), Factor::cycle(7));
    CHECK(dist(p5c7, {0, 0}, {3, 5}) == 5);
    const ProductGraph c5c5(Factor::cycle(5), Factor::cycle(5));
    CHECK(dist(c5c5, {1, 1}, {1, 1}) == 0);
    const ProductGraph c6c6(Factor::cycle(6), Factor::cycle(6));
    CHECK(dist(c6c6, {0, 0}, {3, 3}) == 6);
    CHECK_THROWS_AS(dist(p5c7, {5, 0}, {0, 0}), InputError);

    SECTION("agrees with BFS, symmetric, triangle inequality") {
        std::mt19937_64 rng(2024);
        for (const ProductGraph& g : oracles::all_products(6, 6)) {
            const int n = static_cast<int>(g.vertex_count());
            for (int i = 0; i < n; ++i) {
                const auto d = oracles::bfs_dist(g, g.vertex_at(i));
                for (int j = 0; j < n; ++j)
                    CHECK(dist(g, g.vertex_at(i), g.vertex_at(j)) == d[static_cast<std::size_t>(j)]);
            }
            for (int trial = 0; trial < 50; ++trial) {
                const Vertex a = g.vertex_at(static_cast<std::int64_t>(rng() % n));
                const Vertex b = g.vertex_at(static_cast<std::int64_t>(rng() % n));
                const Vertex c = g.vertex_at(static_cast<std::int64_t>(rng() % n));
                CHECK(dist(g, a, b) == dist(g, b, a));
                CHECK(dist(g, a, c) <= dist(g, a, b) + dist(g, b, c));
            }
        }
    }
}

TEST_CASE("product intervals", "[grid]") {
    const ProductGraph p4p4(Factor::path(4), Factor::path(4));
    auto got = interval(p4p4, {0, 0}, {2, 1});
    std::vector<Vertex> want;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 1; ++y) want.push_back({x, y});
    CHECK(got == want);

    const ProductGraph c5c5(Factor::cycle(5), Factor::cycle(5));
    CHECK(interval(c5c5, {2, 2}, {2, 2}) == std::vector<Vertex>{{2, 2}});

    const ProductGraph p3c4(Factor::path(3), Factor::cycle(4));
    CHECK(interval(p3c4, {0, 0}, {2, 2}).size() == 12);  // antipodal y wraps fully

    SECTION("equals BFS geodesic set on all small products, swap-invariant") {
        for (const ProductGraph& g : oracles::all_products(5, 5)) {
            const int n = static_cast<int>(g.vertex_count());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Vertex u = g.vertex_at(i), v = g.vertex_at(j);
                    auto iv = interval(g, u, v);
                    std::sort(iv.begin(), iv.end());
                    auto want2 = oracles::bfs_interval(g, u, v);
                    std::sort(want2.begin(), want2.end());
                    CHECK(iv == want2);
                    auto swapped = interval(g, v, u);
                    std::sort(swapped.begin(), swapped.end());
                    CHECK(swapped == want2);
                }
        }
    }
}

TEST_CASE("graph descriptors", "[grid]") {
    CHECK(ProductGraph::parse("P5xC7") == ProductGraph(Factor::path(5), Factor::cycle(7)));
    CHECK(ProductGraph::parse("c15xc15") == ProductGraph(Factor::cycle(15), Factor::cycle(15)));
    CHECK(ProductGraph::parse("P2xP2").to_string() == "P2xP2");
    CHECK(ProductGraph::parse("C3xP9").to_string() == "C3xP9");
    CHECK_THROWS_AS(ProductGraph::parse("P5C7"), InputError);
    CHECK_THROWS_AS(ProductGraph::parse("Q5xC7"), InputError);
    CHECK_THROWS_AS(ProductGraph::parse("P1xC7"), InputError);  // path needs order >= 2
    CHECK_THROWS_AS(ProductGraph::parse("P5xC2"), InputError);  // cycle needs order >= 3
    CHECK_THROWS_AS(ProductGraph::parse("P5xC7x"), InputError);
    CHECK_THROWS_AS(ProductGraph::parse(""), InputError);
    CHECK_THROWS_AS(ProductGraph::parse("P40000xC7"), InputError);  // above order cap
}
