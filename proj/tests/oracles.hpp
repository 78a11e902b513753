#pragma once
// Test-only oracles, kept independent of the library's interval/sweep code:
// plain BFS over the product's adjacency for distances and geodesic
// membership, and 2^n subset enumeration for exact mutual-visibility
// numbers on tiny graphs.

#include <bit>
#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "mutvis/grid.hpp"
#include "mutvis/vertex_set.hpp"
#include "mutvis/visibility.hpp"

namespace oracles {

using mutvis::ProductGraph;
using mutvis::Vertex;
using mutvis::VertexSet;

inline std::vector<Vertex> adjacency(const ProductGraph& g, Vertex v) {
    std::vector<Vertex> out;
    const int s = g.fx.order, t = g.fy.order;
    if (g.fx.is_cycle()) {
        out.push_back({(v.x + s - 1) % s, v.y});
        out.push_back({(v.x + 1) % s, v.y});
    } else {
        if (v.x > 0) out.push_back({v.x - 1, v.y});
        if (v.x < s - 1) out.push_back({v.x + 1, v.y});
    }
    if (g.fy.is_cycle()) {
        out.push_back({v.x, (v.y + t - 1) % t});
        out.push_back({v.x, (v.y + 1) % t});
    } else {
        if (v.y > 0) out.push_back({v.x, v.y - 1});
        if (v.y < t - 1) out.push_back({v.x, v.y + 1});
    }
    return out;
}

inline std::vector<int> bfs_dist(const ProductGraph& g, Vertex src) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> q{src};
    d[static_cast<std::size_t>(g.index(src))] = 0;
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop_front();
        for (const Vertex w : adjacency(g, u)) {
            auto& dw = d[static_cast<std::size_t>(g.index(w))];
            if (dw < 0) {
                dw = d[static_cast<std::size_t>(g.index(u))] + 1;
                q.push_back(w);
            }
        }
    }
    return d;
}

// {w : d(u,w) + d(w,v) = d(u,v)} via BFS from both endpoints
inline std::vector<Vertex> bfs_interval(const ProductGraph& g, Vertex u, Vertex v) {
    const std::vector<int> du = bfs_dist(g, u), dv = bfs_dist(g, v);
    const int d = du[static_cast<std::size_t>(g.index(v))];
    std::vector<Vertex> out;
    for (std::int64_t i = 0; i < g.vertex_count(); ++i)
        if (du[static_cast<std::size_t>(i)] + dv[static_cast<std::size_t>(i)] == d)
            out.push_back(g.vertex_at(i));
    return out;
}

// Existence of an unhindered shortest path by explicit enumeration over the
// library's brute-force path generator.
inline bool visible_by_enumeration(const ProductGraph& g, const VertexSet& m, Vertex u, Vertex v) {
    bool found = false;
    mutvis::detail::for_each_shortest_path(g, u, v, [&](const std::vector<Vertex>& path) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (m.contains(path[i])) return true;  // blocked, keep enumerating
        found = true;
        return false;  // stop
    });
    return found;
}

inline bool mvs_by_enumeration(const ProductGraph& g, const VertexSet& m) {
    const auto mem = m.members_lex();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (!visible_by_enumeration(g, m, mem[i], mem[j])) return false;
    return true;
}

// Exact mu by enumerating all 2^n subsets (n <= 20 or so).
inline std::pair<int, VertexSet> mu_by_subset_enumeration(const ProductGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    int best = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int sz = std::popcount(mask);
        if (sz <= best) continue;
        VertexSet m(g);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) m.insert(g.vertex_at(i));
        if (mvs_by_enumeration(g, m)) {
            best = sz;
            best_mask = mask;
        }
    }
    VertexSet w(g);
    for (int i = 0; i < n; ++i)
        if ((best_mask >> i) & 1) w.insert(g.vertex_at(i));
    return {best, w};
}

inline VertexSet random_set(const ProductGraph& g, double density, std::mt19937_64& rng) {
    VertexSet m(g);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::int64_t i = 0; i < g.vertex_count(); ++i)
        if (unit(rng) < density) m.insert(g.vertex_at(i));
    return m;
}

// every product graph with both factor orders in [2..maxs] x [2..maxt]
inline std::vector<ProductGraph> all_products(int maxs, int maxt) {
    std::vector<ProductGraph> out;
    using mutvis::Factor;
    for (int cx = 0; cx < 2; ++cx)
        for (int cy = 0; cy < 2; ++cy)
            for (int s = cx ? 3 : 2; s <= maxs; ++s)
                for (int t = cy ? 3 : 2; t <= maxt; ++t)
                    out.push_back(ProductGraph(cx ? Factor::cycle(s) : Factor::path(s),
                                               cy ? Factor::cycle(t) : Factor::path(t)));
    return out;
}

}  // namespace oracles
