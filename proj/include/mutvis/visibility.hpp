#pragma once
// Ground-truth mutual-visibility verification.
//
// Two vertices u, v are visible with respect to a set M when some shortest
// u,v-path has no internal vertex in M \ {u,v}. The check runs on the
// interval I(u,v) only: interval vertices layered by dist(u,.) form a DAG
// whose u->v reachability through non-members answers the question in
// O(|I(u,v)|). Antipodal cycle coordinates make the interval wrap both
// ways; the distance predicate includes both arcs automatically.

#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "mutvis/grid.hpp"
#include "mutvis/vertex_set.hpp"

namespace mutvis {

struct VisibilityReport {
    bool ok = true;
    std::optional<std::pair<Vertex, Vertex>> failing_pair;
    std::int64_t pairs_checked = 0;
};

namespace detail {

// Sweep the layered interval DAG between u and v; true iff v is reachable
// from u through vertices not blocked by `blocked(w)`.
template <class BlockedFn>
bool interval_reachable(const ProductGraph& g, Vertex u, Vertex v, BlockedFn blocked) {
    const CoordInterval ix = factor_interval(g.fx, u.x, v.x);
    const CoordInterval iy = factor_interval(g.fy, u.y, v.y);
    const int nx = static_cast<int>(ix.size()), ny = static_cast<int>(iy.size());
    const int total = dist_unchecked(g, u, v);

    // dense position maps for O(1) in-interval lookup
    std::vector<int> posx(static_cast<std::size_t>(g.fx.order), -1);
    std::vector<int> posy(static_cast<std::size_t>(g.fy.order), -1);
    for (int i = 0; i < nx; ++i) posx[static_cast<std::size_t>(ix.members[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < ny; ++i) posy[static_cast<std::size_t>(iy.members[static_cast<std::size_t>(i)])] = i;

    // bucket interval cells by distance from u
    std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(total + 1));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) {
            const Vertex w{ix.members[static_cast<std::size_t>(a)], iy.members[static_cast<std::size_t>(b)]};
            layers[static_cast<std::size_t>(dist_unchecked(g, u, w))].push_back(w);
        }

    std::vector<char> reach(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), 0);
    auto rpos = [&](Vertex w) {
        return static_cast<std::size_t>(posx[static_cast<std::size_t>(w.x)]) * static_cast<std::size_t>(ny) +
               static_cast<std::size_t>(posy[static_cast<std::size_t>(w.y)]);
    };
    reach[rpos(u)] = 1;

    std::vector<Vertex> nbrs;
    for (int layer = 1; layer <= total; ++layer) {
        for (Vertex w : layers[static_cast<std::size_t>(layer)]) {
            if (blocked(w) && w != v) continue;
            nbrs.clear();
            append_neighbors(g, w, nbrs);
            for (Vertex p : nbrs) {
                if (posx[static_cast<std::size_t>(p.x)] < 0 || posy[static_cast<std::size_t>(p.y)] < 0) continue;
                if (dist_unchecked(g, u, p) != layer - 1) continue;
                if (reach[rpos(p)]) {
                    reach[rpos(w)] = 1;
                    break;
                }
            }
        }
    }
    return reach[rpos(v)] != 0;
}

}  // namespace detail

// True iff some shortest u,v-path avoids every vertex of m except u,v.
inline bool is_visible(const ProductGraph& g, const VertexSet& m, Vertex u, Vertex v) {
    if (m.graph() != g) throw InputError("vertex set belongs to " + m.graph().to_string() +
                                         ", not " + g.to_string());
    g.require(u);
    g.require(v);
    if (u == v) throw InputError("is_visible requires two distinct vertices");
    return detail::interval_reachable(g, u, v,
                                      [&](Vertex w) { return w != u && m.contains(w); });
}

// Checks all unordered member pairs; on failure reports the
// lexicographically first failing pair (ordered by u.x, u.y, v.x, v.y).
// pairs_checked is the number of pairs confirmed visible plus the failing
// one, identical for serial and parallel runs.
inline VisibilityReport is_mutual_visibility_set(const ProductGraph& g, const VertexSet& m,
                                                 int threads = 1) {
    if (m.graph() != g) throw InputError("vertex set belongs to " + m.graph().to_string() +
                                         ", not " + g.to_string());
    VisibilityReport rep;
    const std::vector<Vertex> mem = m.members_lex();
    const std::int64_t n = static_cast<std::int64_t>(mem.size());
    const std::int64_t total = n * (n - 1) / 2;
    if (total == 0) return rep;

    auto pair_at = [&](std::int64_t k) {
        // k-th pair in lex order: blocks of (n-1-i) pairs share the same first index
        std::int64_t i = 0, skipped = 0;
        while (skipped + (n - 1 - i) <= k) skipped += (n - 1 - i++);
        return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(i),
                                                   static_cast<std::size_t>(i + 1 + (k - skipped)));
    };

    std::int64_t first_fail = total;
    if (threads <= 1) {
        std::int64_t k = 0;
        for (std::size_t i = 0; i < mem.size() && first_fail == total; ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j, ++k)
                if (!is_visible(g, m, mem[i], mem[j])) {
                    first_fail = k;
                    break;
                }
    } else {
        const int nt = std::min<std::int64_t>(threads, total) > 0
                           ? static_cast<int>(std::min<std::int64_t>(threads, total))
                           : 1;
        std::vector<std::int64_t> local(static_cast<std::size_t>(nt), total);
        std::vector<std::thread> pool;
        for (int w = 0; w < nt; ++w)
            pool.emplace_back([&, w]() {
                for (std::int64_t k = w; k < total; k += nt) {
                    const auto [i, j] = pair_at(k);
                    if (!is_visible(g, m, mem[i], mem[j])) {
                        local[static_cast<std::size_t>(w)] = k;
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (std::int64_t k : local) first_fail = std::min(first_fail, k);
    }

    if (first_fail < total) {
        const auto [i, j] = pair_at(first_fail);
        rep.ok = false;
        rep.failing_pair = {mem[i], mem[j]};
        rep.pairs_checked = first_fail + 1;
    } else {
        rep.pairs_checked = total;
    }
    return rep;
}

inline VisibilityReport is_mutual_visibility_set(const VertexSet& m, int threads = 1) {
    return is_mutual_visibility_set(m.graph(), m, threads);
}

namespace detail {

// DFS over the shortest-path DAG towards v, using only neighbour steps and
// the distance function (kept independent of the interval sweep above).
template <class Visit>
bool for_each_shortest_path(const ProductGraph& g, Vertex u, Vertex v, Visit visit) {
    std::vector<Vertex> path{u};
    std::vector<Vertex> nbrs;
    auto dfs = [&](auto&& self, Vertex w, int dleft) -> bool {
        if (w == v) return visit(path);
        nbrs.clear();
        append_neighbors(g, w, nbrs);
        const std::vector<Vertex> local(nbrs);  // dfs below reuses nbrs
        for (Vertex p : local) {
            if (dist_unchecked(g, p, v) != dleft - 1) continue;
            path.push_back(p);
            const bool cont = self(self, p, dleft - 1);
            path.pop_back();
            if (!cont) return false;
        }
        return true;
    };
    return dfs(dfs, u, dist_unchecked(g, u, v));
}

}  // namespace detail

inline constexpr int kDefaultPathCap = 12;

// Explicit enumeration of every shortest u,v-path (test oracle; refuses
// distances above the cap since the count grows combinatorially).
inline std::vector<std::vector<Vertex>> brute_force_paths(const ProductGraph& g, Vertex u,
                                                          Vertex v,
                                                          int distance_cap = kDefaultPathCap) {
    g.require(u);
    g.require(v);
    if (dist(g, u, v) > distance_cap)
        throw RefusalError("brute_force_paths: dist " + std::to_string(dist(g, u, v)) +
                           " exceeds cap " + std::to_string(distance_cap));
    std::vector<std::vector<Vertex>> out;
    detail::for_each_shortest_path(g, u, v, [&](const std::vector<Vertex>& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace mutvis
