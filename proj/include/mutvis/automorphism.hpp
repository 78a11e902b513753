#pragma once
// Coordinate automorphisms of a two-factor product: per-factor reflections
// (paths), rotations and reflections (cycles), and the coordinate swap when
// both factors coincide. Used for solver symmetry reduction and for
// invariance testing.

#include <vector>

#include "mutvis/grid.hpp"

namespace mutvis {

struct Automorphism {
    // x' = sx * x + ox (mod order for a cycle); same for y; optionally swap
    int sx = 1, ox = 0;
    int sy = 1, oy = 0;
    bool swap_xy = false;

    Vertex apply(const ProductGraph& g, Vertex v) const {
        auto map1 = [](const Factor& f, int s, int o, int a) {
            const int r = s * a + o;
            return f.is_cycle() ? ((r % f.order) + f.order) % f.order : r;
        };
        const int nx = map1(g.fx, sx, ox, v.x);
        const int ny = map1(g.fy, sy, oy, v.y);
        return swap_xy ? Vertex{ny, nx} : Vertex{nx, ny};
    }
};

inline std::vector<Automorphism> automorphisms(const ProductGraph& g) {
    auto factor_maps = [](const Factor& f) {
        std::vector<std::pair<int, int>> maps;  // (sign, offset)
        if (f.is_cycle()) {
            for (int r = 0; r < f.order; ++r) maps.push_back({1, r});
            for (int r = 0; r < f.order; ++r) maps.push_back({-1, r});
        } else {
            maps.push_back({1, 0});
            maps.push_back({-1, f.order - 1});
        }
        return maps;
    };
    const bool swappable = g.fx == g.fy;
    std::vector<Automorphism> out;
    for (auto [sx, ox] : factor_maps(g.fx))
        for (auto [sy, oy] : factor_maps(g.fy)) {
            out.push_back({sx, ox, sy, oy, false});
            if (swappable) out.push_back({sx, ox, sy, oy, true});
        }
    return out;
}

}  // namespace mutvis
