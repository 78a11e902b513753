#pragma once
// Closed-form mutual-visibility set families on cylinders and tori, the
// sufficient-condition checker for grids, the fiber-insertion extension to
// rectangular tori, and the table of known mutual-visibility numbers.
//
// Torus families exist per residue of t mod 6, each valid from a minimum t.
// A square-torus set of cardinality 3t extends to C_{t+i} x C_t by inserting
// i empty cycle fibers at positions spread uniformly over three sectors of
// the x-range, shifting members right past each insertion.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mutvis/grid.hpp"
#include "mutvis/vertex_set.hpp"

namespace mutvis {

enum class Family : std::uint8_t {
    CylinderOddT,
    CylinderEvenT,
    TorusMod0,
    TorusMod1,
    TorusMod2,
    TorusMod3,
    TorusMod4,
    TorusMod5,
};

// Smallest t for which the family's formula is claimed (and verified).
inline int family_min_t(Family f) {
    switch (f) {
        case Family::CylinderOddT: return 13;
        case Family::CylinderEvenT: return 14;
        case Family::TorusMod0: return 18;
        case Family::TorusMod1: return 19;
        case Family::TorusMod2: return 20;
        case Family::TorusMod3: return 15;
        case Family::TorusMod4: return 22;
        case Family::TorusMod5: return 17;
    }
    return 0;
}

inline Family torus_family(int t) {
    switch (((t % 6) + 6) % 6) {
        case 0: return Family::TorusMod0;
        case 1: return Family::TorusMod1;
        case 2: return Family::TorusMod2;
        case 3: return Family::TorusMod3;
        case 4: return Family::TorusMod4;
        default: return Family::TorusMod5;
    }
}

inline bool family_applies(Family f, int t) {
    if (t < family_min_t(f)) return false;
    switch (f) {
        case Family::CylinderOddT: return t % 2 == 1;
        case Family::CylinderEvenT: return t % 2 == 0;
        default: return torus_family(t) == f;
    }
}

// ---------------------------------------------------------------------------
// Sufficient condition for grids P_s x P_t
// ---------------------------------------------------------------------------

struct Lemma1Report {
    bool ok = true;
    int violated_condition = 0;  // 1..4, first violated; 0 when ok
    std::string detail;
};

// All four conditions must hold:
//   (1) every row fiber (fixed y) and column fiber (fixed x) holds <= 2 members,
//   (2) the x-spans of any two rows holding exactly 2 members intersect,
//   (3) the y-spans of any two columns holding exactly 2 members intersect,
//   (4) all pairwise distances are >= 3.
// Sufficient only: a set may fail these and still be a mutual-visibility set.
inline Lemma1Report lemma1_check(const VertexSet& m) {
    const ProductGraph& g = m.graph();
    if (g.fx.is_cycle() || g.fy.is_cycle())
        throw InputError("lemma1_check applies to path-by-path grids only");
    const int s = g.fx.order, t = g.fy.order;
    const std::vector<Vertex> mem = m.members_lex();

    std::vector<std::vector<int>> row_xs(static_cast<std::size_t>(t));
    std::vector<std::vector<int>> col_ys(static_cast<std::size_t>(s));
    for (Vertex v : mem) {
        row_xs[static_cast<std::size_t>(v.y)].push_back(v.x);
        col_ys[static_cast<std::size_t>(v.x)].push_back(v.y);
    }

    auto fail = [](int cond, std::string why) {
        return Lemma1Report{false, cond, std::move(why)};
    };

    for (int y = 0; y < t; ++y)
        if (row_xs[static_cast<std::size_t>(y)].size() > 2)
            return fail(1, "row y=" + std::to_string(y) + " holds " +
                               std::to_string(row_xs[static_cast<std::size_t>(y)].size()) + " members");
    for (int x = 0; x < s; ++x)
        if (col_ys[static_cast<std::size_t>(x)].size() > 2)
            return fail(1, "column x=" + std::to_string(x) + " holds " +
                               std::to_string(col_ys[static_cast<std::size_t>(x)].size()) + " members");

    auto spans_disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::max(a[0], a[1]) < std::min(b[0], b[1]) ||
               std::max(b[0], b[1]) < std::min(a[0], a[1]);
    };
    for (int y1 = 0; y1 < t; ++y1) {
        if (row_xs[static_cast<std::size_t>(y1)].size() != 2) continue;
        for (int y2 = y1 + 1; y2 < t; ++y2) {
            if (row_xs[static_cast<std::size_t>(y2)].size() != 2) continue;
            if (spans_disjoint(row_xs[static_cast<std::size_t>(y1)], row_xs[static_cast<std::size_t>(y2)]))
                return fail(2, "x-spans of rows y=" + std::to_string(y1) + " and y=" +
                                   std::to_string(y2) + " are disjoint");
        }
    }
    for (int x1 = 0; x1 < s; ++x1) {
        if (col_ys[static_cast<std::size_t>(x1)].size() != 2) continue;
        for (int x2 = x1 + 1; x2 < s; ++x2) {
            if (col_ys[static_cast<std::size_t>(x2)].size() != 2) continue;
            if (spans_disjoint(col_ys[static_cast<std::size_t>(x1)], col_ys[static_cast<std::size_t>(x2)]))
                return fail(3, "y-spans of columns x=" + std::to_string(x1) + " and x=" +
                                   std::to_string(x2) + " are disjoint");
        }
    }
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (dist(g, mem[i], mem[j]) < 3)
                return fail(4, "members at distance " + std::to_string(dist(g, mem[i], mem[j])) +
                                   " < 3");
    return {};
}

// ---------------------------------------------------------------------------
// Torus families (C_t x C_t, cardinality 3t)
// ---------------------------------------------------------------------------

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Evaluates the residue-class pattern without threshold checks (parity of k
// must still match the residue). construct_torus_square enforces thresholds;
// callers that probe below-threshold patterns verify the result themselves.
inline VertexSet torus_square_pattern(int t) {
    const ProductGraph g(Factor::cycle(t), Factor::cycle(t));
    VertexSet m(g);
    const int r = ((t % 6) + 6) % 6;
    auto add = [&](int x, int y) { m.insert({((x % t) + t) % t, ((y % t) + t) % t}); };
    switch (r) {
        case 3: {  // t = 3k, k odd: rows i hold {2i, 2i+k, 2i+2k}
            const int k = t / 3;
            for (int i = 0; i < 3 * k; ++i)
                for (int j = 0; j < 3; ++j) add(2 * i + j * k, i);
            break;
        }
        case 0: {  // t = 3k, k even: two interleaved half-blocks
            const int k = t / 3;
            for (int i = 0; i < k / 2; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < 3; ++l) {
                        add(i + j * k, 2 * i + l * k);
                        add(k - i - 1 + j * k, 2 * i + 3 + l * k);
                    }
            break;
        }
        case 5: {  // t = 3k+2, k odd
            const int k = (t - 2) / 3;
            for (int j = 0; j < 3; ++j) {
                for (int i = 0; i < (3 * k + 3) / 2; ++i) add(i + j * (k + 1), 2 * i);
                for (int i = 0; i < (3 * k + 1) / 2; ++i)
                    add(i + (3 * k + 3) / 2 + j * (k + 1), 2 * i + 1);
            }
            break;
        }
        case 1: {  // t = 3k+1, k even
            const int k = (t - 1) / 3;
            for (int j = 0; j < 3; ++j) {
                for (int i = 0; i < (3 * k + 2) / 2; ++i) add(i + j * k, 2 * i);
                for (int i = 0; i < 3 * k / 2; ++i) add(i + (3 * k + 2) / 2 + j * k, 2 * i + 1);
            }
            break;
        }
        case 2: {  // t = 3k+2, k even
            const int k = (t - 2) / 3;
            for (int j = 0; j < 3; ++j)
                for (int i = 0; i < (3 * k + 2) / 2; ++i) {
                    add(i + j * (k + 1), 2 * i);
                    add(i + (3 * k + 2) / 2 + j * (k + 1), 2 * i + 1);
                }
            break;
        }
        case 4: {  // t = 3k+1, k odd
            const int k = (t - 1) / 3;
            for (int j = 0; j < 3; ++j)
                for (int i = 0; i < (3 * k + 1) / 2; ++i) {
                    add(i + j * k, 2 * i);
                    add(i + (3 * k + 1) / 2 + j * k, 2 * i + 1);
                }
            break;
        }
    }
    return m;
}

// Alternate closed forms stated alongside the defining ones; available for
// the residues where the restatement is usable as printed. Cross-checked
// against torus_square_pattern in construct_torus_square.
inline std::optional<VertexSet> torus_square_alternate(int t) {
    const ProductGraph g(Factor::cycle(t), Factor::cycle(t));
    VertexSet m(g);
    const int r = ((t % 6) + 6) % 6;
    if (r == 3) {  // columns i hold {(k+1)/2 * i + jk}
        const int k = t / 3;
        for (int i = 0; i < 3 * k; ++i)
            for (int j = 0; j < 3; ++j) m.insert({i, (((k + 1) / 2) * i + j * k) % (3 * k)});
        return m;
    }
    if (r == 5) {
        const int k = (t - 2) / 3;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < 3; ++j) m.insert({i, (2 * i + j * k) % (3 * k + 2)});
        return m;
    }
    if (r == 1) {
        const int k = (t - 1) / 3;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < 3; ++j) m.insert({i, (2 * i + j * (k + 1)) % (3 * k + 1)});
        return m;
    }
    return std::nullopt;
}

}  // namespace detail

// Mutual-visibility set of cardinality 3t on C_t x C_t for supported t.
inline VertexSet construct_torus_square(int t) {
    const Family fam = torus_family(t);
    if (!family_applies(fam, t))
        throw UnsupportedSizeError("no torus construction for t=" + std::to_string(t) +
                                   " (the t mod 6 = " + std::to_string(((t % 6) + 6) % 6) +
                                   " family needs t >= " + std::to_string(family_min_t(fam)) +
                                   "); run `mutvis mu` instead");
    VertexSet m = detail::torus_square_pattern(t);
    if (auto alt = detail::torus_square_alternate(t); alt && !(*alt == m))
        throw std::logic_error("torus construction forms disagree at t=" + std::to_string(t));
    return m;
}

// ---------------------------------------------------------------------------
// Cylinder family (P_{t-1} x C_t, cardinality 2t, t >= 13)
// ---------------------------------------------------------------------------

namespace detail {
inline int cylinder_stride(int t) {
    return t % 2 == 1 ? 2 * ((t - 3) / 4) + 1 : t - 8;
}
}  // namespace detail

// The two-per-fiber core on P_{t-3} x C_{t-3} that the full cylinder set is
// assembled around; exposed for tests.
inline VertexSet construct_torus_base(int t) {
    if (t < 13)
        throw UnsupportedSizeError("cylinder constructions need t >= 13; run `mutvis mu` instead");
    const int n = t - 3;
    const int q = detail::cylinder_stride(t);
    VertexSet m(ProductGraph(Factor::path(n), Factor::cycle(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) m.insert({(2 * i + j * q) % n, i});
    return m;
}

// Full 2t-vertex set on P_{t-1} x C_t: the core shifted into the enlarged
// grid plus six boundary vertices on the two outer path columns.
inline VertexSet construct_cylinder(int t) {
    if (t < 13)
        throw UnsupportedSizeError("cylinder constructions need t >= 13; run `mutvis mu` instead");
    const int n = t - 3;
    const int q = detail::cylinder_stride(t);
    const int c1 = detail::ceil_div(t, 3);
    const int c2 = detail::ceil_div(2 * t, 3);
    VertexSet m(ProductGraph(Factor::path(t - 1), Factor::cycle(t)));
    for (int y : {0, c1, c2}) {
        m.insert({0, y});
        m.insert({t - 2, y});
    }
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i <= c1 - 2; ++i) m.insert({(2 * i + j * q) % n + 1, i + 1});
        for (int i = c1 - 1; i <= c2 - 3; ++i) m.insert({(2 * i + j * q) % n + 1, i + 2});
        for (int i = c2 - 2; i <= t - 4; ++i) m.insert({(2 * i + j * q) % n + 1, i + 3});
    }
    return m;
}

// Reinterpret a cylinder set on a longer path factor (still a
// mutual-visibility set: intervals only shrink relative to the path ends).
inline VertexSet embed_cylinder(const VertexSet& m, int s) {
    const ProductGraph& g = m.graph();
    if (g.fx.is_cycle() || !g.fy.is_cycle())
        throw InputError("embed_cylinder expects a set on P_k x C_t");
    if (s <= g.fx.order)
        throw InputError("embedding needs a strictly longer path factor (s > " +
                         std::to_string(g.fx.order) + ")");
    VertexSet out(ProductGraph(Factor::path(s), g.fy));
    for (Vertex v : m.members_lex()) out.insert(v);
    return out;
}

// ---------------------------------------------------------------------------
// Fiber insertion: C_t x C_t -> C_{t+i} x C_t
// ---------------------------------------------------------------------------

struct InsertionPlan {
    int base_t = 0;                // x-order the plan applies to
    std::vector<int> positions;    // insertion positions, sorted ascending

    int inserted() const { return static_cast<int>(positions.size()); }

    // number of insertion positions strictly below x
    int shift(int x) const {
        return static_cast<int>(std::lower_bound(positions.begin(), positions.end(), x) -
                                positions.begin());
    }
};

// Positions for inserting i empty cycle fibers into the residue-t family,
// uniformly distributed over the three sectors of [t]_0 (each sector gets
// floor(i/3) or floor(i/3)+1). For t = 1,4 mod 6 the i = t plan inserts
// after every position.
inline InsertionPlan insertion_plan(int t, int i) {
    const Family fam = torus_family(t);
    if (!family_applies(fam, t))
        throw UnsupportedSizeError("no insertion plan for t=" + std::to_string(t));
    const int r = ((t % 6) + 6) % 6;
    int stride = 0, cap = 0;
    switch (r) {
        case 3: case 0: stride = t / 3; cap = t; break;
        case 5: case 2: stride = (t - 2) / 3 + 1; cap = t; break;
        case 1: case 4: stride = (t - 1) / 3; cap = t; break;
    }
    if (i < 0 || i > cap)
        throw InputError("insertion count must be within 0.." + std::to_string(cap));
    InsertionPlan plan;
    plan.base_t = t;
    if ((r == 1 || r == 4) && i == t) {
        // the stride formula covers i <= 3k; i = 3k+1 = t inserts everywhere
        for (int p = 0; p < t; ++p) plan.positions.push_back(p);
        return plan;
    }
    for (int j = 0; j < i; ++j)
        plan.positions.push_back((j % 3) * stride + ((j / 3) % stride));
    std::sort(plan.positions.begin(), plan.positions.end());
    return plan;
}

// Shift each member's x past the plan's inserted fibers.
inline VertexSet extend_torus(const VertexSet& m, const InsertionPlan& plan) {
    const ProductGraph& g = m.graph();
    if (!g.fx.is_cycle() || !g.fy.is_cycle())
        throw InputError("extend_torus expects a set on a torus");
    if (plan.base_t != g.fx.order)
        throw InputError("plan built for x-order " + std::to_string(plan.base_t) +
                         ", set lives on x-order " + std::to_string(g.fx.order));
    if (plan.inserted() == 0) return m;
    VertexSet out(ProductGraph(Factor::cycle(g.fx.order + plan.inserted()), g.fy));
    for (Vertex v : m.members_lex()) out.insert({v.x + plan.shift(v.x), v.y});
    return out;
}

// Consecutive plan application: reaches C_s x C_t for any s >= t by anchoring
// every round's insertion positions at the original base-torus coordinates
// and accumulating the shifts.
inline VertexSet extend_torus_to(const VertexSet& base, int s) {
    const ProductGraph& g = base.graph();
    if (!g.fx.is_cycle() || !g.fy.is_cycle() || g.fx.order != g.fy.order)
        throw InputError("extend_torus_to expects a square torus base");
    const int t = g.fx.order;
    if (s < t) throw InputError("target x-order must be >= base t");
    std::vector<int> shift(static_cast<std::size_t>(t), 0);
    int remaining = s - t;
    while (remaining > 0) {
        const int step = std::min(remaining, t);
        const InsertionPlan plan = insertion_plan(t, step);
        for (int x = 0; x < t; ++x) shift[static_cast<std::size_t>(x)] += plan.shift(x);
        remaining -= step;
    }
    VertexSet out(ProductGraph(Factor::cycle(s), g.fy));
    for (Vertex v : base.members_lex()) out.insert({v.x + shift[static_cast<std::size_t>(v.x)], v.y});
    return out;
}

// ---------------------------------------------------------------------------
// Known mutual-visibility numbers
// ---------------------------------------------------------------------------

struct KnownMu {
    int value = 0;
    std::string provenance;
};

namespace detail {

// mu(P_s x C_t) for 3 <= s <= 12, 3 <= t <= 17 (ditto marks resolved
// leftward; the last entry of each row equals 2t).
inline constexpr std::array<std::array<int, 10>, 15> kCylinderTable = {{
    {6, 6, 6, 6, 6, 6, 6, 6, 6, 6},            // t=3
    {7, 8, 8, 8, 8, 8, 8, 8, 8, 8},            // t=4
    {7, 9, 10, 10, 10, 10, 10, 10, 10, 10},    // t=5
    {8, 10, 12, 12, 12, 12, 12, 12, 12, 12},   // t=6
    {8, 10, 12, 14, 14, 14, 14, 14, 14, 14},   // t=7
    {9, 12, 14, 16, 16, 16, 16, 16, 16, 16},   // t=8
    {9, 12, 14, 16, 17, 18, 18, 18, 18, 18},   // t=9
    {9, 12, 15, 18, 19, 20, 20, 20, 20, 20},   // t=10
    {9, 12, 15, 18, 19, 22, 22, 22, 22, 22},   // t=11
    {9, 12, 15, 18, 21, 24, 24, 24, 24, 24},   // t=12
    {9, 12, 15, 18, 21, 24, 26, 26, 26, 26},   // t=13
    {9, 12, 15, 18, 21, 24, 27, 28, 28, 28},   // t=14
    {9, 12, 15, 18, 21, 24, 27, 30, 30, 30},   // t=15
    {9, 12, 15, 18, 21, 24, 27, 30, 32, 32},   // t=16
    {9, 12, 15, 18, 21, 24, 27, 30, 33, 34},   // t=17
}};

// mu(C_s x C_t) for 3 <= t <= 13, t <= s <= 14; row r holds s = t..14.
inline const std::vector<std::vector<int>>& torus_table() {
    static const std::vector<std::vector<int>> table = {
        {6, 7, 7, 9, 9, 9, 9, 9, 9, 9, 9, 9},       // t=3,  s=3..14
        {9, 10, 11, 11, 12, 12, 12, 12, 12, 12, 12},// t=4,  s=4..14
        {10, 12, 13, 15, 15, 15, 15, 15, 15, 15},   // t=5,  s=5..14
        {14, 15, 17, 18, 18, 18, 18, 18, 18},       // t=6,  s=6..14
        {16, 18, 18, 20, 20, 21, 21, 21},           // t=7,  s=7..14
        {21, 21, 23, 23, 24, 24, 24},               // t=8,  s=8..14
        {22, 25, 25, 27, 27, 27},                   // t=9,  s=9..14
        {27, 27, 30, 30, 30},                       // t=10, s=10..14
        {29, 32, 33, 33},                           // t=11, s=11..14
        {36, 36, 36},                               // t=12, s=12..14
        {38, 39},                                   // t=13, s=13..14
    };
    return table;
}

// thresholds s_r for mu(C_s x C_t) = 3t at small t
inline std::optional<int> torus_small_t_threshold(int t) {
    switch (t) {
        case 3: return 6;
        case 4: return 8;
        case 5: return 8;
        case 6: return 9;
        case 7: return 12;
        case 8: return 12;
        case 9: return 12;
        case 10: return 12;
        case 11: return 13;
        case 13: return 14;
        default: return std::nullopt;
    }
}

}  // namespace detail

// The published value of mu(g) when g falls in a covered regime, with a
// provenance label; nullopt otherwise.
inline std::optional<KnownMu> known_mu(const ProductGraph& g) {
    const bool cx = g.fx.is_cycle(), cy = g.fy.is_cycle();
    if (!cx && !cy) return std::nullopt;  // no published grid values here

    if (cx && cy) {
        const int s = std::max(g.fx.order, g.fy.order);
        const int t = std::min(g.fx.order, g.fy.order);
        if (t <= 13 && s <= 14)
            return KnownMu{detail::torus_table()[static_cast<std::size_t>(t - 3)]
                                                [static_cast<std::size_t>(s - t)],
                           "torus table"};
        if (t >= 14 || t == 12) return KnownMu{3 * t, "torus closed form"};
        if (auto sr = detail::torus_small_t_threshold(t); sr && s >= *sr)
            return KnownMu{3 * t, "small-t torus threshold"};
        return std::nullopt;
    }

    // cylinder: path order s, cycle order t
    const int s = cx ? g.fy.order : g.fx.order;
    const int t = cx ? g.fx.order : g.fy.order;
    if (s == 2) {
        if (t == 3) return KnownMu{4, "P2 cylinder values"};
        if (t == 4 || t == 5) return KnownMu{5, "P2 cylinder values"};
        return KnownMu{6, "P2 cylinder values"};
    }
    if (3 <= s && s <= 12 && 3 <= t && t <= 17)
        return KnownMu{detail::kCylinderTable[static_cast<std::size_t>(t - 3)]
                                             [static_cast<std::size_t>(s - 3)],
                       "cylinder table"};
    if (s + 1 >= t && t >= 6) return KnownMu{2 * t, "cylinder closed form"};
    return std::nullopt;
}

}  // namespace mutvis
