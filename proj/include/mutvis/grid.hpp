#pragma once
// Coordinate arithmetic, distances and geodesic intervals for Cartesian
// products of two factors, each a path P_n or a cycle C_n.
//
// Conventions: vertices are coordinate pairs (x, y) with x in the first
// factor and y in the second, both 0-based. Distances are linear |a-b| on
// a path and circular min(|a-b|, n-|a-b|) on a cycle. The interval between
// two vertices is the Cartesian product of the per-factor geodesic
// intervals and equals the set of vertices on shortest paths.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutvis {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RefusalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FactorKind : std::uint8_t { Path, Cycle };

// Orders stay far below this in practice; the cap keeps dense bitsets over
// the vertex grid comfortably in memory.
inline constexpr int kMaxOrder = 1 << 15;

struct Factor {
    FactorKind kind = FactorKind::Path;
    int order = 2;

    static Factor path(int order) { return validated({FactorKind::Path, order}); }
    static Factor cycle(int order) { return validated({FactorKind::Cycle, order}); }

    static Factor validated(Factor f) {
        const int min_order = f.kind == FactorKind::Path ? 2 : 3;
        if (f.order < min_order || f.order > kMaxOrder)
            throw InputError("factor order out of range: " + std::to_string(f.order));
        return f;
    }

    bool is_cycle() const { return kind == FactorKind::Cycle; }
    bool contains(int a) const { return 0 <= a && a < order; }

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Vertex {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Circular distance |n - k|_s on the cycle C_s.
inline int circ_dist(int n, int k, int s) {
    if (s < 3) throw InputError("cycle order must be >= 3");
    if (n < 0 || n >= s || k < 0 || k >= s) throw InputError("coordinate out of range for cycle");
    const int d = std::abs(n - k);
    return std::min(d, s - d);
}

// A set of coordinates within one factor, kept sorted ascending.
struct CoordInterval {
    std::vector<int> members;

    bool contains(int a) const {
        return std::binary_search(members.begin(), members.end(), a);
    }
    std::size_t size() const { return members.size(); }

    friend bool operator==(const CoordInterval&, const CoordInterval&) = default;
};

// [k, n] on a path: the closed interval between the two coordinates.
inline CoordInterval lin_interval(int k, int n) {
    if (k < 0 || n < 0) throw InputError("negative path coordinate");
    CoordInterval iv;
    const int lo = std::min(k, n), hi = std::max(k, n);
    iv.members.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int a = lo; a <= hi; ++a) iv.members.push_back(a);
    return iv;
}

// Geodesic interval on the cycle C_s: every m with |k-m|_s + |m-n|_s = |k-n|_s.
// Equals the short arc between k and n, or all of [s]_0 when they are antipodal.
inline CoordInterval circ_interval(int k, int n, int s) {
    const int d = circ_dist(n, k, s);
    CoordInterval iv;
    if (2 * d == s) {
        iv.members.resize(static_cast<std::size_t>(s));
        for (int a = 0; a < s; ++a) iv.members[static_cast<std::size_t>(a)] = a;
        return iv;
    }
    iv.members.reserve(static_cast<std::size_t>(d + 1));
    // walk the unique short arc from k towards n
    const int step = ((n - k + s) % s == d) ? 1 : s - 1;
    int a = k;
    for (int i = 0; i <= d; ++i, a = (a + step) % s) iv.members.push_back(a);
    std::sort(iv.members.begin(), iv.members.end());
    return iv;
}

namespace detail {
inline int factor_dist(const Factor& f, int a, int b) {
    const int d = std::abs(a - b);
    return f.is_cycle() ? std::min(d, f.order - d) : d;
}
inline CoordInterval factor_interval(const Factor& f, int a, int b) {
    return f.is_cycle() ? circ_interval(a, b, f.order) : lin_interval(a, b);
}
}  // namespace detail

struct ProductGraph {
    Factor fx;  // first factor, coordinate x, order s
    Factor fy;  // second factor, coordinate y, order t

    ProductGraph() : fx(Factor::path(2)), fy(Factor::path(2)) {}
    ProductGraph(Factor fx_, Factor fy_)
        : fx(Factor::validated(fx_)), fy(Factor::validated(fy_)) {}

    std::int64_t vertex_count() const {
        return static_cast<std::int64_t>(fx.order) * fy.order;
    }
    bool contains(Vertex v) const { return fx.contains(v.x) && fy.contains(v.y); }
    void require(Vertex v) const {
        if (!contains(v))
            throw InputError("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                             ") out of range for " + to_string());
    }

    // row-major linear index (rows are y-slices)
    std::int64_t index(Vertex v) const {
        return static_cast<std::int64_t>(v.y) * fx.order + v.x;
    }
    Vertex vertex_at(std::int64_t idx) const {
        return Vertex{static_cast<int>(idx % fx.order), static_cast<int>(idx / fx.order)};
    }

    // Descriptor grammar: P<s>xC<t> / C<s>xC<t> / P<s>xP<t> / C<s>xP<t>,
    // case-insensitive, e.g. "C15xC15".
    static ProductGraph parse(const std::string& text) {
        auto fail = [&]() -> ProductGraph {
            throw InputError("bad graph descriptor '" + text + "' (expected e.g. P5xC7)");
        };
        std::size_t pos = 0;
        auto read_factor = [&]() -> Factor {
            if (pos >= text.size()) fail();
            const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
            if (c != 'P' && c != 'C') fail();
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || pos - start > 6) fail();
            const long order = std::stol(text.substr(start, pos - start));
            if (order > kMaxOrder) throw InputError("factor order above cap in '" + text + "'");
            return Factor::validated(
                Factor{c == 'P' ? FactorKind::Path : FactorKind::Cycle, static_cast<int>(order)});
        };
        const Factor a = read_factor();
        if (pos >= text.size() ||
            std::tolower(static_cast<unsigned char>(text[pos])) != 'x')
            fail();
        ++pos;
        const Factor b = read_factor();
        if (pos != text.size()) fail();
        return ProductGraph(a, b);
    }

    std::string to_string() const {
        auto part = [](const Factor& f) {
            return std::string(f.is_cycle() ? "C" : "P") + std::to_string(f.order);
        };
        return part(fx) + "x" + part(fy);
    }

    friend bool operator==(const ProductGraph&, const ProductGraph&) = default;
};

// Shortest-path distance in the product: sum of per-factor distances.
inline int dist(const ProductGraph& g, Vertex u, Vertex v) {
    g.require(u);
    g.require(v);
    return detail::factor_dist(g.fx, u.x, v.x) + detail::factor_dist(g.fy, u.y, v.y);
}

// The interval I(u,v): Cartesian product of the per-factor intervals, which
// is exactly {w : dist(u,w) + dist(w,v) = dist(u,v)}.
inline std::vector<Vertex> interval(const ProductGraph& g, Vertex u, Vertex v) {
    g.require(u);
    g.require(v);
    const CoordInterval ix = detail::factor_interval(g.fx, u.x, v.x);
    const CoordInterval iy = detail::factor_interval(g.fy, u.y, v.y);
    std::vector<Vertex> out;
    out.reserve(ix.size() * iy.size());
    for (int x : ix.members)
        for (int y : iy.members) out.push_back(Vertex{x, y});
    return out;
}

namespace detail {
// unchecked fast-path variant for inner loops
inline int dist_unchecked(const ProductGraph& g, Vertex u, Vertex v) {
    return factor_dist(g.fx, u.x, v.x) + factor_dist(g.fy, u.y, v.y);
}

// neighbours of v in the product (2..4 of them), appended to out
inline void append_neighbors(const ProductGraph& g, Vertex v, std::vector<Vertex>& out) {
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
}
}  // namespace detail

}  // namespace mutvis
