#pragma once
// Dense membership set over a product graph's vertex grid, plus its JSON
// wire format {"graph":"C15xC15","set":[[x,y],...]} and the ASCII grid
// rendering ('#' members, '.' non-members, row 0 at top, x as column).

#include <cstdint>
#include <string>
#include <vector>

#include "mutvis/grid.hpp"

#include "json.hpp"

namespace mutvis {

class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(ProductGraph g)
        : graph_(g), bits_(static_cast<std::size_t>((g.vertex_count() + 63) / 64), 0) {}

    const ProductGraph& graph() const { return graph_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const {
        if (!graph_.contains(v)) return false;
        const auto i = static_cast<std::uint64_t>(graph_.index(v));
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

    // returns false if already present
    bool insert(Vertex v) {
        graph_.require(v);
        const auto i = static_cast<std::uint64_t>(graph_.index(v));
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (bits_[i >> 6] & mask) return false;
        bits_[i >> 6] |= mask;
        ++count_;
        return true;
    }

    bool erase(Vertex v) {
        if (!contains(v)) return false;
        const auto i = static_cast<std::uint64_t>(graph_.index(v));
        bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        --count_;
        return true;
    }

    // members sorted lexicographically by (x, y)
    std::vector<Vertex> members_lex() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (int x = 0; x < graph_.fx.order; ++x)
            for (int y = 0; y < graph_.fy.order; ++y)
                if (contains({x, y})) out.push_back({x, y});
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    static VertexSet of(ProductGraph g, const std::vector<Vertex>& vs) {
        VertexSet m(g);
        for (Vertex v : vs)
            if (!m.insert(v))
                throw InputError("duplicate vertex (" + std::to_string(v.x) + "," +
                                 std::to_string(v.y) + ")");
        return m;
    }

    // ---- JSON wire format ----

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (Vertex v : members_lex()) arr.push_back({v.x, v.y});
        return nlohmann::json{{"graph", graph_.to_string()}, {"set", std::move(arr)}};
    }

    static VertexSet from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("graph") || !j.contains("set") ||
            !j.at("graph").is_string() || !j.at("set").is_array())
            throw InputError("vertex set JSON must be {\"graph\":..., \"set\":[[x,y],...]}");
        VertexSet m(ProductGraph::parse(j.at("graph").get<std::string>()));
        for (const auto& e : j.at("set")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw InputError("vertex entries must be [x,y] integer pairs");
            Vertex v{e[0].get<int>(), e[1].get<int>()};
            m.graph_.require(v);
            if (!m.insert(v))
                throw InputError("duplicate vertex (" + std::to_string(v.x) + "," +
                                 std::to_string(v.y) + ") in set");
        }
        return m;
    }

    static VertexSet parse_json(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        return from_json(j);
    }

    // ---- ASCII grid rendering ----

    std::string render_grid() const {
        std::string out;
        out.reserve(static_cast<std::size_t>((graph_.fx.order + 1) * graph_.fy.order));
        for (int y = 0; y < graph_.fy.order; ++y) {
            for (int x = 0; x < graph_.fx.order; ++x)
                out.push_back(contains({x, y}) ? '#' : '.');
            out.push_back('\n');
        }
        return out;
    }

    // Accepts an optional leading graph-descriptor line (what the CLI's grid
    // rendering emits), so grid output parses back without surgery.
    static VertexSet parse_grid(const ProductGraph& g, const std::string& text) {
        std::string body = text;
        if (!text.empty() && text[0] != '#' && text[0] != '.') {
            const std::size_t eol = text.find('\n');
            const std::string head = text.substr(0, eol);
            if (ProductGraph::parse(head) != g)
                throw InputError("grid header '" + head + "' does not match " + g.to_string());
            body = eol == std::string::npos ? "" : text.substr(eol + 1);
        }
        VertexSet m(g);
        int x = 0, y = 0;
        for (char c : body) {
            if (c == '\n') {
                if (x != 0 && x != g.fx.order) throw InputError("grid row width mismatch");
                if (x != 0) ++y;
                x = 0;
                continue;
            }
            if (c == '\r' || c == ' ') continue;
            if (c != '#' && c != '.') throw InputError("grid cells must be '#' or '.'");
            if (y >= g.fy.order || x >= g.fx.order) throw InputError("grid larger than graph");
            if (c == '#') m.insert({x, y});
            ++x;
        }
        if (!(x == 0 && y == g.fy.order))
            throw InputError("grid smaller than graph");
        return m;
    }

    // self-describing variant: the first line carries the descriptor
    static VertexSet parse_grid(const std::string& text) {
        const std::size_t eol = text.find('\n');
        if (eol == std::string::npos) throw InputError("grid input needs a descriptor line");
        return parse_grid(ProductGraph::parse(text.substr(0, eol)), text);
    }

  private:
    ProductGraph graph_;
    std::vector<std::uint64_t> bits_;
    int count_ = 0;
};

}  // namespace mutvis
