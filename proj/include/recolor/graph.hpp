#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

using Vertex = int;
using Color = int;

// Colors are positive integers; sets are stored as bitmasks.
inline constexpr Color kMaxColor = 62;

class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(uint64_t bits) : bits_(bits) {}
    ColorSet(std::initializer_list<Color> cs) {
        for (Color c : cs) insert(c);
    }

    static ColorSet range(Color lo, Color hi) {
        ColorSet s;
        for (Color c = lo; c <= hi; ++c) s.insert(c);
        return s;
    }

    void insert(Color c) {
        check(c);
        bits_ |= uint64_t{1} << c;
    }
    void erase(Color c) {
        if (c >= 1 && c <= kMaxColor) bits_ &= ~(uint64_t{1} << c);
    }
    bool contains(Color c) const {
        return c >= 1 && c <= kMaxColor && (bits_ >> c) & 1;
    }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    uint64_t bits() const { return bits_; }

    ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    // Set difference.
    ColorSet operator-(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
    bool operator==(const ColorSet&) const = default;

    // Smallest color in the set, or 0 if empty.
    Color smallest() const { return bits_ ? __builtin_ctzll(bits_) : 0; }

    std::vector<Color> to_vector() const {
        std::vector<Color> out;
        for (uint64_t b = bits_; b;) {
            int c = __builtin_ctzll(b);
            out.push_back(c);
            b &= b - 1;
        }
        return out;
    }

private:
    static void check(Color c) {
        if (c < 1 || c > kMaxColor)
            throw BadParams("color out of supported range [1," + std::to_string(kMaxColor) +
                            "]: " + std::to_string(c));
    }
    uint64_t bits_ = 0;
};

// Dense coloring over the vertex universe; 0 marks absent/uncolored vertices.
using Coloring = std::vector<Color>;

// Per-vertex allowed color sets, indexed by vertex id.
using ListAssignment = std::vector<ColorSet>;

// Abstract (not embedded) graph over a fixed vertex universe 0..universe()-1.
// Subgraphs keep original vertex ids; absent vertices are simply masked out,
// so colorings and recoloring sequences transfer between a graph and its
// subgraphs without translation.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), present_(n, 1) {}

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int universe() const { return static_cast<int>(adj_.size()); }
    bool has(Vertex v) const { return v >= 0 && v < universe() && present_[v]; }

    int num_vertices() const {
        return static_cast<int>(std::count(present_.begin(), present_.end(), 1));
    }
    int num_edges() const {
        int d = 0;
        for (Vertex v = 0; v < universe(); ++v)
            if (present_[v]) d += degree(v);
        return d / 2;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < universe(); ++v)
            if (present_[v]) out.push_back(v);
        return out;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const {
        if (!has(u) || !has(v)) return false;
        const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        Vertex t = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::find(a.begin(), a.end(), t) != a.end();
    }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw NotSimple("loop at vertex " + std::to_string(u));
        if (!has(u) || !has(v)) throw BadParams("add_edge on absent vertex");
        if (adjacent(u, v)) throw NotSimple("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    // Induced subgraph on `keep` (original ids preserved).
    Graph induced(const std::vector<Vertex>& keep) const {
        Graph g;
        g.adj_.assign(universe(), {});
        g.present_.assign(universe(), 0);
        for (Vertex v : keep) {
            if (!has(v)) throw BadParams("induced: absent vertex " + std::to_string(v));
            g.present_[v] = 1;
        }
        for (Vertex v = 0; v < universe(); ++v) {
            if (!g.present_[v]) continue;
            for (Vertex u : adj_[v])
                if (g.present_[u]) g.adj_[v].push_back(u);
        }
        return g;
    }

    Graph without(const std::vector<Vertex>& drop) const {
        std::vector<char> gone(universe(), 0);
        for (Vertex v : drop) gone[v] = 1;
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < universe(); ++v)
            if (present_[v] && !gone[v]) keep.push_back(v);
        return induced(keep);
    }

    std::vector<std::vector<Vertex>> components() const;

    bool connected() const { return components().size() <= 1; }

    // True if `phi` assigns a color to every present vertex and no edge is
    // monochromatic.
    bool proper(const Coloring& phi) const {
        for (Vertex v = 0; v < universe(); ++v) {
            if (!present_[v]) continue;
            if (v >= static_cast<int>(phi.size()) || phi[v] <= 0) return false;
            for (Vertex u : adj_[v])
                if (phi[u] == phi[v]) return false;
        }
        return true;
    }

    bool contains_triangle() const;

protected:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> present_;
};

// Degeneracy: removal order such that each removed vertex has at most d
// neighbors among the not-yet-removed ones; d is exact (minimal).
struct DegeneracyOrdering {
    int degeneracy = 0;
    std::vector<Vertex> order;  // removal order
};

DegeneracyOrdering degeneracy_ordering(const Graph& g);

// Replays the removal order and checks the claimed bound holds.
bool verify_degeneracy(const Graph& g, const DegeneracyOrdering& d);

}  // namespace recolor
