#include "recolor/graph.hpp"

#include <deque>
#include <limits>

namespace recolor {

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(universe(), 0);
    for (Vertex s = 0; s < universe(); ++s) {
        if (!present_[s] || seen[s]) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (Vertex u : adj_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::contains_triangle() const {
    for (Vertex v = 0; v < universe(); ++v) {
        if (!present_[v]) continue;
        const auto& nb = adj_[v];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (adjacent(nb[i], nb[j])) return true;
    }
    return false;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    DegeneracyOrdering out;
    const int n = g.universe();
    std::vector<int> deg(n, -1);
    std::vector<char> removed(n, 1);
    for (Vertex v : g.vertices()) {
        deg[v] = g.degree(v);
        removed[v] = 0;
    }
    int remaining = g.num_vertices();
    while (remaining > 0) {
        Vertex best = -1;
        int bd = std::numeric_limits<int>::max();
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && deg[v] >= 0 && deg[v] < bd) {
                bd = deg[v];
                best = v;
            }
        out.degeneracy = std::max(out.degeneracy, bd);
        out.order.push_back(best);
        removed[best] = 1;
        --remaining;
        for (Vertex u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    return out;
}

bool verify_degeneracy(const Graph& g, const DegeneracyOrdering& d) {
    if (static_cast<int>(d.order.size()) != g.num_vertices()) return false;
    std::vector<char> removed(g.universe(), 0);
    for (Vertex v : d.order) {
        int live = 0;
        for (Vertex u : g.neighbors(v))
            if (!removed[u]) ++live;
        if (live > d.degeneracy) return false;
        removed[v] = 1;
    }
    return true;
}

}  // namespace recolor
