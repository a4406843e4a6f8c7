#include "recolor/gen.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

namespace recolor {
namespace gen {

namespace {

using Rot = std::vector<std::vector<Vertex>>;

std::vector<std::vector<Vertex>> all_faces(const Rot& rot) {
    std::vector<std::vector<Vertex>> out;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (Vertex v = 0; v < static_cast<int>(rot.size()); ++v) {
        for (Vertex w : rot[v]) {
            if (seen.count({v, w})) continue;
            std::vector<Vertex> walk;
            Vertex a = v, b = w;
            do {
                seen.insert({a, b});
                walk.push_back(a);
                auto it = std::find(rot[b].begin(), rot[b].end(), a);
                Vertex nxt = rot[b][(std::distance(rot[b].begin(), it) + 1) % rot[b].size()];
                a = b;
                b = nxt;
            } while (!(a == v && b == w));
            out.push_back(std::move(walk));
        }
    }
    return out;
}

// The traced face whose vertex set equals `boundary`.
std::vector<Vertex> pick_outer(const Rot& rot, std::vector<Vertex> boundary) {
    std::sort(boundary.begin(), boundary.end());
    for (auto& f : all_faces(rot)) {
        std::vector<Vertex> s = f;
        std::sort(s.begin(), s.end());
        if (s == boundary) return f;
    }
    throw InternalError("generator: expected outer face not traced");
}

}  // namespace

PlaneGraph grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw BadParams("grid: need positive dimensions");
    auto id = [&](int r, int c) { return r * cols + c; };
    Rot rot(rows * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            // Clockwise in a row-0-on-top drawing: up, right, down, left.
            if (r > 0) rot[id(r, c)].push_back(id(r - 1, c));
            if (c + 1 < cols) rot[id(r, c)].push_back(id(r, c + 1));
            if (r + 1 < rows) rot[id(r, c)].push_back(id(r + 1, c));
            if (c > 0) rot[id(r, c)].push_back(id(r, c - 1));
        }
    }
    std::vector<Vertex> boundary;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (r == 0 || c == 0 || r == rows - 1 || c == cols - 1)
                boundary.push_back(id(r, c));
    if (rows == 1 && cols == 1) return PlaneGraph::from_rotations(rot, {0});
    if (rows == 1 || cols == 1) {
        // A path: the single face is the outer walk.
        return PlaneGraph::from_rotations(rot, all_faces(rot).front());
    }
    auto outer = pick_outer(rot, boundary);
    return PlaneGraph::from_rotations(std::move(rot), std::move(outer));
}

PlaneGraph cycle(int n) {
    if (n < 3) throw BadParams("cycle: need n >= 3");
    Rot rot(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    }
    // Both faces cover all vertices; take the one traced from dart (0,1).
    std::vector<Vertex> outer;
    Vertex a = 0, b = 1;
    do {
        outer.push_back(a);
        auto it = std::find(rot[b].begin(), rot[b].end(), a);
        Vertex nxt = rot[b][(std::distance(rot[b].begin(), it) + 1) % rot[b].size()];
        a = b;
        b = nxt;
    } while (!(a == 0 && b == 1));
    return PlaneGraph::from_rotations(std::move(rot), std::move(outer));
}

PlaneGraph wheel(int rim) {
    if (rim < 3) throw BadParams("wheel: need rim >= 3");
    const Vertex hub = rim;
    Rot rot(rim + 1);
    for (int i = 0; i < rim; ++i) rot[hub].push_back(i);
    for (int i = 0; i < rim; ++i)
        rot[i] = {(i + 1) % rim, hub, (i + rim - 1) % rim};
    std::vector<Vertex> boundary(rim);
    std::iota(boundary.begin(), boundary.end(), 0);
    auto outer = pick_outer(rot, boundary);
    return PlaneGraph::from_rotations(std::move(rot), std::move(outer));
}

PlaneGraph stacked_triangulation(int n, uint64_t seed) {
    if (n < 3) throw BadParams("stacked_triangulation: need n >= 3");
    std::mt19937_64 rng(seed);
    Rot rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    // Inner faces as traced dart triples (a,b,c).
    std::vector<std::array<Vertex, 3>> inner{{1, 0, 2}};
    for (Vertex v = 3; v < n; ++v) {
        size_t fi = std::uniform_int_distribution<size_t>(0, inner.size() - 1)(rng);
        auto [a, b, c] = inner[fi];
        auto insert_after = [&](Vertex at, Vertex anchor, Vertex nv) {
            auto it = std::find(rot[at].begin(), rot[at].end(), anchor);
            rot[at].insert(it + 1, nv);
        };
        insert_after(b, a, v);
        insert_after(a, c, v);
        insert_after(c, b, v);
        rot[v] = {b, a, c};
        inner[fi] = {a, b, v};
        inner.push_back({b, c, v});
        inner.push_back({c, a, v});
    }
    return PlaneGraph::from_rotations(std::move(rot), {0, 1, 2});
}

PlaneGraph random_planar(int n, double keep_fraction, uint64_t seed) {
    PlaneGraph g = stacked_triangulation(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<Vertex, Vertex>> candidates;
    std::set<std::pair<Vertex, Vertex>> outer_edges;
    const auto& w = g.outer_walk();
    for (size_t i = 0; i < w.size(); ++i) {
        Vertex a = w[i], b = w[(i + 1) % w.size()];
        outer_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (Vertex v : g.vertices())
        for (Vertex u : g.neighbors(v))
            if (v < u && !outer_edges.count({v, u})) candidates.emplace_back(v, u);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (auto [u, v] : candidates) {
        if (coin(rng) < keep_fraction) continue;
        PlaneGraph h = g.without_edge(u, v);
        if (h.connected()) g = std::move(h);
    }
    return g;
}

PlaneGraph random_grid_subgraph(int rows, int cols, double keep_fraction, uint64_t seed) {
    PlaneGraph g = grid(rows, cols);
    std::mt19937_64 rng(seed);
    std::set<std::pair<Vertex, Vertex>> outer_edges;
    const auto& w = g.outer_walk();
    for (size_t i = 0; i < w.size(); ++i) {
        Vertex a = w[i], b = w[(i + 1) % w.size()];
        outer_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<Vertex, Vertex>> candidates;
    for (Vertex v : g.vertices())
        for (Vertex u : g.neighbors(v))
            if (v < u && !outer_edges.count({v, u})) candidates.emplace_back(v, u);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (auto [u, v] : candidates) {
        if (coin(rng) < keep_fraction) continue;
        PlaneGraph h = g.without_edge(u, v);
        if (h.connected()) g = std::move(h);
    }
    return g;
}

PlaneGraph p_dn(int d, int n) {
    if (d != 2 && d != 3) throw BadParams("p_dn: only d in {2,3} is supported");
    const int m = n - d + 1;  // path length
    if (m < 2) throw BadParams("p_dn: n too small");
    Rot rot(n);
    if (d == 2) {
        const Vertex a = n - 1;  // apex below the path
        for (int i = 0; i < m; ++i) rot[a].push_back(i);
        for (int i = 0; i < m; ++i) {
            if (i + 1 < m) rot[i].push_back(i + 1);
            rot[i].push_back(a);
            if (i > 0) rot[i].push_back(i - 1);
        }
        std::vector<Vertex> everything(n);
        std::iota(everything.begin(), everything.end(), 0);
        auto outer = pick_outer(rot, everything);
        return PlaneGraph::from_rotations(std::move(rot), std::move(outer));
    }
    // d == 3: path plus an adjacent pair {a, b}, a above, b below, the edge
    // a-b drawn around the right end of the path.
    const Vertex a = n - 2, b = n - 1;
    rot[a].push_back(b);
    for (int i = m - 1; i >= 0; --i) rot[a].push_back(i);
    for (int i = 0; i < m; ++i) rot[b].push_back(i);
    rot[b].push_back(a);
    for (int i = 0; i < m; ++i) {
        if (i + 1 < m) {
            rot[i].push_back(a);
            rot[i].push_back(i + 1);
            rot[i].push_back(b);
            if (i > 0) rot[i].push_back(i - 1);
        } else {
            rot[i] = {b, i - 1, a};
        }
    }
    auto outer = pick_outer(rot, {a, b, m - 1});
    return PlaneGraph::from_rotations(std::move(rot), std::move(outer));
}

Coloring random_coloring(const Graph& g, int k, uint64_t seed) {
    if (k < 1) throw BadParams("random_coloring: need k >= 1");
    std::mt19937_64 rng(seed);
    auto verts = g.vertices();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(verts.begin(), verts.end(), rng);
        Coloring phi(g.universe(), 0);
        bool ok = true;
        for (Vertex v : verts) {
            ColorSet allowed = ColorSet::range(1, k);
            for (Vertex u : g.neighbors(v)) allowed.erase(phi[u]);
            auto opts = allowed.to_vector();
            if (opts.empty()) {
                ok = false;
                break;
            }
            phi[v] = opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
        }
        if (ok) return phi;
    }
    throw SearchExhausted("random_coloring: no proper coloring found with k=" +
                          std::to_string(k));
}

Graph random_degenerate(int n, int d, uint64_t seed) {
    if (n < 1 || d < 1) throw BadParams("random_degenerate: bad parameters");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        int cap = std::min(v, d);
        int cnt = std::uniform_int_distribution<int>(1, cap)(rng);
        std::vector<Vertex> earlier(v);
        std::iota(earlier.begin(), earlier.end(), 0);
        std::shuffle(earlier.begin(), earlier.end(), rng);
        for (int i = 0; i < cnt; ++i) g.add_edge(v, earlier[i]);
    }
    return g;
}

}  // namespace gen
}  // namespace recolor
