#include "recolor/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace recolor {

namespace {

using Dart = std::pair<Vertex, Vertex>;

// Cyclic equality of two vertex walks, in either orientation.
bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    const size_t n = a.size();
    if (n == 0) return true;
    for (size_t off = 0; off < n; ++off) {
        bool fwd = true, bwd = true;
        for (size_t i = 0; i < n && (fwd || bwd); ++i) {
            if (a[i] != b[(off + i) % n]) fwd = false;
            if (a[i] != b[(off + n - i) % n]) bwd = false;
        }
        if (fwd || bwd) return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and validation

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<Vertex>> rot,
                                      std::vector<Vertex> outer) {
    PlaneGraph g;
    const int n = static_cast<int>(rot.size());
    g.adj_.assign(n, {});
    g.present_.assign(n, 1);
    g.rot_ = std::move(rot);
    g.outer_ = std::move(outer);
    for (Vertex v = 0; v < n; ++v) g.adj_[v] = g.rot_[v];
    g.trace_and_validate();
    return g;
}

void PlaneGraph::trace_and_validate() {
    const int n = universe();
    int m2 = 0;  // dart count
    for (Vertex v = 0; v < n; ++v) {
        if (!present_[v]) continue;
        std::set<Vertex> seen;
        for (Vertex u : rot_[v]) {
            if (u == v) throw NotSimple("loop at vertex " + std::to_string(v));
            if (u < 0 || u >= n || !present_[u])
                throw EmbeddingInvalid("rotation at " + std::to_string(v) +
                                       " references absent vertex " + std::to_string(u));
            if (!seen.insert(u).second)
                throw NotSimple("parallel edge " + std::to_string(v) + "-" + std::to_string(u));
            ++m2;
        }
    }
    // Symmetry.
    for (Vertex v = 0; v < n; ++v) {
        if (!present_[v]) continue;
        for (Vertex u : rot_[v]) {
            if (std::find(rot_[u].begin(), rot_[u].end(), v) == rot_[u].end())
                throw EmbeddingInvalid("edge " + std::to_string(v) + "-" + std::to_string(u) +
                                       " missing from the rotation at " + std::to_string(u));
        }
    }
    const int m = m2 / 2;
    const int nv = num_vertices();
    auto fs = faces();
    const int f = static_cast<int>(fs.size());
    const int c = static_cast<int>(components().size());
    // Per component n - m + f = 2 (each component traced separately).
    if (nv - m + f != 2 * c)
        throw EmbeddingInvalid("Euler check failed: n=" + std::to_string(nv) +
                               " m=" + std::to_string(m) + " f=" + std::to_string(f) +
                               " components=" + std::to_string(c));

    // The declared outer walk must be one of the traced faces.
    if (nv == 0) {
        if (!outer_.empty()) throw EmbeddingInvalid("outer walk on empty graph");
    } else if (outer_.empty()) {
        throw EmbeddingInvalid("missing outer walk");
    } else if (outer_.size() == 1) {
        Vertex v = outer_[0];
        if (!has(v) || !rot_[v].empty())
            throw EmbeddingInvalid("single-vertex outer walk on a vertex with edges");
    } else {
        for (size_t i = 0; i < outer_.size(); ++i) {
            Vertex a = outer_[i], b = outer_[(i + 1) % outer_.size()];
            if (!has(a) || !adjacent(a, b))
                throw EmbeddingInvalid("outer walk uses missing edge " + std::to_string(a) + "-" +
                                       std::to_string(b));
        }
        // Trace from the first outer dart and compare.
        std::vector<Vertex> traced;
        Vertex u = outer_[0], v = outer_[1];
        const Vertex u0 = u, v0 = v;
        do {
            traced.push_back(u);
            auto it = std::find(rot_[v].begin(), rot_[v].end(), u);
            Vertex w = rot_[v][(std::distance(rot_[v].begin(), it) + 1) % rot_[v].size()];
            u = v;
            v = w;
        } while (!(u == u0 && v == v0) && traced.size() <= outer_.size() + 1);
        if (traced != outer_)
            throw EmbeddingInvalid("outer walk is not a traced face");
    }

    outer_mark_.assign(n, 0);
    for (Vertex v : outer_) outer_mark_[v] = 1;
}

std::vector<std::vector<Vertex>> PlaneGraph::faces() const {
    std::vector<std::vector<Vertex>> out;
    std::set<Dart> seen;
    for (Vertex v = 0; v < universe(); ++v) {
        if (!has(v)) continue;
        if (rot_[v].empty()) {
            out.push_back({v});  // isolated vertex: one trivial face
            continue;
        }
        for (Vertex w : rot_[v]) {
            Dart start{v, w};
            if (seen.count(start)) continue;
            std::vector<Vertex> walk;
            Dart d = start;
            do {
                seen.insert(d);
                walk.push_back(d.first);
                auto [a, b] = d;
                auto it = std::find(rot_[b].begin(), rot_[b].end(), a);
                Vertex nxt = rot_[b][(std::distance(rot_[b].begin(), it) + 1) % rot_[b].size()];
                d = {b, nxt};
            } while (d != start);
            out.push_back(std::move(walk));
        }
    }
    return out;
}

std::vector<Vertex> PlaneGraph::outer_cycle() const {
    std::set<Vertex> s(outer_.begin(), outer_.end());
    if (s.size() != outer_.size())
        throw NotACycle("outer walk repeats a vertex (split at a cut vertex first)");
    return outer_;
}

// ---------------------------------------------------------------------------
// Text format

PlaneGraph PlaneGraph::parse(std::istream& in) {
    int n = -1;
    std::vector<std::vector<Vertex>> rot;
    std::vector<Vertex> outer;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "n") {
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            rot.assign(n, {});
        } else if (tok == "rot") {
            if (n < 0) fail("rot before n");
            std::string vs;
            if (!(ls >> vs) || vs.empty() || vs.back() != ':') fail("expected `rot <v>:`");
            int v = std::stoi(vs.substr(0, vs.size() - 1));
            if (v < 0 || v >= n) fail("vertex out of range");
            Vertex u;
            while (ls >> u) {
                if (u < 0 || u >= n) fail("neighbor out of range");
                rot[v].push_back(u);
            }
        } else if (tok == "outer:") {
            Vertex u;
            while (ls >> u) outer.push_back(u);
        } else {
            fail("unknown directive `" + tok + "`");
        }
    }
    if (n < 0) throw ParseError("missing `n` line");
    return from_rotations(std::move(rot), std::move(outer));
}

PlaneGraph PlaneGraph::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string PlaneGraph::serialize() const {
    std::ostringstream out;
    out << "n " << universe() << "\n";
    for (Vertex v = 0; v < universe(); ++v) {
        if (!has(v)) continue;
        out << "rot " << v << ":";
        for (Vertex u : rot_[v]) out << " " << u;
        out << "\n";
    }
    out << "outer:";
    for (Vertex v : outer_) out << " " << v;
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Surgery

PlaneGraph PlaneGraph::induced_plane(const std::vector<Vertex>& keep,
                                     const std::vector<Vertex>& fallback_face,
                                     bool any_face_ok) const {
    PlaneGraph g;
    const int n = universe();
    g.adj_.assign(n, {});
    g.present_.assign(n, 0);
    g.rot_.assign(n, {});
    for (Vertex v : keep) {
        if (!has(v)) throw BadParams("induced_plane: absent vertex " + std::to_string(v));
        g.present_[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!g.present_[v]) continue;
        for (Vertex u : rot_[v])
            if (g.present_[u]) g.rot_[v].push_back(u);
        g.adj_[v] = g.rot_[v];
    }

    // Outer face: prefer a surviving dart of the parent's outer walk.
    Dart start{-1, -1};
    for (size_t i = 0; i < outer_.size() && start.first < 0; ++i) {
        Vertex a = outer_[i], b = outer_[(i + 1) % outer_.size()];
        if (outer_.size() == 1 && g.present_[a]) {
            if (g.rot_[a].empty()) {
                g.outer_ = {a};
            }
            break;
        }
        if (g.present_[a] && g.present_[b] && g.adjacent(a, b)) start = {a, b};
    }
    if (start.first >= 0) {
        std::vector<Vertex> walk;
        Dart d = start;
        do {
            walk.push_back(d.first);
            auto [a, b] = d;
            auto it = std::find(g.rot_[b].begin(), g.rot_[b].end(), a);
            Vertex nxt = g.rot_[b][(std::distance(g.rot_[b].begin(), it) + 1) % g.rot_[b].size()];
            d = {b, nxt};
        } while (d != start);
        g.outer_ = std::move(walk);
    } else if (g.outer_.empty()) {
        if (!fallback_face.empty()) {
            for (auto& f : g.faces()) {
                if (cyclic_equal(f, fallback_face)) {
                    g.outer_ = f;
                    break;
                }
            }
            if (g.outer_.empty())
                throw EmbeddingInvalid("induced_plane: fallback face is not a face of the subgraph");
        } else if (keep.size() == 1) {
            g.outer_ = {keep[0]};
        } else if (any_face_ok) {
            auto fcs = g.faces();
            if (!fcs.empty()) g.outer_ = fcs.front();
        } else {
            throw EmbeddingInvalid("induced_plane: no outer dart survives and no fallback given");
        }
    }
    g.trace_and_validate();
    return g;
}

PlaneGraph PlaneGraph::without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex u : vertices())
        if (u != v) keep.push_back(u);
    return induced_plane(keep);
}

PlaneGraph PlaneGraph::without_edge(Vertex u, Vertex v) const {
    if (!adjacent(u, v)) throw BadParams("without_edge: no such edge");
    PlaneGraph g = *this;
    std::erase(g.rot_[u], v);
    std::erase(g.rot_[v], u);
    g.adj_[u] = g.rot_[u];
    g.adj_[v] = g.rot_[v];
    // Recompute the outer walk from a surviving outer dart.
    Dart start{-1, -1};
    for (size_t i = 0; i < outer_.size() && start.first < 0; ++i) {
        Vertex a = outer_[i], b = outer_[(i + 1) % outer_.size()];
        if ((a == u && b == v) || (a == v && b == u)) continue;
        if (outer_.size() >= 2) start = {a, b};
    }
    if (start.first < 0) throw EmbeddingInvalid("without_edge: outer walk destroyed");
    std::vector<Vertex> walk;
    Dart d = start;
    do {
        walk.push_back(d.first);
        auto [a, b] = d;
        auto it = std::find(g.rot_[b].begin(), g.rot_[b].end(), a);
        Vertex nxt = g.rot_[b][(std::distance(g.rot_[b].begin(), it) + 1) % g.rot_[b].size()];
        d = {b, nxt};
    } while (d != start);
    g.outer_ = std::move(walk);
    g.trace_and_validate();
    return g;
}

std::vector<PlaneGraph> PlaneGraph::plane_components() const {
    std::vector<PlaneGraph> out;
    for (auto& comp : components()) {
        std::set<Vertex> cs(comp.begin(), comp.end());
        bool has_outer_dart = false;
        for (size_t i = 0; i < outer_.size() && !has_outer_dart; ++i)
            if (cs.count(outer_[i])) has_outer_dart = true;
        if (has_outer_dart || comp.size() == 1) {
            out.push_back(induced_plane(comp));
        } else {
            // Interior island: any face may serve as its outer face.
            PlaneGraph tmp;
            tmp.adj_.assign(universe(), {});
            tmp.present_.assign(universe(), 0);
            tmp.rot_.assign(universe(), {});
            for (Vertex v : comp) tmp.present_[v] = 1;
            for (Vertex v : comp) {
                for (Vertex u : rot_[v])
                    if (tmp.present_[u]) tmp.rot_[v].push_back(u);
                tmp.adj_[v] = tmp.rot_[v];
            }
            auto fs = tmp.faces();
            tmp.outer_ = fs.front();
            tmp.trace_and_validate();
            out.push_back(std::move(tmp));
        }
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> PlaneGraph::outer_chords() const {
    auto k = outer_cycle();
    const int kn = static_cast<int>(k.size());
    std::vector<std::pair<Vertex, Vertex>> chords;
    for (int i = 0; i < kn; ++i) {
        for (int j = i + 2; j < kn; ++j) {
            if (i == 0 && j == kn - 1) continue;  // consecutive around the cycle
            if (adjacent(k[i], k[j]))
                chords.emplace_back(std::min(k[i], k[j]), std::max(k[i], k[j]));
        }
    }
    std::sort(chords.begin(), chords.end());
    return chords;
}

std::vector<Vertex> PlaneGraph::disk_interior(const std::vector<Vertex>& cycle) const {
    if (cycle.size() < 3) throw BadParams("disk_interior: not a cycle");
    std::set<Vertex> cyc(cycle.begin(), cycle.end());
    if (cyc.size() != cycle.size()) throw BadParams("disk_interior: repeated vertex");
    std::set<std::pair<Vertex, Vertex>> cyc_edges;
    for (size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!adjacent(a, b)) throw BadParams("disk_interior: missing cycle edge");
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }

    // Face ids per dart, plus which face is the outer one.
    auto fs = faces();
    std::map<Dart, int> face_of;
    int outer_face = -1;
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        const auto& w = fs[fi];
        if (w.size() >= 2) {
            for (size_t i = 0; i < w.size(); ++i)
                face_of[{w[i], w[(i + 1) % w.size()]}] = fi;
        }
        // Identify the outer face by its dart sequence.
        if (outer_face < 0 && w.size() == outer_.size()) {
            if (w.size() == 1 && outer_.size() == 1 && w[0] == outer_[0]) outer_face = fi;
            if (w.size() >= 2) {
                for (size_t off = 0; off < w.size() && outer_face < 0; ++off) {
                    bool eq = true;
                    for (size_t i = 0; i < w.size() && eq; ++i)
                        if (w[(off + i) % w.size()] != outer_[i]) eq = false;
                    if (eq) outer_face = fi;
                }
            }
        }
    }
    if (outer_face < 0) throw InternalError("disk_interior: outer face not found");

    // Union faces across every edge not on the cycle; the component holding
    // the outer face is the outside.
    std::vector<int> parent(fs.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Vertex v : vertices()) {
        for (Vertex u : rot_[v]) {
            if (u < v) continue;
            if (cyc_edges.count({v, u})) continue;
            int a = find(face_of.at({v, u})), b = find(face_of.at({u, v}));
            parent[a] = b;
        }
    }
    const int outside = find(outer_face);
    std::vector<Vertex> interior;
    for (Vertex v : vertices()) {
        if (cyc.count(v)) continue;
        if (rot_[v].empty()) continue;  // isolated vertices cannot be located
        Vertex u = rot_[v][0];
        if (find(face_of.at({v, u})) != outside) interior.push_back(v);
    }
    return interior;
}

// ---------------------------------------------------------------------------
// Splits

namespace {

// Arc of the outer cycle from a to b inclusive, walking forward.
std::vector<Vertex> outer_arc(const std::vector<Vertex>& k, Vertex a, Vertex b) {
    auto ia = std::find(k.begin(), k.end(), a);
    if (ia == k.end()) throw BadParams("arc endpoint not on outer cycle");
    std::vector<Vertex> arc;
    size_t i = std::distance(k.begin(), ia);
    for (size_t cnt = 0; cnt <= k.size(); ++cnt) {
        arc.push_back(k[i]);
        if (k[i] == b) return arc;
        i = (i + 1) % k.size();
    }
    throw BadParams("arc endpoint not on outer cycle");
}

}  // namespace

std::pair<PlaneGraph, PlaneGraph> split(const PlaneGraph& g, const Separator& sep,
                                        Vertex side_hint) {
    using Kind = Separator::Kind;
    switch (sep.kind) {
        case Kind::CutVertex: {
            Vertex v = sep.verts.at(0);
            auto comps = g.skeleton().without({v}).components();
            if (comps.size() < 2) throw NotSeparating("not a cut vertex");
            // G1 = component containing the hint (default: the first) plus v.
            size_t pick = 0;
            if (side_hint >= 0) {
                bool found = false;
                for (size_t i = 0; i < comps.size(); ++i)
                    if (std::find(comps[i].begin(), comps[i].end(), side_hint) != comps[i].end()) {
                        pick = i;
                        found = true;
                    }
                if (!found && side_hint != v) throw BadParams("side_hint not in any component");
            }
            std::vector<Vertex> s1 = comps[pick], s2{v};
            s1.push_back(v);
            for (size_t i = 0; i < comps.size(); ++i)
                if (i != pick) s2.insert(s2.end(), comps[i].begin(), comps[i].end());
            std::sort(s1.begin(), s1.end());
            std::sort(s2.begin(), s2.end());
            return {g.induced_plane(s1), g.induced_plane(s2)};
        }
        case Kind::Chord:
        case Kind::Path: {
            std::vector<Vertex> ends, mid;
            if (sep.kind == Kind::Chord) {
                ends = {sep.verts.at(0), sep.verts.at(1)};
                if (!g.adjacent(ends[0], ends[1])) throw BadParams("chord edge missing");
            } else {
                ends = {sep.verts.at(0), sep.verts.at(2)};
                mid = {sep.verts.at(1)};
                if (!g.adjacent(ends[0], mid[0]) || !g.adjacent(mid[0], ends[1]))
                    throw BadParams("path edges missing");
                if (g.adjacent(ends[0], ends[1]))
                    throw SeparatorNotInduced("path endpoints are adjacent");
                if (!g.internal(mid[0])) throw BadParams("path middle vertex is not internal");
            }
            auto k = g.outer_cycle();
            // Two closed regions: (arc a->b) + separator and (arc b->a) + separator.
            auto arc1 = outer_arc(k, ends[0], ends[1]);
            auto arc2 = outer_arc(k, ends[1], ends[0]);
            if (arc1.size() < 2 || arc2.size() < 2) throw NotSeparating("degenerate arcs");
            std::vector<Vertex> cyc1 = arc1;
            for (auto it = mid.rbegin(); it != mid.rend(); ++it) cyc1.push_back(*it);
            std::vector<Vertex> side1 = cyc1;
            if (cyc1.size() >= 3) {
                auto in1 = g.disk_interior(cyc1);
                side1.insert(side1.end(), in1.begin(), in1.end());
            }
            std::vector<Vertex> cyc2 = arc2;
            for (auto it = mid.begin(); it != mid.end(); ++it) cyc2.push_back(*it);
            std::vector<Vertex> side2 = cyc2;
            if (cyc2.size() >= 3) {
                auto in2 = g.disk_interior(cyc2);
                side2.insert(side2.end(), in2.begin(), in2.end());
            }
            std::sort(side1.begin(), side1.end());
            std::sort(side2.begin(), side2.end());
            size_t sep_size = ends.size() + mid.size();
            if (side1.size() <= sep_size || side2.size() <= sep_size)
                throw NotSeparating("separator does not split the graph");
            bool hint_in_1 = side_hint < 0 ||
                             std::binary_search(side1.begin(), side1.end(), side_hint);
            bool hint_in_2 =
                side_hint >= 0 && std::binary_search(side2.begin(), side2.end(), side_hint);
            if (side_hint >= 0 && hint_in_1 && hint_in_2) hint_in_1 = true;  // separator vertex
            if (side_hint >= 0 && !hint_in_1 && !hint_in_2)
                throw BadParams("side_hint not found on either side");
            auto g1 = g.induced_plane(hint_in_1 ? side1 : side2);
            auto g2 = g.induced_plane(hint_in_1 ? side2 : side1);
            return {std::move(g1), std::move(g2)};
        }
        case Kind::Cycle: {
            auto interior = g.disk_interior(sep.verts);
            if (interior.empty()) throw NotSeparating("cycle bounds a face or an empty disk");
            std::vector<Vertex> s2 = sep.verts;
            s2.insert(s2.end(), interior.begin(), interior.end());
            std::sort(s2.begin(), s2.end());
            std::set<Vertex> inset(interior.begin(), interior.end());
            std::vector<Vertex> s1;
            for (Vertex v : g.vertices())
                if (!inset.count(v)) s1.push_back(v);
            return {g.induced_plane(s1), g.induced_plane(s2, sep.verts)};
        }
    }
    throw BadParams("unknown separator kind");
}

// ---------------------------------------------------------------------------
// Boundary segments

bool is_boundary_segment(const PlaneGraph& g, const std::vector<Vertex>& h) {
    if (h.empty()) return true;
    const auto& w = g.outer_walk();
    if (h.size() == 1) return std::find(w.begin(), w.end(), h[0]) != w.end();
    if (h.size() > w.size()) return false;
    const size_t n = w.size();
    for (size_t off = 0; off < n; ++off) {
        bool fwd = true, bwd = true;
        for (size_t i = 0; i < h.size() && (fwd || bwd); ++i) {
            if (w[(off + i) % n] != h[i]) fwd = false;
            if (w[(off + n - i) % n] != h[i]) bwd = false;
        }
        if (fwd || bwd) return true;
    }
    return false;
}

bool segment_is_outer_cycle(const PlaneGraph& g, const std::vector<Vertex>& h) {
    std::vector<Vertex> k;
    try {
        k = g.outer_cycle();
    } catch (const NotACycle&) {
        return false;
    }
    if (h.size() != k.size()) return false;
    std::vector<Vertex> a = h, b = k;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// ---------------------------------------------------------------------------
// Reduction sites

namespace {

// Smallest cut vertex, or -1.
Vertex find_cut_vertex(const PlaneGraph& g) {
    if (g.num_vertices() < 3) return -1;
    for (Vertex v : g.vertices()) {
        if (g.skeleton().without({v}).components().size() >= 2) return v;
    }
    return -1;
}

bool face_exists(const std::vector<std::vector<Vertex>>& fs, const std::vector<Vertex>& cyc) {
    for (const auto& f : fs)
        if (cyclic_equal(f, cyc)) return true;
    return false;
}

// Smallest non-facial cycle of length within [3, maxlen], or empty.
std::vector<Vertex> find_nonfacial_cycle(const PlaneGraph& g, int maxlen) {
    auto fs = g.faces();
    std::vector<Vertex> best;
    auto consider = [&](const std::vector<Vertex>& cyc) {
        if (face_exists(fs, cyc)) return;
        if (best.empty() || cyc.size() < best.size() ||
            (cyc.size() == best.size() && cyc < best))
            best = cyc;
    };
    // DFS for cycles anchored at their smallest vertex.
    auto verts = g.vertices();
    for (Vertex a : verts) {
        std::vector<Vertex> path{a};
        std::function<void()> dfs = [&]() {
            Vertex last = path.back();
            for (Vertex u : g.neighbors(last)) {
                if (u == a && path.size() >= 3) {
                    // Canonical: second vertex smaller than last.
                    if (path[1] < path.back()) consider(path);
                    continue;
                }
                if (u <= a) continue;
                if (static_cast<int>(path.size()) >= maxlen) continue;
                if (std::find(path.begin(), path.end(), u) != path.end()) continue;
                path.push_back(u);
                dfs();
                path.pop_back();
            }
        };
        dfs();
    }
    return best;
}

}  // namespace

ReductionSite find_reduction_site(const PlaneGraph& g, const std::vector<Vertex>& h, Mode mode) {
    ReductionSite site;
    const int h_min = 3;  // both modes extend H to a 3-vertex path

    // 1. Cut vertex.
    if (Vertex v = find_cut_vertex(g); v >= 0) {
        site.kind = ReductionSite::Kind::CutVertex;
        site.v = v;
        return site;
    }

    std::vector<Vertex> k;
    try {
        k = g.outer_cycle();
    } catch (const NotACycle&) {
        throw InternalError("outer walk not a cycle with no cut vertex present");
    }

    const bool h_cycle = !h.empty() && segment_is_outer_cycle(g, h);

    // 2. Chords of the outer face with H inside one closed side (includes all
    // chords when H is shorter than a full path, and chords at the ends of H).
    // Chords attaching to a non-end vertex of a full H split H; they are
    // handled later (inner_chord).
    if (!h_cycle) {
        auto chords = g.outer_chords();
        std::set<Vertex> h_inner;
        for (size_t i = 0; i + 1 < h.size(); ++i)
            if (i >= 1) h_inner.insert(h[i]);
        for (auto [u, v] : chords) {
            bool inner = h_inner.count(u) || h_inner.count(v);
            if (!inner) {
                site.kind = ReductionSite::Kind::OuterChord;
                site.u = u;
                site.v = v;
                site.inner_chord = false;
                return site;
            }
        }
    }

    // 3. Non-facial short cycle.
    {
        int maxlen = mode == Mode::General ? 3 : 5;
        auto cyc = find_nonfacial_cycle(g, maxlen);
        if (!cyc.empty()) {
            site.kind = ReductionSite::Kind::NonFacialCycle;
            site.cycle = cyc;
            return site;
        }
    }

    // 4. Degree <= 2 vertex outside H (triangle-free only).
    if (mode == Mode::TriangleFree) {
        std::set<Vertex> hs(h.begin(), h.end());
        for (Vertex v : g.vertices()) {
            if (!hs.count(v) && g.degree(v) <= 2) {
                site.kind = ReductionSite::Kind::LowDegreeVertex;
                site.v = v;
                return site;
            }
        }
    }

    // 5. H bounding cycle (delete an edge) or H too small (extend).
    if (h_cycle) {
        site.kind = ReductionSite::Kind::SmallH;
        site.h_is_cycle = true;
        return site;
    }
    if (static_cast<int>(h.size()) < h_min) {
        site.kind = ReductionSite::Kind::SmallH;
        return site;
    }

    // 6. Remaining chords (attached to a non-end vertex of H).
    {
        auto chords = g.outer_chords();
        if (!chords.empty()) {
            auto [u, v] = chords.front();
            site.kind = ReductionSite::Kind::OuterChord;
            site.u = u;
            site.v = v;
            site.inner_chord = true;
            return site;
        }
    }

    // 7. Internal fan: internal vertex with two non-adjacent neighbors on the
    // outer cycle away from the protected part of H.
    {
        std::set<Vertex> protected_h;
        if (mode == Mode::General) {
            protected_h.insert(h.at(1));  // h2, the middle of the 3-path
        } else {
            for (size_t i = 1; i + 1 < h.size(); ++i) protected_h.insert(h[i]);
        }
        std::set<Vertex> on_k(k.begin(), k.end());
        for (Vertex v : g.vertices()) {
            if (g.on_outer(v)) continue;
            std::vector<Vertex> hits;
            for (Vertex u : g.neighbors(v))
                if (on_k.count(u) && !protected_h.count(u)) hits.push_back(u);
            std::sort(hits.begin(), hits.end());
            for (size_t i = 0; i < hits.size(); ++i) {
                for (size_t j = i + 1; j < hits.size(); ++j) {
                    if (!g.adjacent(hits[i], hits[j])) {
                        site.kind = ReductionSite::Kind::InternalFan;
                        site.v = v;
                        site.fan1 = hits[i];
                        site.fan2 = hits[j];
                        return site;
                    }
                }
            }
        }
    }

    // 8. Short outer face.
    {
        int klen = static_cast<int>(k.size());
        bool short_face = mode == Mode::General ? klen == 4 : klen <= 5;
        if (short_face) {
            site.kind = ReductionSite::Kind::ShortOuterFace;
            return site;
        }
    }

    site.kind = ReductionSite::Kind::MainStep;
    return site;
}

}  // namespace recolor
