#include "recolor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace recolor {
namespace oracle {

namespace {

// Compressed key: colors of present vertices in ascending vertex order.
std::vector<char> encode(const Coloring& phi, const std::vector<Vertex>& verts) {
    std::vector<char> key(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) key[i] = static_cast<char>(phi[verts[i]]);
    return key;
}

}  // namespace

int ReconfigGraph::state_index(const Coloring& phi) const {
    auto key = encode(phi, verts);
    for (size_t i = 0; i < states.size(); ++i)
        if (encode(states[i], verts) == key) return static_cast<int>(i);
    return -1;
}

ReconfigGraph build_reconfig_graph(const Graph& g, int k, int64_t cap) {
    if (k < 1) throw BadParams("build_reconfig_graph: need k >= 1");
    ReconfigGraph r;
    r.k = k;
    r.verts = g.vertices();
    const int n = static_cast<int>(r.verts.size());

    std::map<std::vector<char>, int> index;
    Coloring phi(g.universe(), 0);
    std::function<void(int)> enumerate = [&](int i) {
        if (i == n) {
            if (static_cast<int64_t>(r.states.size()) >= cap)
                throw StateSpaceTooLarge("more than " + std::to_string(cap) +
                                         " proper colorings");
            index.emplace(encode(phi, r.verts), static_cast<int>(r.states.size()));
            r.states.push_back(phi);
            return;
        }
        Vertex v = r.verts[i];
        for (Color c = 1; c <= k; ++c) {
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (phi[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            phi[v] = c;
            enumerate(i + 1);
            phi[v] = 0;
        }
    };
    enumerate(0);

    r.moves.assign(r.states.size(), {});
    for (size_t si = 0; si < r.states.size(); ++si) {
        Coloring cur = r.states[si];
        for (Vertex v : r.verts) {
            Color old = cur[v];
            for (Color c = 1; c <= k; ++c) {
                if (c == old) continue;
                bool ok = true;
                for (Vertex u : g.neighbors(v))
                    if (cur[u] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                cur[v] = c;
                auto it = index.find(encode(cur, r.verts));
                cur[v] = old;
                if (it != index.end()) r.moves[si].push_back(it->second);
            }
        }
    }
    return r;
}

namespace {

std::vector<int> bfs(const ReconfigGraph& r, int src) {
    std::vector<int> dist(r.states.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : r.moves[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist;
}

}  // namespace

int reconfig_distance(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                      int64_t cap) {
    if (!g.proper(alpha) || !g.proper(beta))
        throw PreconditionViolated("reconfig_distance: endpoint coloring not proper");
    auto r = build_reconfig_graph(g, k, cap);
    int a = r.state_index(alpha), b = r.state_index(beta);
    if (a < 0 || b < 0)
        throw PreconditionViolated("reconfig_distance: endpoint uses a color above k");
    auto dist = bfs(r, a);
    if (dist[b] < 0) throw Unreachable("colorings lie in different components of R_k");
    return dist[b];
}

std::optional<int> reconfig_diameter(const Graph& g, int k, int64_t cap) {
    auto r = build_reconfig_graph(g, k, cap);
    if (r.states.empty()) return std::nullopt;  // no colorings at all
    int diam = 0;
    for (size_t s = 0; s < r.states.size(); ++s) {
        auto dist = bfs(r, static_cast<int>(s));
        for (int d : dist) {
            if (d < 0) return std::nullopt;  // disconnected
            diam = std::max(diam, d);
        }
    }
    return diam;
}

std::optional<Coloring> exact_list_coloring(const Graph& g, const ListAssignment& l) {
    auto verts = g.vertices();
    Coloring phi(g.universe(), 0);
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == verts.size()) return true;
        Vertex v = verts[i];
        for (Color c : l[v].to_vector()) {
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (phi[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            phi[v] = c;
            if (go(i + 1)) return true;
            phi[v] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return phi;
}

namespace {

// Independent order search (deliberately separate from the kernel's): recolor
// each vertex of the diff set exactly once, H steps strictly after the rest.
std::optional<Sequence> order_search(const Graph& g, Coloring cur, const Coloring& to,
                                     const std::set<Vertex>& hset) {
    std::vector<Vertex> diff;
    for (Vertex v : g.vertices())
        if (cur[v] != to[v]) diff.push_back(v);
    Sequence seq;
    std::function<bool()> go = [&]() -> bool {
        bool any = false, any_nonh = false;
        for (Vertex v : diff)
            if (cur[v] != to[v]) {
                any = true;
                if (!hset.count(v)) any_nonh = true;
            }
        if (!any) return true;
        for (Vertex v : diff) {
            if (cur[v] == to[v]) continue;
            if (any_nonh && hset.count(v)) continue;  // lateness
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (cur[u] == to[v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Color old = cur[v];
            cur[v] = to[v];
            seq.push_back({v, to[v]});
            if (go()) return true;
            seq.pop_back();
            cur[v] = old;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    return seq;
}

// Enumerates proper L-colorings of g that agree with `fixed` wherever fixed
// is nonzero; calls sink until it returns true (found) or the cap trips.
bool enumerate_extensions(const Graph& g, const ListAssignment& l, const Coloring& fixed,
                          int64_t cap, const std::function<bool(const Coloring&)>& sink) {
    auto verts = g.vertices();
    Coloring phi(g.universe(), 0);
    int64_t count = 0;
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == verts.size()) {
            if (++count > cap)
                throw StateSpaceTooLarge("brute_scene_trajectory: extension enumeration cap");
            return sink(phi);
        }
        Vertex v = verts[i];
        std::vector<Color> opts =
            fixed[v] > 0 ? std::vector<Color>{fixed[v]} : l[v].to_vector();
        for (Color c : opts) {
            if (fixed[v] == 0 && !l[v].contains(c)) continue;
            if (fixed[v] > 0 && !l[v].contains(c)) return false;
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (phi[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            phi[v] = c;
            if (go(i + 1)) return true;
            phi[v] = 0;
        }
        return false;
    };
    return go(0);
}

}  // namespace

BruteResult brute_scene_trajectory(const Scene& s, int64_t cap) {
    BruteResult res;
    const Graph& g = s.g;
    std::set<Vertex> hset(s.h.begin(), s.h.end());
    Coloring fixed1(g.universe(), 0), fixed2(g.universe(), 0);
    for (Vertex v : s.h) {
        fixed1[v] = s.delta.c1[v];
        fixed2[v] = s.delta.c2[v];
    }

    enumerate_extensions(g, s.l1, fixed1, cap, [&](const Coloring& phi1) {
        auto s1 = order_search(g, s.phi0, phi1, hset);
        if (!s1) return false;
        return enumerate_extensions(g, s.l2, fixed2, cap, [&](const Coloring& phi2) {
            auto s2 = order_search(g, phi1, phi2, hset);
            if (!s2) return false;
            res.exists = true;
            res.trajectory = {s.phi0, phi1, phi2};
            res.witness = {*s1, *s2};
            return true;
        });
    });
    return res;
}

}  // namespace oracle
}  // namespace recolor
