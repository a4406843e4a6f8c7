#include "recolor/scene.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace recolor {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Small utilities

Color pick(const ColorSet& allowed, Color prefer) {
    if (prefer > 0 && allowed.contains(prefer)) return prefer;
    return allowed.smallest();  // 0 if empty
}

void push_step(Sequence& seq, Vertex v, Color from, Color to) {
    if (from != to) seq.push_back({v, to});
}

// Rotates / orients the cycle `k` so that `h` (consecutive on it) becomes a
// prefix in the given order.  For empty h, returns k unchanged.
std::vector<Vertex> align_cycle(std::vector<Vertex> k, const std::vector<Vertex>& h) {
    if (h.empty()) return k;
    const size_t n = k.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t off = 0; off < n; ++off) {
            bool ok = true;
            for (size_t i = 0; i < h.size() && ok; ++i)
                if (k[(off + i) % n] != h[i]) ok = false;
            if (ok) {
                std::rotate(k.begin(), k.begin() + off, k.end());
                return k;
            }
        }
        std::reverse(k.begin(), k.end());
    }
    throw InternalError("align_cycle: h is not consecutive on the cycle");
}

std::set<Vertex> to_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

// ---------------------------------------------------------------------------
// Verification of solved scenes

void verify_result(const Scene& s, const SolveResult& r) {
    for (Vertex v : s.g.vertices())
        if (r.trajectory.c0[v] != s.phi0[v])
            throw InternalError("solution trajectory does not start at phi0", dump_scene(s));
    Coloring cur = s.phi0;
    for (int i = 1; i <= 2; ++i) {
        const ListAssignment& li = i == 1 ? s.l1 : s.l2;
        ApplyOptions opts;
        opts.lists = &li;
        opts.once_only = true;
        opts.late_set = &s.h;
        Coloring nxt = apply_sequence(s.g, cur, r.witness.phase(i), opts);
        for (Vertex v : s.g.vertices()) {
            if (nxt[v] != r.trajectory.at(i)[v])
                throw InternalError("solution trajectory mismatch in phase " + std::to_string(i),
                                    dump_scene(s));
            if (!li[v].contains(nxt[v]))
                throw InternalError("phase " + std::to_string(i) +
                                        " endpoint is not a list coloring at vertex " +
                                        std::to_string(v),
                                    dump_scene(s));
        }
        if (restrict_sequence(r.witness.phase(i), s.h, true) != s.beta.phase(i))
            throw InternalError("solution witness does not replay beta in phase " +
                                    std::to_string(i),
                                dump_scene(s));
        cur = nxt;
    }
}

// ---------------------------------------------------------------------------
// Sub-scene plumbing

// Restriction of a witness to the vertices of `set` (per phase).
Witness restrict_witness(const Witness& w, const std::vector<Vertex>& set) {
    return {restrict_sequence(w.phase1, set, true), restrict_sequence(w.phase2, set, true)};
}

Witness strip_witness(const Witness& w, const std::vector<Vertex>& set) {
    return {restrict_sequence(w.phase1, set, false), restrict_sequence(w.phase2, set, false)};
}

Trajectory restrict_trajectory(const Trajectory& t, const std::vector<Vertex>& set, int universe) {
    Trajectory out;
    out.c0.assign(universe, 0);
    out.c1.assign(universe, 0);
    out.c2.assign(universe, 0);
    for (Vertex v : set) {
        out.c0[v] = t.c0[v];
        out.c1[v] = t.c1[v];
        out.c2[v] = t.c2[v];
    }
    return out;
}

SolveResult solve_impl(const Scene& s, Mode mode, int depth);

// Vertex deletion that keeps H on the outer walk even when no dart of the
// parent's outer face survives (degenerate leftovers: trees, edgeless bits).
PlaneGraph drop_vertex(const PlaneGraph& g, Vertex v, const std::vector<Vertex>& h) {
    std::vector<Vertex> keep;
    for (Vertex u : g.vertices())
        if (u != v) keep.push_back(u);
    PlaneGraph p = g.induced_plane(keep, {}, /*any_face_ok=*/true);
    if (!is_boundary_segment(p, h)) {
        for (auto& f : p.faces()) {
            PlaneGraph q = g.induced_plane(keep, f);
            if (is_boundary_segment(q, h)) return q;
        }
        throw InternalError("drop_vertex: no face keeps H on the boundary");
    }
    return p;
}

// Recursion wrapper: re-checks validity of the constructed sub-scene and
// verifies the sub-solution before it is composed further.  Disconnected
// sub-scenes are only structurally checked; the component split re-checks
// each part with its own outer face.
SolveResult recurse(const Scene& sub, Mode mode, int depth) {
    sub.validate_structure();
    if (!sub.g.connected()) {
        SolveResult r = solve_impl(sub, mode, depth + 1);
        verify_result(sub, r);
        return r;
    }
    auto rep = check_valid(sub, mode);
    if (!rep.valid) {
        std::string tags;
        for (auto& v : rep.violated) tags += v.tag + "(" + v.detail + ") ";
        throw InternalError("constructed sub-scene is invalid: " + tags, dump_scene(sub));
    }
    SolveResult r = solve_impl(sub, mode, depth + 1);
    verify_result(sub, r);
    return r;
}

// Merges a sub-result into the parent trajectory (entries on sub's vertices).
void merge_trajectory(Trajectory& into, const SolveResult& r, const Graph& subg) {
    for (Vertex v : subg.vertices()) {
        into.c1[v] = r.trajectory.c1[v];
        into.c2[v] = r.trajectory.c2[v];
    }
}

Trajectory fresh_trajectory(const Scene& s) {
    Trajectory t;
    t.c0 = s.phi0;
    t.c1 = s.phi0;
    t.c2 = s.phi0;
    return t;
}

// The "G1 solved first, then the piece hanging on P" composition: result
// witness is (W2 minus its P part) + W1, trajectories merged.
SolveResult compose_after(const Scene& s, const SolveResult& r1, const Graph& g1,
                          const SolveResult& r2, const Graph& g2,
                          const std::vector<Vertex>& p) {
    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, r2, g2);
    merge_trajectory(out.trajectory, r1, g1);
    Witness w2x = strip_witness(r2.witness, p);
    for (int i = 1; i <= 2; ++i) {
        Sequence seq = w2x.phase(i);
        const Sequence& w1 = r1.witness.phase(i);
        seq.insert(seq.end(), w1.begin(), w1.end());
        out.witness.phase(i) = std::move(seq);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The reduction cases

SolveResult solve_disconnected(const Scene& s, Mode mode, int depth) {
    auto comps = s.g.plane_components();
    // The component carrying H is composed last (H-lateness).
    size_t hidx = 0;
    if (!s.h.empty()) {
        for (size_t i = 0; i < comps.size(); ++i)
            if (comps[i].has(s.h[0])) hidx = i;
    }
    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    std::vector<SolveResult> results(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) {
        Scene sub;
        sub.g = comps[i];
        sub.l1 = s.l1;
        sub.l2 = s.l2;
        sub.phi0 = s.phi0;
        if (i == hidx) {
            sub.h = s.h;
            sub.delta = s.delta;
            sub.beta = s.beta;
        } else {
            sub.delta = fresh_trajectory(s);
        }
        results[i] = recurse(sub, mode, depth);
        merge_trajectory(out.trajectory, results[i], comps[i]);
    }
    for (int ph = 1; ph <= 2; ++ph) {
        Sequence seq;
        for (size_t i = 0; i < comps.size(); ++i) {
            if (i == hidx) continue;
            const Sequence& w = results[i].witness.phase(ph);
            seq.insert(seq.end(), w.begin(), w.end());
        }
        const Sequence& w = results[hidx].witness.phase(ph);
        seq.insert(seq.end(), w.begin(), w.end());
        out.witness.phase(ph) = std::move(seq);
    }
    return out;
}

SolveResult solve_cut_vertex(const Scene& s, Mode mode, int depth, Vertex v) {
    auto comps = s.g.skeleton().without({v}).components();
    std::set<Vertex> hrem = to_set(s.h);
    hrem.erase(v);
    std::vector<int> touching;  // components meeting H - v
    for (size_t i = 0; i < comps.size(); ++i)
        for (Vertex u : comps[i])
            if (hrem.count(u)) {
                touching.push_back(static_cast<int>(i));
                break;
            }

    auto piece = [&](const std::vector<int>& idxs) {
        std::vector<Vertex> keep{v};
        for (int i : idxs)
            keep.insert(keep.end(), comps[i].begin(), comps[i].end());
        std::sort(keep.begin(), keep.end());
        PlaneGraph p = s.g.induced_plane(keep, {}, /*any_face_ok=*/true);
        if (!p.on_outer(v)) {
            // interior island: make sure v ends up on the outer walk
            for (auto& f : p.faces())
                if (std::find(f.begin(), f.end(), v) != f.end())
                    return s.g.induced_plane(keep, f);
        }
        return p;
    };

    if (touching.size() <= 1) {
        // H lives (with v) in one piece; the rest hangs on v.
        int hc = touching.empty() ? 0 : touching[0];
        std::vector<int> rest;
        for (size_t i = 0; i < comps.size(); ++i)
            if (static_cast<int>(i) != hc) rest.push_back(static_cast<int>(i));
        PlaneGraph g1 = piece({hc}), g2 = piece(rest);

        Scene s1{g1, s.h, s.l1, s.l2, s.phi0, s.delta, s.beta};
        SolveResult r1 = recurse(s1, mode, depth);

        Scene s2;
        s2.g = g2;
        s2.h = {v};
        s2.l1 = s.l1;
        s2.l2 = s.l2;
        s2.phi0 = s.phi0;
        s2.delta = restrict_trajectory(r1.trajectory, {v}, s.g.universe());
        s2.beta = restrict_witness(r1.witness, {v});
        SolveResult r2 = recurse(s2, mode, depth);
        return compose_after(s, r1, g1, r2, g2, {v});
    }

    // v is a non-end vertex of H and splits it; solve the two sides
    // independently and replay beta whole at the end.
    auto it = std::find(s.h.begin(), s.h.end(), v);
    size_t t = std::distance(s.h.begin(), it);
    std::vector<Vertex> h1(s.h.begin(), s.h.begin() + t + 1);
    std::vector<Vertex> h2(s.h.begin() + t, s.h.end());
    std::vector<int> side1{touching[0]}, side2;
    std::set<Vertex> c1set(comps[touching[0]].begin(), comps[touching[0]].end());
    bool h1_in_side1 = c1set.count(h1[0]) > 0;
    for (size_t i = 0; i < comps.size(); ++i)
        if (static_cast<int>(i) != touching[0]) side2.push_back(static_cast<int>(i));
    PlaneGraph ga = piece(side1), gb = piece(side2);
    const PlaneGraph& gA = h1_in_side1 ? ga : gb;
    const PlaneGraph& gB = h1_in_side1 ? gb : ga;

    Scene sa{gA, h1, s.l1, s.l2, s.phi0, s.delta, restrict_witness(s.beta, h1)};
    Scene sb{gB, h2, s.l1, s.l2, s.phi0, s.delta, restrict_witness(s.beta, h2)};
    SolveResult ra = recurse(sa, mode, depth);
    SolveResult rb = recurse(sb, mode, depth);

    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, ra, gA);
    merge_trajectory(out.trajectory, rb, gB);
    for (int ph = 1; ph <= 2; ++ph) {
        Sequence seq = restrict_sequence(ra.witness.phase(ph), s.h, false);
        Sequence xb = restrict_sequence(rb.witness.phase(ph), s.h, false);
        seq.insert(seq.end(), xb.begin(), xb.end());
        const Sequence& b = s.beta.phase(ph);
        seq.insert(seq.end(), b.begin(), b.end());
        out.witness.phase(ph) = std::move(seq);
    }
    return out;
}

SolveResult solve_chord_split(const Scene& s, Mode mode, int depth, Vertex u, Vertex v) {
    Vertex hint = -1;
    for (Vertex x : s.h)
        if (x != u && x != v) {
            hint = x;
            break;
        }
    auto [g1, g2] = split(s.g, {Separator::Kind::Chord, {u, v}}, hint);

    Scene s1{g1, s.h, s.l1, s.l2, s.phi0, s.delta, s.beta};
    SolveResult r1 = recurse(s1, mode, depth);

    std::vector<Vertex> p{u, v};
    if (!is_boundary_segment(g2, p)) std::swap(p[0], p[1]);
    Scene s2;
    s2.g = g2;
    s2.h = p;
    s2.l1 = s.l1;
    s2.l2 = s.l2;
    s2.phi0 = s.phi0;
    s2.delta = restrict_trajectory(r1.trajectory, p, s.g.universe());
    s2.beta = restrict_witness(r1.witness, p);
    SolveResult r2 = recurse(s2, mode, depth);
    return compose_after(s, r1, g1, r2, g2, p);
}

SolveResult solve_nonfacial_cycle(const Scene& s, Mode mode, int depth,
                                  const std::vector<Vertex>& cyc) {
    auto [g1, g2] = split(s.g, {Separator::Kind::Cycle, cyc});

    Scene s1{g1, s.h, s.l1, s.l2, s.phi0, s.delta, s.beta};
    SolveResult r1 = recurse(s1, mode, depth);

    std::vector<Vertex> h2 = align_cycle(g2.outer_cycle(), {});
    Scene s2;
    s2.g = g2;
    s2.h = h2;
    s2.l1 = s.l1;
    s2.l2 = s.l2;
    s2.phi0 = s.phi0;
    s2.delta = restrict_trajectory(r1.trajectory, h2, s.g.universe());
    s2.beta = restrict_witness(r1.witness, h2);
    SolveResult r2 = recurse(s2, mode, depth);
    return compose_after(s, r1, g1, r2, g2, cyc);
}

SolveResult solve_low_degree(const Scene& s, Mode mode, int depth, Vertex v) {
    Scene sub{drop_vertex(s.g, v, s.h), s.h, s.l1, s.l2, s.phi0, s.delta, s.beta};
    SolveResult r = recurse(sub, mode, depth);

    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, r, sub.g);
    Color prev = s.phi0[v];
    for (int i = 1; i <= 2; ++i) {
        ColorSet allowed = (i == 1 ? s.l1 : s.l2)[v];
        for (Vertex u : s.g.neighbors(v)) {
            allowed.erase(r.trajectory.at(i - 1)[u]);
            allowed.erase(r.trajectory.at(i)[u]);
        }
        Color c = pick(allowed, prev);
        if (c == 0)
            throw InternalError("no color for deleted low-degree vertex", dump_scene(s));
        Sequence seq;
        push_step(seq, v, prev, c);
        const Sequence& w = r.witness.phase(i);
        seq.insert(seq.end(), w.begin(), w.end());
        out.witness.phase(i) = std::move(seq);
        out.trajectory.at(i)[v] = c;
        prev = c;
    }
    // phase-0 entry already holds phi0[v]
    return out;
}

SolveResult solve_h_cycle(const Scene& s, Mode mode, int depth) {
    Vertex a = s.h.front(), b = s.h.back();
    Scene sub{s.g.without_edge(a, b), s.h, s.l1, s.l2, s.phi0, s.delta, s.beta};
    // The witness for G - e is proper in G as well: the only steps on the two
    // ends of e are beta's, and beta is proper on the full cycle H.
    return recurse(sub, mode, depth);
}

SolveResult solve_extend_h(const Scene& s, Mode mode, int depth) {
    Vertex v;
    if (s.h.empty()) {
        v = s.g.outer_walk().front();
        for (Vertex u : s.g.outer_walk()) v = std::min(v, u);
    } else {
        auto k = align_cycle(s.g.outer_cycle(), s.h);
        v = k[s.h.size()];
    }
    Scene sub = s;
    sub.h.push_back(v);
    sub.delta.c0 = s.phi0;  // re-anchor (entries off H ignored)
    if (sub.delta.c1.empty()) sub.delta = fresh_trajectory(s);
    Color prev = s.phi0[v];
    sub.delta.c0[v] = prev;
    for (int i = 1; i <= 2; ++i) {
        ColorSet allowed = (i == 1 ? s.l1 : s.l2)[v];
        for (Vertex u : s.h) {
            allowed.erase(s.delta.at(i - 1)[u]);
            allowed.erase(s.delta.at(i)[u]);
        }
        Color c = pick(allowed, prev);
        if (c == 0) throw InternalError("no color to extend H", dump_scene(s));
        Sequence seq;
        push_step(seq, v, prev, c);
        const Sequence& b = s.beta.phase(i);
        seq.insert(seq.end(), b.begin(), b.end());
        sub.beta.phase(i) = std::move(seq);
        sub.delta.at(i)[v] = c;
        prev = c;
    }
    return recurse(sub, mode, depth);
}

// General mode: chord at the middle vertex of the 3-path H.
SolveResult solve_inner_chord_general(const Scene& s, Mode mode, int depth, Vertex cu,
                                      Vertex cv) {
    Vertex h1 = s.h[0], h2 = s.h[1], h3 = s.h[2];
    Vertex v = (cu == h2) ? cv : cu;
    if ((cu == h2 ? cu : cv) != h2)
        throw InternalError("inner chord does not touch the middle of H", dump_scene(s));

    // Colors for v: avoid the delta colors of its H-neighbors and, in phase
    // one, the single residual color of any tight-list common neighbor.
    std::array<Color, 3> psi{s.phi0[v], 0, 0};
    for (int i = 1; i <= 2; ++i) {
        ColorSet allowed = (i == 1 ? s.l1 : s.l2)[v];
        for (Vertex u : s.h)
            if (s.g.adjacent(u, v)) {
                allowed.erase(s.delta.at(i - 1)[u]);
                allowed.erase(s.delta.at(i)[u]);
            }
        if (i == 1) {
            for (Vertex hj : {h1, h3}) {
                for (Vertex z : s.g.vertices()) {
                    if (s.l1[z].size() != 6) continue;
                    if (!s.g.adjacent(z, v) || !s.g.adjacent(z, h2) || !s.g.adjacent(z, hj))
                        continue;
                    ColorSet resid = s.l1[z];
                    for (Color c : {s.phi0[v], s.delta.c0[h2], s.delta.c1[h2], s.delta.c0[hj],
                                    s.delta.c1[hj]})
                        resid.erase(c);
                    if (resid.size() == 1) allowed.erase(resid.smallest());
                }
            }
        }
        psi[i] = pick(allowed, psi[i - 1]);
        if (psi[i] == 0) throw InternalError("no color for chord vertex", dump_scene(s));
    }

    // Trajectory on H' = H + v, witnessed by recoloring v first.
    Trajectory dh = s.delta;
    if (dh.c0.empty()) dh = fresh_trajectory(s);
    dh.c0[v] = psi[0];
    dh.c1[v] = psi[1];
    dh.c2[v] = psi[2];
    Witness pi;
    for (int i = 1; i <= 2; ++i) {
        Sequence seq;
        push_step(seq, v, psi[i - 1], psi[i]);
        const Sequence& b = s.beta.phase(i);
        seq.insert(seq.end(), b.begin(), b.end());
        pi.phase(i) = std::move(seq);
    }

    auto [g1, g2] = split(s.g, {Separator::Kind::Chord, {h2, v}}, h1);
    std::vector<Vertex> ha{h1, h2, v}, hb{v, h2, h3};
    if (!g1.has(h1)) std::swap(ha, hb);  // split() honors the hint, but be safe

    Scene sa{g1, ha, s.l1, s.l2, s.phi0, restrict_trajectory(dh, ha, s.g.universe()),
             restrict_witness(pi, ha)};
    Scene sb{g2, hb, s.l1, s.l2, s.phi0, restrict_trajectory(dh, hb, s.g.universe()),
             restrict_witness(pi, hb)};
    SolveResult ra = recurse(sa, mode, depth);
    SolveResult rb = recurse(sb, mode, depth);

    std::vector<Vertex> hprime{h1, h2, h3, v};
    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, ra, g1);
    merge_trajectory(out.trajectory, rb, g2);
    for (int ph = 1; ph <= 2; ++ph) {
        Sequence seq = restrict_sequence(ra.witness.phase(ph), hprime, false);
        Sequence xb = restrict_sequence(rb.witness.phase(ph), hprime, false);
        seq.insert(seq.end(), xb.begin(), xb.end());
        const Sequence& p = pi.phase(ph);
        seq.insert(seq.end(), p.begin(), p.end());
        out.witness.phase(ph) = std::move(seq);
    }
    return out;
}

// Triangle-free mode: chord at a non-end vertex h_t of H.
SolveResult solve_inner_chord_tf(const Scene& s, Mode mode, int depth, Vertex cu, Vertex cv) {
    std::vector<Vertex> h = s.h;
    std::set<Vertex> hs = to_set(h);
    Vertex ht = hs.count(cu) ? cu : cv;
    Vertex v = (ht == cu) ? cv : cu;
    size_t t0 = std::distance(h.begin(), std::find(h.begin(), h.end(), ht));
    const size_t m = h.size();
    if (2 * (t0 + 1) > m + 1) {  // ensure t <= ceil(m/2) by flipping H
        std::reverse(h.begin(), h.end());
        t0 = m - 1 - t0;
    }

    auto [g1, g2] = split(s.g, {Separator::Kind::Chord, {ht, v}}, h[0]);
    std::vector<Vertex> h2seg(h.begin() + t0, h.end());
    if (!g2.has(h2seg.back())) throw InternalError("chord split sides mixed up", dump_scene(s));

    Scene s2{g2, h2seg, s.l1, s.l2, s.phi0, s.delta, restrict_witness(s.beta, h2seg)};
    SolveResult r2 = recurse(s2, mode, depth);

    // Q = h_1 ... h_t v; v takes its colors from the solved right-hand side,
    // recoloring just before h_t (as in the H2-late order of r2).
    std::vector<Vertex> q(h.begin(), h.begin() + t0 + 1);
    q.push_back(v);
    Trajectory dq = s.delta;
    dq.c0[v] = s.phi0[v];
    dq.c1[v] = r2.trajectory.c1[v];
    dq.c2[v] = r2.trajectory.c2[v];
    Witness gw;
    for (int i = 1; i <= 2; ++i) {
        Sequence seq = restrict_sequence(s.beta.phase(i), q, true);
        Sequence vstep;
        push_step(vstep, v, dq.at(i - 1)[v], dq.at(i)[v]);
        if (!vstep.empty()) {
            auto at = std::find_if(seq.begin(), seq.end(),
                                   [&](const Step& st) { return st.v == ht; });
            seq.insert(at, vstep[0]);
        }
        gw.phase(i) = std::move(seq);
    }

    Scene s1{g1, q, s.l1, s.l2, s.phi0, dq, gw};
    SolveResult r1 = recurse(s1, mode, depth);

    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, r2, g2);
    merge_trajectory(out.trajectory, r1, g1);
    for (int ph = 1; ph <= 2; ++ph) {
        Sequence seq = restrict_sequence(r1.witness.phase(ph), q, false);
        Sequence x2 = restrict_sequence(r2.witness.phase(ph), h2seg, false);
        seq.insert(seq.end(), x2.begin(), x2.end());
        const Sequence& b = s.beta.phase(ph);
        seq.insert(seq.end(), b.begin(), b.end());
        out.witness.phase(ph) = std::move(seq);
    }
    return out;
}

SolveResult solve_internal_fan(const Scene& s, Mode mode, int depth, Vertex v, Vertex v1,
                               Vertex v2) {
    ListAssignment l1mod = s.l1;
    if (mode == Mode::General) {
        // A tight-list common neighbor of v, v1, v2 constrains the color of v
        // ahead of time so the inner scene keeps (Gc).
        for (Vertex z : s.g.vertices()) {
            if (s.l1[z].size() != 6) continue;
            if (!s.g.adjacent(z, v) || !s.g.adjacent(z, v1) || !s.g.adjacent(z, v2)) continue;
            ColorSet c = s.l1[z];
            c.erase(s.phi0[v]);
            c.erase(s.phi0[v1]);
            c.erase(s.phi0[v2]);
            auto cs = c.to_vector();
            for (size_t i = 0; i < 3 && i < cs.size(); ++i) l1mod[v].erase(cs[i]);
            break;
        }
    }

    Vertex hint = s.h.at(1);
    auto [g1, g2] = split(s.g, {Separator::Kind::Path, {v1, v, v2}}, hint);

    Scene s1{g1, s.h, l1mod, s.l2, s.phi0, s.delta, s.beta};
    SolveResult r1 = recurse(s1, mode, depth);

    std::vector<Vertex> p{v1, v, v2};
    if (!is_boundary_segment(g2, p)) p = {v2, v, v1};
    Scene s2;
    s2.g = g2;
    s2.h = p;
    s2.l1 = s.l1;  // the original list of v
    s2.l2 = s.l2;
    s2.phi0 = s.phi0;
    s2.delta = restrict_trajectory(r1.trajectory, p, s.g.universe());
    s2.beta = restrict_witness(r1.witness, p);
    SolveResult r2 = recurse(s2, mode, depth);
    return compose_after(s, r1, g1, r2, g2, p);
}

SolveResult solve_short_face_general(const Scene& s, Mode mode, int depth) {
    auto k = align_cycle(s.g.outer_cycle(), s.h);
    Vertex h1 = s.h[0], h3 = s.h[2], v = k[3];
    std::array<Color, 3> c{s.phi0[v], 0, 0};
    for (int i = 1; i <= 2; ++i) {
        ColorSet allowed = (i == 1 ? s.l1 : s.l2)[v];
        for (Vertex u : {h1, h3}) {
            allowed.erase(s.delta.at(i - 1)[u]);
            allowed.erase(s.delta.at(i)[u]);
        }
        c[i] = pick(allowed, c[i - 1]);
        if (c[i] == 0) throw InternalError("no color for 4-face vertex", dump_scene(s));
    }

    ListAssignment l1p = s.l1, l2p = s.l2;
    for (Vertex u : s.g.neighbors(v)) {
        if (!s.g.internal(u)) continue;
        for (Color cc : c) l1p[u].erase(cc);
        l2p[u].erase(c[1]);
        l2p[u].erase(c[2]);
    }

    Scene sub{s.g.without_vertex(v), s.h, l1p, l2p, s.phi0, s.delta, s.beta};
    SolveResult r = recurse(sub, mode, depth);

    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, r, sub.g);
    out.trajectory.c1[v] = c[1];
    out.trajectory.c2[v] = c[2];
    for (int i = 1; i <= 2; ++i) {
        Sequence seq = restrict_sequence(r.witness.phase(i), s.h, false);
        push_step(seq, v, c[i - 1], c[i]);
        const Sequence& b = s.beta.phase(i);
        seq.insert(seq.end(), b.begin(), b.end());
        out.witness.phase(i) = std::move(seq);
    }
    return out;
}

// Triangle-free short outer face: lift delta to the whole (<=5)-cycle K by
// bounded search, then hand the cycle scene back to the recursion.
SolveResult solve_short_face_tf(const Scene& s, Mode mode, int depth) {
    auto k = align_cycle(s.g.outer_cycle(), s.h);
    Graph gk = s.g.skeleton().induced(k);
    std::vector<Vertex> rest(k.begin() + s.h.size(), k.end());

    // All proper list-colorings of K agreeing with `fixed` on H.
    auto extensions = [&](const ListAssignment& l, const Coloring& fixed) {
        std::vector<Coloring> out;
        Coloring cur = fixed;
        std::function<void(size_t)> go = [&](size_t i) {
            if (i == rest.size()) {
                out.push_back(cur);
                return;
            }
            Vertex u = rest[i];
            for (Color c : l[u].to_vector()) {
                bool ok = true;
                for (Vertex w : gk.neighbors(u))
                    if (cur[w] == c) ok = false;
                if (!ok) continue;
                cur[u] = c;
                go(i + 1);
                cur[u] = 0;
            }
        };
        go(0);
        return out;
    };

    Coloring f1 = s.phi0, f2 = s.phi0;
    for (Vertex u : rest) f1[u] = f2[u] = 0;
    for (Vertex u : s.h) {
        f1[u] = s.delta.c1[u];
        f2[u] = s.delta.c2[u];
    }
    Coloring start = s.phi0;

    for (const Coloring& psi1 : extensions(s.l1, f1)) {
        auto o1 = find_once_only_order(gk, start, psi1, s.h);
        if (!o1) continue;
        for (const Coloring& psi2 : extensions(s.l2, f2)) {
            auto o2 = find_once_only_order(gk, psi1, psi2, s.h);
            if (!o2) continue;
            Trajectory dk;
            dk.c0 = start;
            dk.c1 = psi1;
            dk.c2 = psi2;
            Witness pik;
            bool ok = true;
            for (int i = 1; i <= 2; ++i) {
                Sequence seq = restrict_sequence(i == 1 ? *o1 : *o2, s.h, false);
                const Sequence& b = s.beta.phase(i);
                seq.insert(seq.end(), b.begin(), b.end());
                // Re-anchoring beta at the end must stay proper on K.
                try {
                    apply_sequence(gk, i == 1 ? start : psi1, seq);
                } catch (const Error&) {
                    ok = false;
                    break;
                }
                pik.phase(i) = std::move(seq);
            }
            if (!ok) continue;
            Scene sub{s.g, k, s.l1, s.l2, s.phi0, dk, pik};
            return recurse(sub, mode, depth);
        }
    }
    throw InternalError("no lift of delta to the short outer cycle", dump_scene(s));
}

SolveResult solve_main_step(const Scene& s, Mode mode, int depth) {
    SolveResult st = stable_outer(s, mode);
    auto k = s.g.outer_cycle();
    std::set<Vertex> hs = to_set(s.h);
    std::vector<Vertex> kmh;
    for (Vertex v : k)
        if (!hs.count(v)) kmh.push_back(v);

    ListAssignment l1p = s.l1, l2p = s.l2;
    std::set<Vertex> ks = to_set(k);
    for (Vertex u : s.g.vertices()) {
        if (ks.count(u)) continue;
        for (Vertex w : s.g.neighbors(u)) {
            if (!ks.count(w) || hs.count(w)) continue;
            l1p[u].erase(s.phi0[w]);
            l1p[u].erase(st.trajectory.c1[w]);
            l2p[u].erase(st.trajectory.c1[w]);
        }
    }

    std::vector<Vertex> keep;
    std::set<Vertex> kmhs = to_set(kmh);
    for (Vertex u : s.g.vertices())
        if (!kmhs.count(u)) keep.push_back(u);
    PlaneGraph gp = s.g.induced_plane(keep);

    Scene sub{gp, s.h, l1p, l2p, s.phi0, s.delta, s.beta};
    SolveResult r = recurse(sub, mode, depth);

    SolveResult out;
    out.trajectory = fresh_trajectory(s);
    merge_trajectory(out.trajectory, r, gp);
    for (Vertex v : kmh) {
        out.trajectory.c1[v] = st.trajectory.c1[v];
        out.trajectory.c2[v] = st.trajectory.c2[v];
    }
    for (int i = 1; i <= 2; ++i) {
        Sequence seq = restrict_sequence(r.witness.phase(i), s.h, false);
        const Sequence& p = st.witness.phase(i);
        seq.insert(seq.end(), p.begin(), p.end());
        out.witness.phase(i) = std::move(seq);
    }
    return out;
}

SolveResult solve_impl(const Scene& s, Mode mode, int depth) {
    if (depth > 10000) throw InternalError("recursion depth exceeded", dump_scene(s));

    if (s.g.num_vertices() == static_cast<int>(s.h.size())) {
        SolveResult r;
        r.trajectory = fresh_trajectory(s);
        for (Vertex v : s.h) {
            r.trajectory.c1[v] = s.delta.c1[v];
            r.trajectory.c2[v] = s.delta.c2[v];
        }
        r.witness = s.beta;
        return r;
    }
    if (!s.g.connected()) return solve_disconnected(s, mode, depth);

    ReductionSite site = find_reduction_site(s.g, s.h, mode);
    switch (site.kind) {
        case ReductionSite::Kind::CutVertex:
            return solve_cut_vertex(s, mode, depth, site.v);
        case ReductionSite::Kind::OuterChord:
            if (!site.inner_chord) return solve_chord_split(s, mode, depth, site.u, site.v);
            return mode == Mode::General
                       ? solve_inner_chord_general(s, mode, depth, site.u, site.v)
                       : solve_inner_chord_tf(s, mode, depth, site.u, site.v);
        case ReductionSite::Kind::NonFacialCycle:
            return solve_nonfacial_cycle(s, mode, depth, site.cycle);
        case ReductionSite::Kind::LowDegreeVertex:
            return solve_low_degree(s, mode, depth, site.v);
        case ReductionSite::Kind::SmallH:
            return site.h_is_cycle ? solve_h_cycle(s, mode, depth)
                                   : solve_extend_h(s, mode, depth);
        case ReductionSite::Kind::InternalFan:
            return solve_internal_fan(s, mode, depth, site.v, site.fan1, site.fan2);
        case ReductionSite::Kind::ShortOuterFace:
            return mode == Mode::General ? solve_short_face_general(s, mode, depth)
                                         : solve_short_face_tf(s, mode, depth);
        case ReductionSite::Kind::MainStep:
            return solve_main_step(s, mode, depth);
    }
    throw InternalError("unhandled reduction site", dump_scene(s));
}

}  // namespace

// ---------------------------------------------------------------------------
// Scene structure and validity

void Scene::validate_structure() const {
    if (!g.proper(phi0)) throw PreconditionViolated("phi0 is not a proper coloring");
    std::set<Vertex> seen;
    for (Vertex v : h) {
        if (!g.has(v)) throw PreconditionViolated("H vertex not in G");
        if (!seen.insert(v).second) throw PreconditionViolated("H repeats a vertex");
    }
    if (!is_boundary_segment(g, h))
        throw PreconditionViolated("H is not consecutive on the outer face");
    if (h.empty()) return;
    Graph gh = g.induced(h);
    for (Vertex v : h) {
        if (delta.c0.empty() || delta.c0[v] != phi0[v])
            throw PreconditionViolated("delta does not start at phi0 on H");
    }
    Coloring cur = delta.c0;
    for (int i = 1; i <= 2; ++i) {
        const ListAssignment& li = i == 1 ? l1 : l2;
        ApplyOptions opts;
        opts.lists = &li;
        opts.once_only = true;
        Coloring nxt = apply_sequence(gh, cur, beta.phase(i), opts);
        for (Vertex v : h) {
            if (nxt[v] != delta.at(i)[v])
                throw PreconditionViolated("beta does not replay delta in phase " +
                                           std::to_string(i));
            if (!li[v].contains(delta.at(i)[v]))
                throw PreconditionViolated("delta phase " + std::to_string(i) +
                                           " is not a list coloring of H");
        }
        cur = nxt;
    }
}

ValidityReport check_valid(const Scene& s, Mode mode) {
    ValidityReport rep;
    auto flag = [&](const std::string& tag, std::vector<Vertex> vs, const std::string& detail) {
        rep.valid = false;
        rep.violated.push_back({tag, std::move(vs), detail});
    };
    const bool h_cycle = segment_is_outer_cycle(s.g, s.h) && s.h.size() >= 3;

    if (mode == Mode::General) {
        if (!h_cycle && s.h.size() > 3) flag("size-of-H", s.h, "|V(H)| > 3");
        for (Vertex v : s.g.vertices()) {
            if ((s.l1[v] - s.l2[v]).size() > 1)
                flag("Ga", {v}, "|L1-L2| > 1");
            if (s.l1[v].size() < 6 || s.l2[v].size() < 7)
                flag("Ga", {v}, "outer list sizes below 6/7");
            if (s.g.internal(v) && (s.l1[v].size() < 10 || s.l2[v].size() < 9))
                flag("Gb", {v}, "internal list sizes below 10/9");
        }
        if (s.h.size() == 3) {
            ColorSet u;
            for (Vertex x : s.h) {
                u.insert(s.delta.c0[x]);
                u.insert(s.delta.c1[x]);
            }
            for (Vertex v : s.g.vertices()) {
                bool all = true;
                for (Vertex x : s.h)
                    if (!s.g.adjacent(v, x)) all = false;
                if (all && s.l1[v] == u) flag("Gc", {v}, "list equals the delta colors of H");
            }
        }
    } else {
        if (s.g.contains_triangle()) flag("triangle", {}, "graph contains a triangle");
        if (!h_cycle && s.h.size() > 5) flag("size-of-H", s.h, "|V(H)| > 5");
        for (Vertex v : s.g.vertices()) {
            if ((s.l1[v] - s.l2[v]).size() > 1)
                flag("Ta", {v}, "|L1-L2| > 1");
            if (s.l1[v].size() < 5 || s.l2[v].size() < 5)
                flag("Ta", {v}, "list sizes below 5/5");
            if (s.g.internal(v) && (s.l1[v].size() < 7 || s.l2[v].size() < 6))
                flag("Tb", {v}, "internal list sizes below 7/6");
        }
        if (!h_cycle && s.h.size() >= 4) {
            auto strong = [&](Vertex x) {
                for (Vertex u : s.g.neighbors(x)) {
                    if (std::find(s.h.begin(), s.h.end(), u) != s.h.end()) continue;
                    if (s.l1[u].size() < 7 || s.l2[u].size() < 6) return false;
                }
                return true;
            };
            int cnt = (strong(s.h.front()) ? 1 : 0) + (strong(s.h.back()) ? 1 : 0);
            if (cnt < static_cast<int>(s.h.size()) - 3)
                flag("Tb", {s.h.front(), s.h.back()}, "too few strong ends of H");
        }
        if (!h_cycle && s.h.size() == 5) {
            std::set<Vertex> hs = to_set(s.h);
            for (Vertex v : s.g.vertices()) {
                if (hs.count(v)) continue;
                int cnt = 0;
                for (Vertex u : s.g.neighbors(v))
                    if (hs.count(u)) ++cnt;
                if (cnt > 1) flag("Tc", {v}, "two neighbors in the 5-vertex H");
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Stable lift of delta to the outer cycle

SolveResult stable_outer(const Scene& s, Mode mode) {
    std::vector<Vertex> k = align_cycle(s.g.outer_cycle(), s.h);
    const size_t m_h = s.h.size();
    if (m_h < 3 || k.size() < m_h + 2)
        throw PreconditionViolated("stable_outer: outer cycle too short");
    std::vector<Vertex> hseq = s.h;
    std::vector<Vertex> vseq(k.begin() + m_h, k.end());

    auto lcommon = [&](Vertex v) { return s.l1[v] & s.l2[v]; };
    auto d = [&](int i, Vertex u) { return s.delta.at(i)[u]; };

    Coloring psi1 = s.phi0;
    Sequence order;  // phase-one steps on K - H, in recoloring order

    if (mode == Mode::General) {
        const size_t m = vseq.size();
        Vertex h1 = hseq[0], h3 = hseq[2];
        for (size_t i = 0; i < m; ++i) {
            Vertex vi = vseq[i];
            ColorSet allowed = lcommon(vi);
            if (i == 0)
                for (int j = 0; j <= 2; ++j) allowed.erase(d(j, h3));
            else
                allowed.erase(psi1[vseq[i - 1]]);
            if (i + 1 < m)
                allowed.erase(s.phi0[vseq[i + 1]]);
            else
                for (int j = 0; j <= 2; ++j) allowed.erase(d(j, h1));
            Color c = pick(allowed, s.phi0[vi]);
            if (c == 0) throw InternalError("stable lift: empty choice", dump_scene(s));
            push_step(order, vi, s.phi0[vi], c);
            psi1[vi] = c;
        }
    } else {
        // Orientation: v_1 must have a large shared list when t = 2.
        size_t t = vseq.size();
        if (t == 2 && lcommon(vseq[0]).size() < 6) {
            std::reverse(hseq.begin(), hseq.end());
            std::reverse(vseq.begin(), vseq.end());
        }
        Vertex hfirst = hseq.front(), hlast = hseq.back();
        auto lp = [&](Vertex v, Vertex hend) {
            ColorSet c = lcommon(v);
            for (int j = 0; j <= 2; ++j) c.erase(d(j, hend));
            return c;
        };
        std::vector<Color> c(t + 1, 0);
        auto commit = [&](std::initializer_list<size_t> idxs) {
            for (size_t j : idxs) {
                push_step(order, vseq[j - 1], s.phi0[vseq[j - 1]], c[j]);
                psi1[vseq[j - 1]] = c[j];
            }
        };
        auto fail = [&]() -> Color {
            throw InternalError("stable lift (t-free): empty choice", dump_scene(s));
        };
        auto phi = [&](size_t j) { return s.phi0[vseq[j - 1]]; };
        auto L = [&](size_t j) { return lcommon(vseq[j - 1]); };
        if (t == 2) {
            if (lcommon(vseq[0]).size() < 6) fail();
            ColorSet s2 = lp(vseq[1], hfirst);
            c[2] = pick(s2, phi(2));
            ColorSet s1 = lp(vseq[0], hlast);
            s1.erase(phi(2));
            s1.erase(c[2]);
            c[1] = pick(s1, phi(1));
            if (c[1] == 0 || c[2] == 0) fail();
            commit({1, 2});
        } else if (t == 3) {
            c[1] = pick(lp(vseq[0], hlast), phi(1));
            c[3] = pick(lp(vseq[2], hfirst), phi(3));
            if (c[1] == 0 || c[3] == 0) fail();
            if (c[1] != phi(2)) {
                ColorSet s2 = L(2);
                s2.erase(c[1]);
                s2.erase(c[3]);
                s2.erase(phi(3));
                c[2] = pick(s2, phi(2));
                if (c[2] == 0) fail();
                commit({1, 2, 3});
            } else if (c[3] != phi(2)) {
                ColorSet s2 = L(2);
                s2.erase(c[3]);
                s2.erase(c[1]);
                s2.erase(phi(1));
                c[2] = pick(s2, phi(2));
                if (c[2] == 0) fail();
                commit({3, 2, 1});
            } else {
                ColorSet s2 = L(2);
                s2.erase(c[1]);
                s2.erase(phi(1));
                s2.erase(phi(3));
                c[2] = pick(s2, phi(2));
                if (c[2] == 0) fail();
                commit({2, 1, 3});
            }
        } else {
            c[1] = pick(lp(vseq[0], hlast), phi(1));
            c[t] = pick(lp(vseq[t - 1], hfirst), phi(t));
            if (c[1] == 0 || c[t] == 0) fail();
            {
                ColorSet s2 = L(2);
                s2.erase(c[1]);
                s2.erase(phi(1));
                s2.erase(phi(3));
                c[2] = pick(s2, phi(2));
                if (c[2] == 0) fail();
            }
            for (size_t j = 3; j <= t - 2; ++j) {
                ColorSet sj = L(j);
                sj.erase(c[j - 1]);
                sj.erase(phi(j + 1));
                c[j] = pick(sj, phi(j));
                if (c[j] == 0) fail();
            }
            {
                ColorSet st = L(t - 1);
                st.erase(c[t - 2]);
                st.erase(c[t]);
                st.erase(phi(t));
                c[t - 1] = pick(st, phi(t - 1));
                if (c[t - 1] == 0) fail();
            }
            for (size_t j = 2; j <= t; ++j) commit({j});
            commit({1});
        }
    }

    SolveResult out;
    out.trajectory.c0.assign(s.g.universe(), 0);
    out.trajectory.c1.assign(s.g.universe(), 0);
    out.trajectory.c2.assign(s.g.universe(), 0);
    for (Vertex v : k) {
        out.trajectory.c0[v] = s.phi0[v];
        out.trajectory.c1[v] = psi1[v];
        out.trajectory.c2[v] = psi1[v];
    }
    for (Vertex u : s.h) {
        out.trajectory.c1[u] = s.delta.c1[u];
        out.trajectory.c2[u] = s.delta.c2[u];
    }
    out.witness.phase1 = order;
    out.witness.phase1.insert(out.witness.phase1.end(), s.beta.phase1.begin(),
                              s.beta.phase1.end());
    out.witness.phase2 = s.beta.phase2;

    // Verify on the cycle before handing the lift out.
    Graph gk = s.g.skeleton().induced(k);
    Coloring cur = s.phi0;
    for (int i = 1; i <= 2; ++i) {
        ApplyOptions opts;
        opts.once_only = true;
        opts.late_set = &s.h;
        cur = apply_sequence(gk, cur, out.witness.phase(i), opts);
        for (Vertex v : k)
            if (cur[v] != out.trajectory.at(i)[v])
                throw InternalError("stable lift endpoint mismatch", dump_scene(s));
    }
    return out;
}

SolveResult solve(const Scene& s, Mode mode) {
    s.validate_structure();
    auto rep = check_valid(s, mode);
    if (!rep.valid) {
        std::string tags;
        for (auto& v : rep.violated) tags += v.tag + "(" + v.detail + ") ";
        throw PreconditionViolated("scene is not valid: " + tags);
    }
    SolveResult r = solve_impl(s, mode, 0);
    verify_result(s, r);
    return r;
}

// ---------------------------------------------------------------------------
// JSON dumps

std::string dump_scene(const Scene& s) {
    json j;
    j["graph"] = s.g.serialize();
    j["h"] = s.h;
    auto lists = [&](const ListAssignment& l) {
        json out = json::object();
        for (Vertex v : s.g.vertices()) out[std::to_string(v)] = l[v].to_vector();
        return out;
    };
    j["l1"] = lists(s.l1);
    j["l2"] = lists(s.l2);
    auto coloring = [&](const Coloring& c) {
        json out = json::object();
        for (Vertex v : s.g.vertices())
            if (v < static_cast<int>(c.size()) && c[v] > 0) out[std::to_string(v)] = c[v];
        return out;
    };
    j["phi0"] = coloring(s.phi0);
    j["delta"] = {{"c0", coloring(s.delta.c0)},
                  {"c1", coloring(s.delta.c1)},
                  {"c2", coloring(s.delta.c2)}};
    auto seq = [](const Sequence& sq) {
        json out = json::array();
        for (const auto& st : sq) out.push_back({st.v, st.c});
        return out;
    };
    j["beta"] = {{"phase1", seq(s.beta.phase1)}, {"phase2", seq(s.beta.phase2)}};
    return j.dump(2);
}

Scene parse_scene_dump(const std::string& text) {
    json j = json::parse(text);
    Scene s;
    s.g = PlaneGraph::parse(j.at("graph").get<std::string>());
    s.h = j.at("h").get<std::vector<Vertex>>();
    const int n = s.g.universe();
    auto lists = [&](const json& out) {
        ListAssignment l(n);
        for (auto& [k, v] : out.items())
            for (Color c : v.get<std::vector<Color>>()) l[std::stoi(k)].insert(c);
        return l;
    };
    s.l1 = lists(j.at("l1"));
    s.l2 = lists(j.at("l2"));
    auto coloring = [&](const json& out) {
        Coloring c(n, 0);
        for (auto& [k, v] : out.items()) c[std::stoi(k)] = v.get<Color>();
        return c;
    };
    s.phi0 = coloring(j.at("phi0"));
    s.delta.c0 = coloring(j.at("delta").at("c0"));
    s.delta.c1 = coloring(j.at("delta").at("c1"));
    s.delta.c2 = coloring(j.at("delta").at("c2"));
    auto seq = [](const json& arr) {
        Sequence sq;
        for (auto& st : arr) sq.push_back({st.at(0).get<Vertex>(), st.at(1).get<Color>()});
        return sq;
    };
    s.beta.phase1 = seq(j.at("beta").at("phase1"));
    s.beta.phase2 = seq(j.at("beta").at("phase2"));
    return s;
}

}  // namespace recolor
