#include "recolor/kernel.hpp"

#include <algorithm>
#include <string>

namespace recolor {

namespace {

std::string step_str(const Step& s) {
    return "(" + std::to_string(s.v) + " -> " + std::to_string(s.c) + ")";
}

bool properly_colored(const Graph& g, const Coloring& phi) { return g.proper(phi); }

}  // namespace

Coloring apply_sequence(const Graph& g, const Coloring& phi, const Sequence& sigma,
                        const ApplyOptions& opts) {
    if (!properly_colored(g, phi))
        throw ImproperStep(-1, "start coloring is not proper");
    Coloring cur = phi;
    std::vector<int> times(g.universe(), 0);
    std::vector<char> late(g.universe(), 0);
    if (opts.late_set)
        for (Vertex v : *opts.late_set) late[v] = 1;
    bool late_phase_started = false;

    for (int i = 0; i < static_cast<int>(sigma.size()); ++i) {
        const Step& st = sigma[i];
        if (!g.has(st.v))
            throw ImproperStep(i, "step " + step_str(st) + " on absent vertex");
        if (st.c <= 0)
            throw ImproperStep(i, "step " + step_str(st) + " with non-positive color");
        if (cur[st.v] == st.c)
            throw ImproperStep(i, "no-op step " + step_str(st) + " (vertex already has the color)");
        if (opts.lists && !(*opts.lists)[st.v].contains(st.c))
            throw ListViolation(i, "step " + step_str(st) + " outside the vertex's list");
        if (opts.once_only && times[st.v] >= 1)
            throw OnceOnlyViolation(st.v, "vertex " + std::to_string(st.v) + " recolored twice");
        if (opts.max_per_vertex > 0 && times[st.v] >= opts.max_per_vertex)
            throw MaxRecoloringsViolation(
                i, "vertex " + std::to_string(st.v) + " recolored more than " +
                       std::to_string(opts.max_per_vertex) + " times at step " + std::to_string(i));
        if (opts.late_set) {
            if (late[st.v]) {
                late_phase_started = true;
            } else if (late_phase_started) {
                throw LatenessViolation(i, "step " + step_str(st) +
                                               " outside the late set after a late step");
            }
        }
        for (Vertex u : g.neighbors(st.v))
            if (cur[u] == st.c)
                throw ImproperStep(i, "step " + step_str(st) + " conflicts with neighbor " +
                                          std::to_string(u));
        ++times[st.v];
        cur[st.v] = st.c;
        if (opts.paranoid && !properly_colored(g, cur))
            throw ImproperStep(i, "paranoid recheck failed after step " + step_str(st));
    }
    return cur;
}

Sequence restrict_sequence(const Sequence& sigma, const std::vector<Vertex>& set, bool keep) {
    std::vector<char> in;
    Vertex mx = -1;
    for (Vertex v : set) mx = std::max(mx, v);
    for (const Step& s : sigma) mx = std::max(mx, s.v);
    in.assign(mx + 1, 0);
    for (Vertex v : set) in[v] = 1;
    Sequence out;
    for (const Step& s : sigma)
        if (static_cast<bool>(in[s.v]) == keep) out.push_back(s);
    return out;
}

Sequence reverse_sequence(const Graph& g, const Coloring& phi_start, const Sequence& sigma) {
    // Record the color each step overwrites, then undo in reverse order.
    apply_sequence(g, phi_start, sigma);  // validates sigma is proper from phi_start
    Coloring cur = phi_start;
    std::vector<Color> old(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) {
        old[i] = cur[sigma[i].v];
        cur[sigma[i].v] = sigma[i].c;
    }
    Sequence out;
    for (size_t i = sigma.size(); i-- > 0;) out.push_back({sigma[i].v, old[i]});
    return out;
}

Witness reorder_witness(const Graph& g, const std::vector<Vertex>& h, const Coloring& phi0,
                        const Witness& omega, const Witness& sigma_h) {
    Graph hg = g.induced(h);
    Coloring phi_prev = phi0;
    Witness out;
    for (int i = 1; i <= 2; ++i) {
        Coloring phi_i = apply_sequence(g, phi_prev, omega.phase(i), {.once_only = true});
        // sigma_h must realize the same endpoints on H.
        Coloring got;
        try {
            got = apply_sequence(hg, phi_prev, sigma_h.phase(i), {.once_only = true});
        } catch (const Error& e) {
            throw IncompatibleEndpoints(std::string("replacement H-sequence invalid: ") + e.what());
        }
        for (Vertex v : h)
            if (got[v] != phi_i[v])
                throw IncompatibleEndpoints("replacement H-sequence ends at a different coloring on vertex " +
                                            std::to_string(v));
        Sequence pi = restrict_sequence(omega.phase(i), h, /*keep=*/false);
        pi.insert(pi.end(), sigma_h.phase(i).begin(), sigma_h.phase(i).end());
        // The observation guarantees properness; verify anyway.
        Coloring check = apply_sequence(g, phi_prev, pi, {.once_only = true, .late_set = &h});
        if (check != phi_i)
            throw InternalError("reorder_witness produced a different final coloring");
        out.phase(i) = std::move(pi);
        phi_prev = std::move(phi_i);
    }
    return out;
}

Witness combine(const Graph& g, const Graph& g1, const Graph& g2, const std::vector<Vertex>& h,
                const Coloring& phi0, const Witness& w1, const Witness& w2) {
    // P = V(G1) cap V(G2).
    std::vector<Vertex> p;
    for (Vertex v : g1.vertices())
        if (g2.has(v)) p.push_back(v);

    // Endpoint agreement on P per phase.
    Coloring c1 = phi0, c2 = phi0;
    Witness w1_on_p;
    for (int i = 1; i <= 2; ++i) {
        c1 = apply_sequence(g1, c1, w1.phase(i), {.once_only = true});
        c2 = apply_sequence(g2, c2, w2.phase(i), {.once_only = true, .late_set = &p});
        for (Vertex v : p)
            if (c1[v] != c2[v])
                throw IntersectionMismatch("witnesses disagree on shared vertex " +
                                           std::to_string(v) + " after phase " + std::to_string(i));
        w1_on_p.phase(i) = restrict_sequence(w1.phase(i), p, /*keep=*/true);
    }

    // Reorder w2's P-part to match w1's, then lead with w2's private steps.
    Witness w2r = reorder_witness(g2, p, phi0, w2, w1_on_p);
    Witness out;
    Coloring phi_prev = phi0;
    for (int i = 1; i <= 2; ++i) {
        Sequence omega = restrict_sequence(w2r.phase(i), p, /*keep=*/false);
        omega.insert(omega.end(), w1.phase(i).begin(), w1.phase(i).end());
        phi_prev = apply_sequence(g, phi_prev, omega, {.once_only = true, .late_set = &h});
        out.phase(i) = std::move(omega);
    }
    return out;
}

namespace {

bool order_search(const Graph& g, Coloring& cur, const Coloring& to, std::vector<Vertex>& pending,
                  const std::vector<char>& late, bool late_started, Sequence& out) {
    if (pending.empty()) return true;
    for (size_t i = 0; i < pending.size(); ++i) {
        Vertex v = pending[i];
        if (!late[v] && late_started) continue;
        if (late[v]) {
            // H-late: only once every non-late vertex is done.
            bool nonlate_left = false;
            for (Vertex u : pending)
                if (!late[u]) nonlate_left = true;
            if (nonlate_left) continue;
        }
        bool ok = true;
        for (Vertex u : g.neighbors(v))
            if (cur[u] == to[v]) ok = false;
        if (!ok) continue;
        Color saved = cur[v];
        cur[v] = to[v];
        std::swap(pending[i], pending.back());
        pending.pop_back();
        out.push_back({v, to[v]});
        if (order_search(g, cur, to, pending, late, late_started || late[v], out)) return true;
        out.pop_back();
        pending.push_back(v);
        std::swap(pending[i], pending.back());
        cur[v] = saved;
    }
    return false;
}

}  // namespace

std::optional<Sequence> find_once_only_order(const Graph& g, const Coloring& from,
                                             const Coloring& to,
                                             const std::vector<Vertex>& late_set) {
    std::vector<Vertex> pending;
    for (Vertex v : g.vertices())
        if (from[v] != to[v]) pending.push_back(v);
    std::vector<char> late(g.universe(), 0);
    for (Vertex v : late_set) late[v] = 1;
    Coloring cur = from;
    Sequence out;
    if (order_search(g, cur, to, pending, late, false, out)) return out;
    return std::nullopt;
}

}  // namespace recolor
