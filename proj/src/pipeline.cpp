#include "recolor/pipeline.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace recolor {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionViolated(msg);
}

std::vector<Vertex> complement(const Graph& g, const std::vector<Vertex>& drop) {
    std::set<Vertex> d(drop.begin(), drop.end());
    std::vector<Vertex> out;
    for (Vertex v : g.vertices())
        if (!d.count(v)) out.push_back(v);
    return out;
}

bool independent(const Graph& g, const std::vector<Vertex>& set) {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

int remainder_degeneracy(const Graph& g, const std::vector<Vertex>& iset) {
    auto rest = g.induced(complement(g, iset));
    if (rest.num_vertices() == 0) return 0;
    return degeneracy_ordering(rest).degeneracy;
}

// Greedy maximal independent set scanning `scan`; excluded vertices always
// have an earlier I-neighbor.
std::vector<Vertex> greedy_mis(const Graph& g, const std::vector<Vertex>& scan) {
    std::vector<char> blocked(g.universe(), 0);
    std::vector<Vertex> iset;
    for (Vertex v : scan) {
        if (blocked[v]) continue;
        iset.push_back(v);
        for (Vertex u : g.neighbors(v)) blocked[u] = 1;
    }
    std::sort(iset.begin(), iset.end());
    return iset;
}

}  // namespace

// ---------------------------------------------------------------------------

EliminationResult eliminate_color(const PlaneGraph& g, const ListAssignment& l,
                                  const Coloring& phi, const std::vector<Color>& f, Mode mode) {
    const int need = mode == Mode::General ? 10 : 7;
    for (Vertex v : g.vertices()) {
        require(static_cast<int>(l[v].size()) >= need, "list too small at vertex " +
                                                            std::to_string(v));
        require(l[v].contains(phi[v]), "phi is not an L-coloring");
        require(f[v] > 0 && f[v] <= kMaxColor, "forbidden color out of range");
    }
    require(g.proper(phi), "phi is not proper");
    if (mode == Mode::TriangleFree)
        require(!g.contains_triangle(), "graph has a triangle");

    Scene s;
    s.g = g;
    s.l1 = l;
    s.l2 = l;
    for (Vertex v : g.vertices()) s.l2[v].erase(f[v]);
    s.phi0 = phi;
    SolveResult r = solve(s, mode);

    EliminationResult out;
    out.sequence = r.witness.phase1;
    out.sequence.insert(out.sequence.end(), r.witness.phase2.begin(), r.witness.phase2.end());
    out.final = r.trajectory.c2;
    for (Vertex v : g.vertices())
        if (out.final[v] == f[v]) throw InternalError("elimination failed to avoid f");
    return out;
}

std::vector<Vertex> independent_set_degenerate(const Graph& g, int target_d, int restarts,
                                               int exact_cap) {
    require(target_d >= 0, "negative degeneracy target");
    if (g.num_vertices() == 0) return {};
    auto check = [&](const std::vector<Vertex>& iset) {
        return independent(g, iset) && remainder_degeneracy(g, iset) <= target_d;
    };
    if (degeneracy_ordering(g).degeneracy <= target_d) return {};

    // Deterministic pass: scan the reverse removal order.  Every vertex left
    // out has a later-in-removal-order neighbor in I, which certifies a
    // degeneracy drop by one.
    auto ord = degeneracy_ordering(g).order;
    std::vector<Vertex> rev(ord.rbegin(), ord.rend());
    auto iset = greedy_mis(g, rev);
    if (check(iset)) return iset;

    std::mt19937 rng(0x5eed);
    std::vector<Vertex> scan = g.vertices();
    for (int r = 0; r < restarts; ++r) {
        std::shuffle(scan.begin(), scan.end(), rng);
        iset = greedy_mis(g, scan);
        if (check(iset)) return iset;
    }

    if (g.num_vertices() <= exact_cap) {
        // Exact: enumerate independent sets, largest-first by vertex order.
        std::vector<Vertex> vs = g.vertices();
        std::vector<Vertex> cur;
        std::function<bool(size_t)> go = [&](size_t i) -> bool {
            if (check(cur)) return true;
            if (i == vs.size()) return false;
            bool ok = true;
            for (Vertex u : cur)
                if (g.adjacent(u, vs[i])) ok = false;
            if (ok) {
                cur.push_back(vs[i]);
                if (go(i + 1)) return true;
                cur.pop_back();
            }
            return go(i + 1);
        };
        if (go(0)) {
            std::sort(cur.begin(), cur.end());
            return cur;
        }
    }
    throw SearchExhausted("no independent set with a " + std::to_string(target_d) +
                          "-degenerate remainder found");
}

Sequence degenerate_recolor(const Graph& g, int d, int c, const Coloring& alpha,
                            const Coloring& beta) {
    require(c >= 2 * d + 2, "need c >= 2d+2");
    auto check_col = [&](const Coloring& x, const char* name) {
        require(g.proper(x), std::string(name) + " is not proper");
        for (Vertex v : g.vertices())
            require(x[v] >= 1 && x[v] <= c, std::string(name) + " uses a color beyond c");
    };
    check_col(alpha, "alpha");
    check_col(beta, "beta");
    if (g.num_vertices() == 0) return {};
    auto dord = degeneracy_ordering(g);
    require(dord.degeneracy <= d, "graph is not d-degenerate");
    const auto& ord = dord.order;  // ord[i] has <= d neighbors among ord[i+1..]

    // Build up from the last vertex; each added vertex has degree <= d in the
    // graph built so far, and its moves are forced by conflicting steps of
    // the inner replay (furthest-future choice among the free colors).
    Sequence seq;
    const int n = static_cast<int>(ord.size());
    if (alpha[ord[n - 1]] != beta[ord[n - 1]]) seq.push_back({ord[n - 1], beta[ord[n - 1]]});

    for (int i = n - 2; i >= 0; --i) {
        Vertex v = ord[i];
        std::vector<Vertex> verts(ord.begin() + i, ord.end());
        Graph cur_g = g.induced(verts);
        std::vector<Vertex> nbrs = cur_g.neighbors(v);

        Coloring cur = alpha;
        Sequence out;
        auto free_color = [&](size_t next_idx, Color pending) {
            ColorSet avail = ColorSet::range(1, c);
            avail.erase(pending);
            for (Vertex u : nbrs) avail.erase(cur[u]);
            // furthest next use by a neighbor wins
            Color best = 0;
            size_t best_at = 0;
            for (Color cc : avail.to_vector()) {
                size_t at = seq.size() + 1;
                for (size_t j = next_idx; j < seq.size(); ++j) {
                    bool nb = std::find(nbrs.begin(), nbrs.end(), seq[j].v) != nbrs.end();
                    if (nb && seq[j].c == cc) {
                        at = j;
                        break;
                    }
                }
                if (best == 0 || at > best_at) {
                    best = cc;
                    best_at = at;
                }
            }
            if (best == 0) throw InternalError("degenerate replay: no free color");
            return best;
        };
        for (size_t j = 0; j < seq.size(); ++j) {
            const Step& st = seq[j];
            bool nb = std::find(nbrs.begin(), nbrs.end(), st.v) != nbrs.end();
            if (nb && st.c == cur[v]) {
                Color cc = free_color(j, st.c);
                out.push_back({v, cc});
                cur[v] = cc;
            }
            out.push_back(st);
            cur[st.v] = st.c;
        }
        if (cur[v] != beta[v]) out.push_back({v, beta[v]});
        seq = std::move(out);
        if (static_cast<int>(seq.size()) > 2 * (d + 1) * n)
            throw InternalError("degenerate replay exceeded 2(d+1)n");
    }

    Coloring end = apply_sequence(g, alpha, seq);
    if (end != beta) throw InternalError("degenerate replay missed beta");
    return seq;
}

RecolorPlan recolor_planar(const PlaneGraph& g, const Coloring& alpha, const Coloring& beta,
                           int k, Mode mode) {
    require(k == (mode == Mode::General ? 10 : 7), "unsupported color count for this mode");
    const int n = g.num_vertices();
    ListAssignment l(g.universe());
    for (Vertex v : g.vertices()) {
        l[v] = ColorSet::range(1, k);
        require(alpha[v] >= 1 && alpha[v] <= k && beta[v] >= 1 && beta[v] <= k,
                "endpoint coloring out of range");
    }
    require(g.proper(alpha) && g.proper(beta), "endpoint coloring improper");

    std::vector<Color> f(g.universe(), k);
    EliminationResult ea = eliminate_color(g, l, alpha, f, mode);
    EliminationResult eb = eliminate_color(g, l, beta, f, mode);

    const int target_d = mode == Mode::General ? 3 : 2;
    std::vector<Vertex> iset = independent_set_degenerate(g.skeleton(), target_d);

    auto side = [&](const EliminationResult& e) {
        Sequence s = e.sequence;
        for (Vertex v : iset)
            if (e.final[v] != k) s.push_back({v, k});
        return s;
    };
    Sequence fwd = side(ea);

    Graph rest = g.skeleton().induced(complement(g.skeleton(), iset));
    Sequence core =
        rest.num_vertices() ? degenerate_recolor(rest, target_d, k - 1, ea.final, eb.final)
                            : Sequence{};
    fwd.insert(fwd.end(), core.begin(), core.end());

    RecolorPlan plan;
    plan.forward = std::move(fwd);
    plan.backward = reverse_sequence(g, beta, side(eb));
    plan.independent_set = iset;
    plan.total_length = static_cast<int>(plan.forward.size() + plan.backward.size());
    plan.budget = (mode == Mode::General ? 8 : 7) * n;

    Coloring end = apply_sequence(g, alpha, plan.flat());
    if (end != beta) throw InternalError("plan replay does not reach beta");
    return plan;
}

Sequence degchos_recolor(const Graph& g, const Coloring& alpha, int c, int d,
                         const ListSolver& list_solver) {
    auto dord = degeneracy_ordering(g);
    require(dord.degeneracy <= d, "graph is not d-degenerate");
    require(g.proper(alpha), "alpha is not proper");
    for (Vertex v : g.vertices())
        require(alpha[v] >= 1 && alpha[v] <= c + d + 1, "alpha uses a color beyond c+d+1");

    const auto& ord = dord.order;
    std::vector<int> pos(g.universe(), -1);
    for (size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<int>(i);

    ListAssignment l(g.universe());
    for (Vertex v : g.vertices()) {
        l[v] = ColorSet::range(1, c + d);
        for (Vertex u : g.neighbors(v))
            if (pos[u] > pos[v]) l[v].erase(alpha[u]);
    }
    Coloring prime = list_solver(g, l);
    for (Vertex v : g.vertices())
        if (prime[v] <= 0 || !l[v].contains(prime[v]))
            throw ListSolverFailed("solver output is not an L-coloring");
    if (!g.proper(prime)) throw ListSolverFailed("solver output is improper");

    Sequence seq;
    for (Vertex v : ord)
        if (alpha[v] != prime[v]) seq.push_back({v, prime[v]});
    ApplyOptions opts;
    opts.once_only = true;
    apply_sequence(g, alpha, seq, opts);
    return seq;
}

std::string serialize_plan(const RecolorPlan& plan, int n, int k, Mode mode) {
    std::ostringstream out;
    out << "plan n=" << n << " k=" << k
        << " mode=" << (mode == Mode::General ? "general" : "triangle_free")
        << " budget=" << plan.budget << " total_length=" << plan.total_length << "\n";
    for (const Step& s : plan.flat()) out << s.v << " -> " << s.c << "\n";
    return out.str();
}

}  // namespace recolor
