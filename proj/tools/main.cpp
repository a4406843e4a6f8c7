// planrecolor: build and check explicit recoloring plans for planar graphs.
//
// Exit codes:
//   0  success / verification passed
//   2  input parse failure
//   3  precondition or parameter failure (BadParams, PreconditionViolated)
//   4  search limits (SearchExhausted, StateSpaceTooLarge)
//   5  verification failure (improper step, list/once-only/lateness violation)
//   6  endpoints unreachable in the oracle
//  10  internal error (carries a scene dump for triage)

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "recolor/gen.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/pipeline.hpp"

using namespace recolor;
namespace fs = std::filesystem;

namespace {

Mode parse_mode(const std::string& m) {
    if (m == "general") return Mode::General;
    if (m == "triangle-free" || m == "triangle_free") return Mode::TriangleFree;
    throw BadParams("unknown mode: " + m);
}

PlaneGraph load_graph(const std::string& path) {
    return PlaneGraph::parse(io::read_file(path));
}

int run_solve(const std::string& graph_file, const std::string& alpha_file,
              const std::string& beta_file, int k, const std::string& mode_str,
              const std::string& out_file) {
    PlaneGraph g = load_graph(graph_file);
    Mode mode = parse_mode(mode_str);
    Coloring alpha = io::parse_coloring_text(io::read_file(alpha_file), g.universe());
    Coloring beta = io::parse_coloring_text(io::read_file(beta_file), g.universe());
    auto t0 = std::chrono::steady_clock::now();
    RecolorPlan plan = recolor_planar(g, alpha, beta, k, mode);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::string text = serialize_plan(plan, g.num_vertices(), k, mode);
    if (!out_file.empty()) io::write_file(out_file, text);
    bool pass = plan.total_length <= plan.budget;
    std::cout << "instance=" << graph_file << " n=" << g.num_vertices()
              << " m=" << g.num_edges() << " mode=" << mode_str << " budget=" << plan.budget
              << " length=" << plan.total_length << " ms=" << ms
              << " verdict=" << (pass ? "pass" : "fail") << "\n";
    if (out_file.empty()) std::cout << text;
    return pass ? 0 : 5;
}

int run_verify(const std::string& graph_file, const std::string& coloring_file,
               const std::string& seq_file, const std::string& lists_file, bool once_only,
               bool max_twice, const std::vector<Vertex>& late) {
    PlaneGraph g = load_graph(graph_file);
    Coloring phi = io::parse_coloring_text(io::read_file(coloring_file), g.universe());
    Sequence seq = io::parse_sequence_text(io::read_file(seq_file));
    ListAssignment lists;
    ApplyOptions opts;
    if (!lists_file.empty()) {
        lists = io::parse_lists_text(io::read_file(lists_file), g.universe());
        opts.lists = &lists;
    }
    opts.once_only = once_only;
    if (max_twice) opts.max_per_vertex = 2;
    if (!late.empty()) opts.late_set = &late;
    Coloring end = apply_sequence(g, phi, seq, opts);
    std::cout << "verdict=pass steps=" << seq.size() << "\n" << io::serialize_coloring(end);
    return 0;
}

int run_gen(const std::string& family, int n, int rows, int cols, int d, double keep,
            uint64_t seed, const std::string& out_file) {
    PlaneGraph g;
    if (family == "grid")
        g = gen::grid(rows, cols);
    else if (family == "cycle")
        g = gen::cycle(n);
    else if (family == "wheel")
        g = gen::wheel(n);
    else if (family == "stacked-triangulation")
        g = gen::stacked_triangulation(n, seed);
    else if (family == "random-planar")
        g = gen::random_planar(n, keep, seed);
    else if (family == "random-grid-subgraph")
        g = gen::random_grid_subgraph(rows, cols, keep, seed);
    else if (family == "p_dn")
        g = gen::p_dn(d, n);
    else
        throw BadParams("unknown family: " + family);
    std::string text = g.serialize();
    if (out_file.empty())
        std::cout << text;
    else
        io::write_file(out_file, text);
    return 0;
}

int run_bench(const std::string& dir, const std::string& mode_str, int k, uint64_t seed,
              const std::string& csv_file) {
    Mode mode = parse_mode(mode_str);
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".graph") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw BadParams("no .graph files in " + dir);

    std::ostringstream csv;
    csv << "instance,n,m,mode,budget,length,oracle_distance,ms,verdict\n";
    int failures = 0;
    for (const auto& f : files) {
        PlaneGraph g = load_graph(f);
        Coloring alpha = gen::random_coloring(g, k, seed);
        Coloring beta = gen::random_coloring(g, k, seed + 1);
        std::string verdict = "pass";
        int length = -1, budget = -1;
        std::string dist = "";
        auto t0 = std::chrono::steady_clock::now();
        try {
            RecolorPlan plan = recolor_planar(g, alpha, beta, k, mode);
            length = plan.total_length;
            budget = plan.budget;
            if (length > budget) verdict = "over-budget";
            try {
                dist = std::to_string(
                    oracle::reconfig_distance(g, k, alpha, beta, 200000));
            } catch (const StateSpaceTooLarge&) {
            }
        } catch (const Error& e) {
            verdict = std::string("error: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (verdict != "pass") ++failures;
        csv << fs::path(f).filename().string() << "," << g.num_vertices() << ","
            << g.num_edges() << "," << mode_str << "," << budget << "," << length << ","
            << dist << "," << ms << "," << verdict << "\n";
        std::cout << f << ": " << verdict << " length=" << length << "/" << budget << "\n";
    }
    if (!csv_file.empty()) io::write_file(csv_file, csv.str());
    std::cout << (failures ? "FAILURES: " : "all passed: ") << files.size() - failures << "/"
              << files.size() << "\n";
    return failures ? 5 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit recoloring plans for planar graphs"};
    app.require_subcommand(1);

    std::string graph_file, alpha_file, beta_file, out_file, mode_str = "general";
    std::string seq_file, lists_file, dir, family, csv_file;
    int k = 10, n = 0, rows = 0, cols = 0, d = 2;
    double keep = 0.7;
    uint64_t seed = 1;
    int64_t cap = oracle::kDefaultStateCap;
    bool once_only = false, max_twice = false;
    std::vector<Vertex> late;

    auto* solve = app.add_subcommand("solve", "build a full recoloring plan");
    solve->add_option("graph", graph_file)->required();
    solve->add_option("alpha", alpha_file)->required();
    solve->add_option("beta", beta_file)->required();
    solve->add_option("--k", k);
    solve->add_option("--mode", mode_str);
    solve->add_option("-o,--out", out_file);

    auto* verify = app.add_subcommand("verify", "replay a sequence with constraint flags");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("coloring", alpha_file)->required();
    verify->add_option("sequence", seq_file)->required();
    verify->add_option("--lists", lists_file);
    verify->add_flag("--once-only", once_only);
    verify->add_flag("--max-twice", max_twice);
    verify->add_option("--late", late);

    auto* odist = app.add_subcommand("oracle-distance", "exact BFS distance in R_k(G)");
    odist->add_option("graph", graph_file)->required();
    odist->add_option("alpha", alpha_file)->required();
    odist->add_option("beta", beta_file)->required();
    odist->add_option("--k", k);
    odist->add_option("--state-cap", cap);

    auto* odiam = app.add_subcommand("oracle-diameter", "diameter of R_k(G)");
    odiam->add_option("graph", graph_file)->required();
    odiam->add_option("--k", k);
    odiam->add_option("--state-cap", cap);

    auto* gencmd = app.add_subcommand("gen", "generate an embedded corpus graph");
    gencmd->add_option("family", family)->required();
    gencmd->add_option("--n", n);
    gencmd->add_option("--rows", rows);
    gencmd->add_option("--cols", cols);
    gencmd->add_option("--d", d);
    gencmd->add_option("--keep", keep);
    gencmd->add_option("--seed", seed);
    gencmd->add_option("-o,--out", out_file);

    auto* bench = app.add_subcommand("bench", "run solve over a corpus directory");
    bench->add_option("dir", dir)->required();
    bench->add_option("--k", k);
    bench->add_option("--mode", mode_str);
    bench->add_option("--seed", seed);
    bench->add_option("--csv", csv_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(graph_file, alpha_file, beta_file, k, mode_str, out_file);
        if (*verify)
            return run_verify(graph_file, alpha_file, seq_file, lists_file, once_only,
                              max_twice, late);
        if (*odist) {
            PlaneGraph g = load_graph(graph_file);
            Coloring a = io::parse_coloring_text(io::read_file(alpha_file), g.universe());
            Coloring b = io::parse_coloring_text(io::read_file(beta_file), g.universe());
            std::cout << oracle::reconfig_distance(g, k, a, b, cap) << "\n";
            return 0;
        }
        if (*odiam) {
            PlaneGraph g = load_graph(graph_file);
            auto diam = oracle::reconfig_diameter(g, k, cap);
            if (!diam) {
                std::cout << "disconnected\n";
                return 6;
            }
            std::cout << *diam << "\n";
            return 0;
        }
        if (*gencmd) return run_gen(family, n, rows, cols, d, keep, seed, out_file);
        if (*bench) return run_bench(dir, mode_str, k, seed, csv_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionViolated& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return 4;
    } catch (const StateSpaceTooLarge& e) {
        std::cerr << "state space too large: " << e.what() << "\n";
        return 4;
    } catch (const Unreachable& e) {
        std::cerr << "unreachable: " << e.what() << "\n";
        return 6;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        if (!e.dump.empty()) std::cerr << e.dump << "\n";
        return 10;
    } catch (const Error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
