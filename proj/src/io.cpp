#include "recolor/io.hpp"

#include <fstream>
#include <sstream>

namespace recolor {
namespace io {

namespace {

void strip_comment(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Coloring parse_coloring(std::istream& in, int universe) {
    Coloring phi(universe, 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        std::istringstream ls(line);
        std::string vs;
        if (!(ls >> vs)) continue;
        if (vs.empty() || vs.back() != ':') fail(lineno, "expected `<v>: <c>`");
        int v;
        try {
            v = std::stoi(vs.substr(0, vs.size() - 1));
        } catch (...) {
            fail(lineno, "bad vertex `" + vs + "`");
        }
        if (v < 0 || v >= universe) fail(lineno, "vertex out of range");
        int c;
        if (!(ls >> c) || c < 1) fail(lineno, "bad color");
        std::string extra;
        if (ls >> extra) fail(lineno, "trailing tokens");
        phi[v] = c;
    }
    return phi;
}

Coloring parse_coloring_text(const std::string& text, int universe) {
    std::istringstream in(text);
    return parse_coloring(in, universe);
}

std::string serialize_coloring(const Coloring& phi) {
    std::ostringstream out;
    for (size_t v = 0; v < phi.size(); ++v)
        if (phi[v] > 0) out << v << ": " << phi[v] << "\n";
    return out.str();
}

Sequence parse_sequence(std::istream& in) {
    Sequence s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "plan") continue;  // plan-file header line
        int v;
        try {
            v = std::stoi(tok);
        } catch (...) {
            fail(lineno, "bad vertex `" + tok + "`");
        }
        std::string arrow;
        int c;
        if (!(ls >> arrow) || arrow != "->" || !(ls >> c) || c < 1)
            fail(lineno, "expected `<v> -> <c>`");
        std::string extra;
        if (ls >> extra) fail(lineno, "trailing tokens");
        s.push_back({v, c});
    }
    return s;
}

Sequence parse_sequence_text(const std::string& text) {
    std::istringstream in(text);
    return parse_sequence(in);
}

std::string serialize_sequence(const Sequence& s) {
    std::ostringstream out;
    for (const auto& st : s) out << st.v << " -> " << st.c << "\n";
    return out.str();
}

ListAssignment parse_lists(std::istream& in, int universe) {
    ListAssignment l(universe);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        std::istringstream ls(line);
        std::string vs;
        if (!(ls >> vs)) continue;
        if (vs.empty() || vs.back() != ':') fail(lineno, "expected `<v>: <c1> <c2> ...`");
        int v;
        try {
            v = std::stoi(vs.substr(0, vs.size() - 1));
        } catch (...) {
            fail(lineno, "bad vertex `" + vs + "`");
        }
        if (v < 0 || v >= universe) fail(lineno, "vertex out of range");
        int c;
        while (ls >> c) {
            if (c < 1 || c > kMaxColor) fail(lineno, "color out of range");
            l[v].insert(c);
        }
    }
    return l;
}

ListAssignment parse_lists_text(const std::string& text, int universe) {
    std::istringstream in(text);
    return parse_lists(in, universe);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << content;
}

}  // namespace io
}  // namespace recolor
