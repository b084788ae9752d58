#include "bcc/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace bcc {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

int parse_vertex(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'",
                         lineno);
    }
}

// Reads the "n <count>" header; returns count.
int parse_header(std::istream& in, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "n")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'n <count>' header",
                             lineno);
        std::string cnt;
        if (!(ls >> cnt))
            throw ParseError("line " + std::to_string(lineno) + ": missing vertex count", lineno);
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after count",
                             lineno);
        int n = parse_vertex(cnt, lineno);
        if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": negative count", lineno);
        return n;
    }
    throw ParseError("missing 'n <count>' header", lineno);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    int lineno = 0;
    int n = parse_header(in, lineno);
    std::vector<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "e")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'e <u> <v>'", lineno);
        std::string su, sv, extra;
        if (!(ls >> su >> sv))
            throw ParseError("line " + std::to_string(lineno) + ": edge needs two endpoints",
                             lineno);
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after edge",
                             lineno);
        int u = parse_vertex(su, lineno);
        int v = parse_vertex(sv, lineno);
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop", lineno);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range", lineno);
        edges.push_back(make_edge(u, v));
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const DomainError& e) {
        // only duplicate edges can still fail here; no single line to blame
        throw ParseError(std::string(e.what()), lineno);
    }
}

BicliqueSystem parse_system(std::istream& in) {
    int lineno = 0;
    int n = parse_header(in, lineno);
    BicliqueSystem system(n);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "b")
            throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'b <left...> | <right...>'",
                             lineno);
        std::vector<int> left, right;
        bool seen_bar = false;
        std::string tok;
        while (ls >> tok) {
            if (tok == "|") {
                if (seen_bar)
                    throw ParseError("line " + std::to_string(lineno) + ": duplicate '|'", lineno);
                seen_bar = true;
                continue;
            }
            (seen_bar ? right : left).push_back(parse_vertex(tok, lineno));
        }
        if (!seen_bar)
            throw ParseError("line " + std::to_string(lineno) + ": missing '|' separator", lineno);
        try {
            system.add(left, right);
        } catch (const StructureError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    return system;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return parse_graph(in);
}

BicliqueSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return parse_system(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

std::string format_system(const BicliqueSystem& system) {
    std::ostringstream out;
    out << "n " << system.universe() << "\n";
    for (const Biclique& b : system.bicliques()) {
        out << "b";
        b.left.for_each([&](int v) { out << " " << v; });
        out << " |";
        b.right.for_each([&](int v) { out << " " << v; });
        out << "\n";
    }
    return out.str();
}

}  // namespace bcc
