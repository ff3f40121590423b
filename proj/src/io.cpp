#include "sgf/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace sgf::io {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(line);
    }
    return lines;
}

int parse_int(const Line& l, const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        throw ParseError(l.number, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

int parse_sign(const Line& l, const std::string& tok) {
    if (tok == "+") return 1;
    if (tok == "-") return -1;
    throw ParseError(l.number, "expected '+' or '-', got '" + tok + "'");
}

}  // namespace

SignedGraph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty graph file");
    size_t i = 0;
    if (lines[i].tokens != std::vector<std::string>{"sgf", "1"})
        throw ParseError(lines[i].number, "expected header 'sgf 1'");
    ++i;
    if (i >= lines.size() || lines[i].tokens.size() != 2 || lines[i].tokens[0] != "v")
        throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                         "expected 'v <count>'");
    int n = parse_int(lines[i], lines[i].tokens[1], "vertex count");
    if (n < 0) throw ParseError(lines[i].number, "negative vertex count");
    ++i;
    std::map<int, EdgeData> edges;
    for (; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 5 || l.tokens[0] != "e")
            throw ParseError(l.number, "expected 'e <id> <u> <w> <+|->'");
        int id = parse_int(l, l.tokens[1], "edge id");
        int u = parse_int(l, l.tokens[2], "endpoint");
        int w = parse_int(l, l.tokens[3], "endpoint");
        int sign = parse_sign(l, l.tokens[4]);
        if (id < 1) throw ParseError(l.number, "edge ids start at 1");
        if (edges.count(id)) throw ParseError(l.number, "duplicate edge id");
        if (u < 0 || u >= n || w < 0 || w >= n)
            throw ParseError(l.number, "edge endpoint out of range");
        edges[id] = EdgeData{u, w, sign};
    }
    std::set<int> verts;
    for (int v = 0; v < n; ++v) verts.insert(v);
    return SignedGraph::from_parts(verts, edges);
}

std::string serialize_graph(const SignedGraph& g) {
    int n = g.vertex_count();
    for (int v : g.vertices())
        if (v < 0 || v >= n)
            throw std::invalid_argument("serialize_graph: vertex ids must be dense 0..n-1");
    std::ostringstream os;
    os << "sgf 1\n";
    os << "v " << n << "\n";
    for (const auto& [id, ed] : g.edges())
        os << "e " << id << " " << ed.u << " " << ed.w << " " << (ed.sign > 0 ? '+' : '-')
           << "\n";
    return os.str();
}

namespace {

void parse_flow_lines(const std::string& text, const SignedGraph& g, Orientation& tau,
                      std::map<int, int>& values, bool* saw_value) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty flow file");
    size_t i = 0;
    if (lines[i].tokens != std::vector<std::string>{"flw", "1"})
        throw ParseError(lines[i].number, "expected header 'flw 1'");
    ++i;
    for (; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] == "o") {
            if (l.tokens.size() != 4)
                throw ParseError(l.number, "expected 'o <edge-id> <+|-> <+|->'");
            int id = parse_int(l, l.tokens[1], "edge id");
            if (!g.has_edge(id)) throw ParseError(l.number, "unknown edge id");
            int t0 = parse_sign(l, l.tokens[2]);
            int t1 = parse_sign(l, l.tokens[3]);
            if (tau.tau.count(id)) throw ParseError(l.number, "duplicate orientation line");
            if (t0 * t1 != -g.edge(id).sign)
                throw ParseError(l.number, "orientation violates tau1*tau2 = -sign");
            tau.set(id, t0, t1);
        } else if (l.tokens[0] == "f") {
            if (l.tokens.size() != 3)
                throw ParseError(l.number, "expected 'f <edge-id> <int>'");
            int id = parse_int(l, l.tokens[1], "edge id");
            if (!g.has_edge(id)) throw ParseError(l.number, "unknown edge id");
            if (values.count(id)) throw ParseError(l.number, "duplicate value line");
            values[id] = parse_int(l, l.tokens[2], "flow value");
            if (saw_value) *saw_value = true;
        } else {
            throw ParseError(l.number, "expected an 'o' or 'f' line");
        }
    }
}

}  // namespace

FlowAssignment parse_flow(const std::string& text, const SignedGraph& g) {
    FlowAssignment fa;
    parse_flow_lines(text, g, fa.orientation, fa.value, nullptr);
    for (const auto& [id, ed] : g.edges()) {
        if (!fa.orientation.tau.count(id))
            throw ParseError(1, "missing orientation for edge " + std::to_string(id));
        if (!fa.value.count(id))
            throw ParseError(1, "missing value for edge " + std::to_string(id));
    }
    return fa;
}

std::string serialize_flow(const SignedGraph& g, const FlowAssignment& fa) {
    check_orientation(g, fa.orientation);
    std::ostringstream os;
    os << "flw 1\n";
    for (const auto& [id, ed] : g.edges()) {
        auto [t0, t1] = fa.orientation.tau.at(id);
        os << "o " << id << " " << (t0 > 0 ? '+' : '-') << " " << (t1 > 0 ? '+' : '-')
           << "\n";
    }
    for (const auto& [id, ed] : g.edges()) os << "f " << id << " " << fa.at(id) << "\n";
    return os.str();
}

Orientation parse_orientation(const std::string& text, const SignedGraph& g) {
    Orientation tau;
    std::map<int, int> ignored;
    parse_flow_lines(text, g, tau, ignored, nullptr);
    for (const auto& [id, ed] : g.edges())
        if (!tau.tau.count(id))
            throw ParseError(1, "missing orientation for edge " + std::to_string(id));
    return tau;
}

std::string serialize_orientation(const SignedGraph& g, const Orientation& tau) {
    check_orientation(g, tau);
    std::ostringstream os;
    os << "flw 1\n";
    for (const auto& [id, ed] : g.edges()) {
        auto [t0, t1] = tau.tau.at(id);
        os << "o " << id << " " << (t0 > 0 ? '+' : '-') << " " << (t1 > 0 ? '+' : '-')
           << "\n";
    }
    return os.str();
}

}  // namespace sgf::io
