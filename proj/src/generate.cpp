#include "sgf/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "sgf/oracle.hpp"

namespace sgf::gen {

namespace {

struct FamilySpec {
    std::string name;
    std::vector<std::string> params;
};

FamilySpec split_family(const std::string& family) {
    FamilySpec fs;
    auto colon = family.find(':');
    fs.name = family.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = family.substr(colon + 1);
        size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) {
                fs.params.push_back(rest.substr(pos));
                break;
            }
            fs.params.push_back(rest.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    return fs;
}

int param_int(const FamilySpec& fs, size_t i, int fallback) {
    if (i >= fs.params.size()) return fallback;
    try {
        return std::stoi(fs.params[i]);
    } catch (...) {
        throw std::invalid_argument("generate: bad parameter '" + fs.params[i] + "'");
    }
}

double param_double(const FamilySpec& fs, size_t i, double fallback) {
    if (i >= fs.params.size()) return fallback;
    try {
        return std::stod(fs.params[i]);
    } catch (...) {
        throw std::invalid_argument("generate: bad parameter '" + fs.params[i] + "'");
    }
}

int draw_sign(std::mt19937_64& rng, double negprob) {
    long long threshold = std::llround(negprob * 1000000.0);
    return static_cast<long long>(rng() % 1000000) < threshold ? -1 : 1;
}

SignedGraph complete_bipartite(int a, int b) {
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j, 1});
    return SignedGraph::build(a + b, edges);
}

Generated make_fig1() {
    // Three gadgets {a, b, c}: positive b-a and b-c, two parallel negative
    // a-c edges; positive spoke from each b to the hub.
    std::vector<std::tuple<int, int, int>> edges;
    for (int gdg = 0; gdg < 3; ++gdg) {
        int a = 3 * gdg, b = 3 * gdg + 1, c = 3 * gdg + 2;
        edges.push_back({b, a, 1});
        edges.push_back({b, c, 1});
        edges.push_back({a, c, -1});
        edges.push_back({a, c, -1});
    }
    int hub = 9;
    for (int gdg = 0; gdg < 3; ++gdg) edges.push_back({3 * gdg + 1, hub, 1});
    Generated out{SignedGraph::build(10, edges), std::nullopt};

    // The all-ones flow is discovered, not hard-coded.
    oracle::EdgeConstraints ones;
    for (const auto& [id, ed] : out.graph.edges()) ones[id] = {1, -1};
    auto fa = oracle::search_flow(out.graph, FlowSpec::modulo(3, true), ones);
    if (fa) {
        for (auto& [id, v] : fa->value)
            if (v < 0) {
                v = -v;
                auto& [t0, t1] = fa->orientation.tau[id];
                t0 = -t0;
                t1 = -t1;
            }
        out.flow = *fa;
    }
    return out;
}

}  // namespace

Generated generate(const std::string& family, std::uint64_t seed) {
    FamilySpec fs = split_family(family);
    std::mt19937_64 rng(seed);

    if (fs.name == "fig1") return make_fig1();
    if (fs.name == "negloops") {
        int n = param_int(fs, 0, 2);
        if (n < 0) throw std::invalid_argument("generate: negloops needs n >= 0");
        std::vector<std::tuple<int, int, int>> edges(n, {0, 0, -1});
        return {SignedGraph::build(1, edges), std::nullopt};
    }
    if (fs.name == "k33") return {complete_bipartite(3, 3), std::nullopt};
    if (fs.name == "k55") return {complete_bipartite(5, 5), std::nullopt};
    if (fs.name == "bowtie")
        return {SignedGraph::build(
                    5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 1}, {3, 4, 1}, {4, 0, 1}}),
                std::nullopt};
    if (fs.name == "two-triangles-bridge")
        return {SignedGraph::build(6, {{0, 1, 1},
                                       {1, 2, 1},
                                       {2, 0, 1},
                                       {3, 4, 1},
                                       {4, 5, 1},
                                       {5, 3, 1},
                                       {0, 3, 1}}),
                std::nullopt};
    if (fs.name == "random") {
        int n = param_int(fs, 0, 6);
        int m = param_int(fs, 1, 9);
        double negprob = param_double(fs, 2, 0.3);
        if (n < 1 || m < 0) throw std::invalid_argument("generate: random needs n >= 1");
        std::vector<std::tuple<int, int, int>> edges;
        for (int i = 0; i < m; ++i) {
            int u = static_cast<int>(rng() % n);
            int w = static_cast<int>(rng() % n);
            edges.push_back({u, w, draw_sign(rng, negprob)});
        }
        return {SignedGraph::build(n, edges), std::nullopt};
    }
    if (fs.name == "random-eulerian") {
        int n = param_int(fs, 0, 6);
        int m = param_int(fs, 1, 9);
        double negprob = param_double(fs, 2, 0.3);
        if (n < 1 || m < 0) throw std::invalid_argument("generate: bad parameters");
        std::vector<std::tuple<int, int, int>> edges;
        std::vector<int> deg(n, 0);
        for (int i = 0; i < m; ++i) {
            int u = static_cast<int>(rng() % n);
            int w = static_cast<int>(rng() % n);
            edges.push_back({u, w, draw_sign(rng, negprob)});
            deg[u] += 1;
            deg[w] += 1;
        }
        std::vector<int> odd;
        for (int v = 0; v < n; ++v)
            if (deg[v] % 2 != 0) odd.push_back(v);
        for (size_t i = 0; i + 1 < odd.size(); i += 2)
            edges.push_back({odd[i], odd[i + 1], draw_sign(rng, negprob)});
        return {SignedGraph::build(n, edges), std::nullopt};
    }
    if (fs.name == "random-bridgeless-cubic") {
        int n = param_int(fs, 0, 6);
        double negprob = param_double(fs, 1, 0.0);
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("generate: cubic family needs even n >= 4");
        for (int attempt = 0; attempt < 10000; ++attempt) {
            std::vector<int> stubs;
            for (int v = 0; v < n; ++v)
                for (int i = 0; i < 3; ++i) stubs.push_back(v);
            for (size_t i = stubs.size(); i > 1; --i)
                std::swap(stubs[i - 1], stubs[rng() % i]);
            bool loop = false;
            std::vector<std::tuple<int, int, int>> edges;
            for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
                if (stubs[i] == stubs[i + 1]) {
                    loop = true;
                    break;
                }
                edges.push_back({stubs[i], stubs[i + 1], draw_sign(rng, negprob)});
            }
            if (loop) continue;
            SignedGraph g = SignedGraph::build(n, edges);
            if (g.connected() && g.bridges_and_blocks().bridges.empty())
                return {g, std::nullopt};
        }
        throw std::runtime_error("generate: cubic sampling did not converge");
    }
    throw std::invalid_argument("generate: unknown family '" + fs.name + "'");
}

}  // namespace sgf::gen
