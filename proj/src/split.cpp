#include "sgf/split.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sgf {

void PairSet::add(HalfEdge a, HalfEdge b) {
    if (a == b) throw std::invalid_argument("PairSet: pair of identical half-edges");
    if (a.edge == b.edge)
        throw std::invalid_argument("PairSet: pair formed by the two halves of one loop");
    if (b < a) std::swap(a, b);
    pairs.insert({a, b});
}

// Loop halves never enter a pair: a single loop half cannot be split away.
PairSet PairSet::all_pairs(const SignedGraph& g, int v) {
    PairSet s;
    s.vertex = v;
    std::vector<HalfEdge> halves;
    for (const HalfEdge& h : g.half_edges_at(v))
        if (!g.edge(h.edge).is_loop()) halves.push_back(h);
    for (size_t i = 0; i < halves.size(); ++i)
        for (size_t j = i + 1; j < halves.size(); ++j) s.add(halves[i], halves[j]);
    return s;
}

PairSet PairSet::consecutive_pairs(const SignedGraph& g, int v) {
    PairSet s;
    s.vertex = v;
    std::vector<HalfEdge> halves;
    for (const HalfEdge& h : g.half_edges_at(v))
        if (!g.edge(h.edge).is_loop()) halves.push_back(h);
    size_t d = halves.size();
    if (d < 2) return s;
    for (size_t i = 0; i < d; ++i) {
        HalfEdge a = halves[i], b = halves[(i + 1) % d];
        if (a == b || a.edge == b.edge) continue;
        s.add(a, b);
    }
    return s;
}

bool sequentially_connected(const PairSet& s, int d) {
    if (d <= 1) return true;
    std::map<HalfEdge, HalfEdge> parent;
    std::function<HalfEdge(HalfEdge)> find = [&](HalfEdge x) {
        while (!(parent.at(x) == x)) x = parent.at(x) = parent.at(parent.at(x));
        return x;
    };
    for (const auto& [a, b] : s.pairs) {
        parent.emplace(a, a);
        parent.emplace(b, b);
    }
    for (const auto& [a, b] : s.pairs) {
        HalfEdge ra = find(a), rb = find(b);
        if (!(ra == rb)) parent[ra] = rb;
    }
    if (static_cast<int>(parent.size()) != d) return false;
    HalfEdge root = find(parent.begin()->first);
    for (const auto& [h, p] : parent)
        if (!(find(h) == root)) return false;
    return true;
}

SplitResult fleischner_split(const SignedGraph& g, int v) {
    if (!g.bridges_and_blocks().bridges.empty())
        throw std::invalid_argument("fleischner_split: graph has a bridge");
    if (g.degree(v) < 4) throw std::invalid_argument("fleischner_split: degree below 4");

    auto blocks = g.bridges_and_blocks();
    std::map<int, int> block_of;
    for (size_t b = 0; b < blocks.blocks.size(); ++b)
        for (int e : blocks.blocks[b]) block_of[e] = static_cast<int>(b);
    bool is_cut = std::find(blocks.cut_vertices.begin(), blocks.cut_vertices.end(), v) !=
                  blocks.cut_vertices.end();

    std::vector<HalfEdge> nonloop;
    for (const HalfEdge& h : g.half_edges_at(v))
        if (!g.edge(h.edge).is_loop()) nonloop.push_back(h);

    for (size_t i = 0; i < nonloop.size(); ++i)
        for (size_t j = i + 1; j < nonloop.size(); ++j) {
            if (is_cut && block_of[nonloop[i].edge] == block_of[nonloop[j].edge]) continue;
            auto [g2, rec] = g.split_off(v, {nonloop[i], nonloop[j]});
            if (g2.bridges_and_blocks().bridges.empty())
                return {g2, {nonloop[i], nonloop[j]}, rec};
        }
    throw std::logic_error("fleischner_split: no bridgeless pair found");
}

SplitResult odd_preserving_split(const SignedGraph& g, int v, const PairSet& s,
                                 int lambda_o) {
    if (lambda_o < 1 || lambda_o % 2 == 0)
        throw std::invalid_argument("odd_preserving_split: lambda_o must be odd");
    if (s.vertex != v) throw std::invalid_argument("odd_preserving_split: pair set vertex");
    auto ok = [&](const SignedGraph& h) {
        auto c = h.odd_edge_connectivity();
        return !c || *c >= lambda_o;
    };
    if (!ok(g))
        throw std::invalid_argument("odd_preserving_split: graph below lambda_o");
    if (g.degree(v) == lambda_o)
        throw std::invalid_argument("odd_preserving_split: d(v) equals lambda_o");
    if (!sequentially_connected(s, g.degree(v)))
        throw std::invalid_argument("odd_preserving_split: pair set not sequentially connected");
    for (const auto& [a, b] : s.pairs) {
        if (g.edge(a.edge).endpoint(a.end) != v || g.edge(b.edge).endpoint(b.end) != v)
            throw std::invalid_argument("odd_preserving_split: pair not incident with v");
        auto [g2, rec] = g.split_off(v, {a, b});
        if (ok(g2)) return {g2, {a, b}, rec};
    }
    throw std::logic_error("odd_preserving_split: pair set exhausted (theorem violation)");
}

BatchSplitResult batch_split(const SignedGraph& g, int v, int a, int lambda_o) {
    if (a <= 0 || a % 2 != 0) throw std::invalid_argument("batch_split: a must be even");
    if (g.degree(v) <= lambda_o)
        throw std::invalid_argument("batch_split: d(v) must exceed lambda_o");
    if (a > g.degree(v) - lambda_o)
        throw std::invalid_argument("batch_split: a exceeds d(v) - lambda_o");

    // Pick the pairs on scratch graphs, then apply one combined split so the
    // trace is a single record.
    SignedGraph scratch = g;
    std::vector<HalfEdge> moved;
    for (int step = 0; step < a / 2; ++step) {
        SplitResult r = odd_preserving_split(scratch, v, PairSet::all_pairs(scratch, v),
                                             lambda_o);
        moved.push_back(r.pair.first);
        moved.push_back(r.pair.second);
        // Re-anchor the split pair far away on the scratch graph: keep the
        // new degree-2 vertex, later pairs avoid those halves naturally.
        scratch = r.graph;
    }
    auto [g2, rec] = g.split_off(v, moved);
    int vstar = std::get<SplitOffRec>(rec).new_vertex;
    auto c = g2.odd_edge_connectivity();
    if (c && *c < lambda_o)
        throw std::logic_error("batch_split: merged split lost odd connectivity");
    return {g2, vstar, rec};
}

}  // namespace sgf
