#include "sgf/signed_graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sgf {

SignedGraph SignedGraph::build(int vertex_count,
                               const std::vector<std::tuple<int, int, int>>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    SignedGraph g;
    for (int v = 0; v < vertex_count; ++v) g.vertices_.insert(v);
    int id = 0;
    for (const auto& [u, w, sign] : edges) {
        if (u < 0 || u >= vertex_count || w < 0 || w >= vertex_count) {
            std::ostringstream os;
            os << "edge endpoint out of range: (" << u << "," << w << ")";
            throw std::invalid_argument(os.str());
        }
        if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        g.edges_[++id] = EdgeData{u, w, sign};
    }
    return g;
}

SignedGraph SignedGraph::from_parts(const std::set<int>& vertices,
                                    const std::map<int, EdgeData>& edges) {
    SignedGraph g;
    g.vertices_ = vertices;
    for (const auto& [id, ed] : edges) {
        if (!vertices.count(ed.u) || !vertices.count(ed.w))
            throw std::invalid_argument("from_parts: edge endpoint not in vertex set");
        if (ed.sign != 1 && ed.sign != -1)
            throw std::invalid_argument("from_parts: sign must be +1 or -1");
    }
    g.edges_ = edges;
    return g;
}

SignedGraph SignedGraph::induced(const std::set<int>& verts) const {
    SignedGraph g;
    for (int v : verts) {
        if (!has_vertex(v)) throw std::invalid_argument("induced: unknown vertex");
        g.vertices_.insert(v);
    }
    for (const auto& [id, ed] : edges_)
        if (verts.count(ed.u) && verts.count(ed.w)) g.edges_[id] = ed;
    return g;
}

const EdgeData& SignedGraph::edge(int e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw std::invalid_argument("unknown edge id");
    return it->second;
}

int SignedGraph::negative_edge_count() const {
    int n = 0;
    for (const auto& [id, ed] : edges_)
        if (ed.sign < 0) ++n;
    return n;
}

void SignedGraph::check_vertex(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
}

int SignedGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const auto& [id, ed] : edges_) {
        if (ed.u == v) ++d;
        if (ed.w == v) ++d;
    }
    return d;
}

std::vector<HalfEdge> SignedGraph::half_edges_at(int v) const {
    check_vertex(v);
    std::vector<HalfEdge> out;
    for (const auto& [id, ed] : edges_) {
        if (ed.u == v) out.push_back({id, 0});
        if (ed.w == v) out.push_back({id, 1});
    }
    return out;
}

std::vector<int> SignedGraph::incident_edges(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (const auto& [id, ed] : edges_)
        if (ed.u == v || ed.w == v) out.push_back(id);
    return out;
}

int SignedGraph::max_vertex_id() const {
    return vertices_.empty() ? -1 : *vertices_.rbegin();
}

int SignedGraph::max_edge_id() const {
    return edges_.empty() ? 0 : edges_.rbegin()->first;
}

std::vector<std::vector<int>> SignedGraph::components() const {
    std::map<int, int> comp;
    for (int v : vertices_) comp[v] = -1;
    int c = 0;
    for (int start : vertices_) {
        if (comp[start] != -1) continue;
        std::vector<int> stack{start};
        comp[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [id, ed] : edges_) {
                for (int end = 0; end < 2; ++end) {
                    if (ed.endpoint(end) != v) continue;
                    int o = ed.other(end);
                    if (comp[o] == -1) {
                        comp[o] = c;
                        stack.push_back(o);
                    }
                }
            }
        }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int v : vertices_) out[comp[v]].push_back(v);
    return out;
}

int SignedGraph::component_count() const { return static_cast<int>(components().size()); }

bool SignedGraph::connected() const { return component_count() <= 1; }

std::pair<SignedGraph, TraceRecord> SignedGraph::switched(int v) const {
    check_vertex(v);
    SignedGraph g = *this;
    for (auto& [id, ed] : g.edges_) {
        if (ed.is_loop()) continue;
        if (ed.u == v || ed.w == v) ed.sign = -ed.sign;
    }
    return {g, SwitchRec{v}};
}

int SignedGraph::negativeness(int limit) const {
    int n = vertex_count();
    if (n > limit) throw std::invalid_argument("negativeness: vertex count exceeds limit");
    std::map<int, int> idx;
    int k = 0;
    for (int v : vertices_) idx[v] = k++;
    // Switching at S and at V-S coincide, so one vertex stays fixed.
    int best = edge_count() + 1;
    unsigned long masks = n <= 1 ? 1u : (1ul << (n - 1));
    for (unsigned long mask = 0; mask < masks; ++mask) {
        int neg = 0;
        for (const auto& [id, ed] : edges_) {
            int flip = 0;
            if (!ed.is_loop()) {
                int iu = idx[ed.u], iw = idx[ed.w];
                int bu = iu == 0 ? 0 : static_cast<int>((mask >> (iu - 1)) & 1u);
                int bw = iw == 0 ? 0 : static_cast<int>((mask >> (iw - 1)) & 1u);
                flip = bu ^ bw;
            }
            if ((flip ? -ed.sign : ed.sign) < 0) ++neg;
        }
        best = std::min(best, neg);
    }
    return best;
}

BlockDecomposition SignedGraph::bridges_and_blocks() const {
    BlockDecomposition out;
    std::map<int, std::vector<HalfEdge>> adj;
    for (int v : vertices_) adj[v] = {};
    for (const auto& [id, ed] : edges_) {
        if (ed.is_loop()) continue;
        adj[ed.u].push_back({id, 0});
        adj[ed.w].push_back({id, 1});
    }

    std::map<int, int> disc, low;
    std::set<int> cuts;
    std::vector<int> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int via_edge) {
        disc[v] = low[v] = ++timer;
        int children = 0;
        for (const HalfEdge& h : adj[v]) {
            if (h.edge == via_edge) continue;
            const EdgeData& ed = edges_.at(h.edge);
            int o = ed.other(h.end);
            if (!disc.count(o)) {
                edge_stack.push_back(h.edge);
                ++children;
                dfs(o, h.edge);
                low[v] = std::min(low[v], low[o]);
                if (low[o] > disc[v]) out.bridges.push_back(h.edge);
                if ((via_edge == -1 && children >= 2) ||
                    (via_edge != -1 && low[o] >= disc[v]))
                    cuts.insert(v);
                if (low[o] >= disc[v]) {
                    std::vector<int> block;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == h.edge) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[o] < disc[v]) {
                edge_stack.push_back(h.edge);
                low[v] = std::min(low[v], disc[o]);
            }
        }
    };

    for (int v : vertices_)
        if (!disc.count(v)) dfs(v, -1);

    // Each loop forms its own block and is never a bridge.
    for (const auto& [id, ed] : edges_)
        if (ed.is_loop()) out.blocks.push_back({id});

    std::sort(out.bridges.begin(), out.bridges.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    out.cut_vertices.assign(cuts.begin(), cuts.end());
    return out;
}

std::optional<int> SignedGraph::odd_edge_connectivity(int limit) const {
    int n = vertex_count();
    if (n > limit)
        throw std::invalid_argument("odd_edge_connectivity: vertex count exceeds limit");
    if (n <= 1) return std::nullopt;
    std::map<int, int> idx;
    int k = 0;
    for (int v : vertices_) idx[v] = k++;
    std::optional<int> best;
    unsigned long masks = 1ul << (n - 1);
    for (unsigned long mask = 1; mask < masks; ++mask) {
        int cut = 0;
        for (const auto& [id, ed] : edges_) {
            if (ed.is_loop()) continue;
            int iu = idx[ed.u], iw = idx[ed.w];
            int bu = iu == 0 ? 0 : static_cast<int>((mask >> (iu - 1)) & 1u);
            int bw = iw == 0 ? 0 : static_cast<int>((mask >> (iw - 1)) & 1u);
            if (bu != bw) ++cut;
        }
        if (cut > 0 && cut % 2 == 1 && (!best || cut < *best)) best = cut;
    }
    return best;
}

std::pair<SignedGraph, TraceRecord> SignedGraph::split_off(
    int v, const std::vector<HalfEdge>& f) const {
    check_vertex(v);
    std::set<HalfEdge> sel(f.begin(), f.end());
    if (sel.size() != f.size()) throw std::invalid_argument("split_off: duplicate half-edge");
    for (const HalfEdge& h : sel) {
        auto it = edges_.find(h.edge);
        if (it == edges_.end() || h.end < 0 || h.end > 1 ||
            it->second.endpoint(h.end) != v)
            throw std::invalid_argument("split_off: half-edge not incident with vertex");
        if (it->second.is_loop()) {
            if (!sel.count({h.edge, 0}) || !sel.count({h.edge, 1}))
                throw std::invalid_argument(
                    "split_off: both halves of a loop must be selected together");
        }
    }
    SignedGraph g = *this;
    int vstar = max_vertex_id() + 1;
    g.vertices_.insert(vstar);
    for (const HalfEdge& h : sel) {
        EdgeData& ed = g.edges_[h.edge];
        if (h.end == 0)
            ed.u = vstar;
        else
            ed.w = vstar;
    }
    return {g, SplitOffRec{v, {sel.begin(), sel.end()}, vstar}};
}

std::pair<SignedGraph, TraceRecord> SignedGraph::suppressed(int w) const {
    check_vertex(w);
    auto halves = half_edges_at(w);
    if (halves.size() != 2 || halves[0].edge == halves[1].edge)
        throw std::invalid_argument("suppress: vertex must have degree 2 on distinct edges");
    const EdgeData& d1 = edges_.at(halves[0].edge);
    const EdgeData& d2 = edges_.at(halves[1].edge);
    int a = d1.other(halves[0].end);
    int c = d2.other(halves[1].end);
    SignedGraph g = *this;
    g.edges_.erase(halves[0].edge);
    g.edges_.erase(halves[1].edge);
    g.vertices_.erase(w);
    int merged = max_edge_id() + 1;
    EdgeData md{a, c, d1.sign * d2.sign};
    g.edges_[merged] = md;
    return {g, SuppressRec{w, halves[0].edge, halves[1].edge, d1, d2, merged, md}};
}

std::pair<SignedGraph, TraceRecord> SignedGraph::contracted(int e) const {
    const EdgeData& ed = edge(e);
    if (ed.is_loop()) throw std::invalid_argument("contract: edge is a loop");
    if (ed.sign < 0) throw std::invalid_argument("contract: edge is negative");
    int kept = std::min(ed.u, ed.w);
    int removed = std::max(ed.u, ed.w);
    SignedGraph g = *this;
    g.edges_.erase(e);
    std::vector<HalfEdge> moved;
    for (auto& [id, d] : g.edges_) {
        if (d.u == removed) {
            d.u = kept;
            moved.push_back({id, 0});
        }
        if (d.w == removed) {
            d.w = kept;
            moved.push_back({id, 1});
        }
    }
    g.vertices_.erase(removed);
    return {g, ContractRec{e, ed, kept, removed, moved}};
}

std::pair<SignedGraph, TraceRecord> SignedGraph::with_edge(int u, int w, int sign) const {
    check_vertex(u);
    check_vertex(w);
    SignedGraph g = *this;
    int id = max_edge_id() + 1;
    g.edges_[id] = EdgeData{u, w, sign};
    return {g, AddEdgeRec{id, g.edges_[id]}};
}

std::pair<SignedGraph, TraceRecord> SignedGraph::without_loop(int e) const {
    const EdgeData& ed = edge(e);
    if (!ed.is_loop()) throw std::invalid_argument("without_loop: not a loop");
    SignedGraph g = *this;
    g.edges_.erase(e);
    return {g, StripLoopRec{e, ed}};
}

SignedGraph SignedGraph::without_edge(int e) const {
    edge(e);
    SignedGraph g = *this;
    g.edges_.erase(e);
    return g;
}

SignedGraph SignedGraph::without_vertex(int v) const {
    check_vertex(v);
    if (degree(v) != 0) throw std::invalid_argument("without_vertex: vertex not isolated");
    SignedGraph g = *this;
    g.vertices_.erase(v);
    return g;
}

SignedGraph SignedGraph::with_vertex(int v) const {
    SignedGraph g = *this;
    g.vertices_.insert(v);
    return g;
}

SignedGraph SignedGraph::undo(const TraceRecord& rec) const {
    SignedGraph g = *this;
    if (const auto* r = std::get_if<SwitchRec>(&rec)) {
        return switched(r->vertex).first;
    }
    if (const auto* r = std::get_if<SplitOffRec>(&rec)) {
        for (const HalfEdge& h : r->moved) {
            EdgeData& ed = g.edges_.at(h.edge);
            if (h.end == 0)
                ed.u = r->vertex;
            else
                ed.w = r->vertex;
        }
        g.vertices_.erase(r->new_vertex);
        g.vertices_.insert(r->vertex);
        return g;
    }
    if (const auto* r = std::get_if<SuppressRec>(&rec)) {
        g.edges_.erase(r->merged);
        g.vertices_.insert(r->vertex);
        g.edges_[r->edge1] = r->data1;
        g.edges_[r->edge2] = r->data2;
        return g;
    }
    if (const auto* r = std::get_if<ContractRec>(&rec)) {
        g.vertices_.insert(r->removed);
        for (const HalfEdge& h : r->moved) {
            EdgeData& ed = g.edges_.at(h.edge);
            if (h.end == 0)
                ed.u = r->removed;
            else
                ed.w = r->removed;
        }
        g.edges_[r->edge] = r->data;
        return g;
    }
    if (const auto* r = std::get_if<AddEdgeRec>(&rec)) {
        g.edges_.erase(r->edge);
        return g;
    }
    if (const auto* r = std::get_if<StripLoopRec>(&rec)) {
        g.edges_[r->edge] = r->data;
        return g;
    }
    throw std::logic_error("undo: unhandled record");
}

}  // namespace sgf
