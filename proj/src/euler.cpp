#include "sgf/euler.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace sgf {

std::vector<Traversal> euler_circuit(const SignedGraph& g, const std::set<int>& edges) {
    if (edges.empty()) return {};
    std::map<int, std::vector<HalfEdge>> adj;
    for (int e : edges) {
        const EdgeData& ed = g.edge(e);
        adj[ed.u].push_back({e, 0});
        adj[ed.w].push_back({e, 1});
    }
    for (const auto& [v, halves] : adj)
        if (halves.size() % 2 != 0)
            throw std::invalid_argument("euler_circuit: odd degree vertex");

    // connectivity over touched vertices
    {
        std::set<int> seen;
        std::vector<int> stack{adj.begin()->first};
        seen.insert(stack[0]);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const HalfEdge& h : adj[v]) {
                int o = g.edge(h.edge).other(h.end);
                if (!seen.count(o)) {
                    seen.insert(o);
                    stack.push_back(o);
                }
            }
        }
        if (seen.size() != adj.size())
            throw std::invalid_argument("euler_circuit: subgraph not connected");
    }

    std::map<int, size_t> ptr;
    std::set<int> used;
    std::vector<std::pair<int, std::optional<Traversal>>> stack;
    stack.push_back({adj.begin()->first, std::nullopt});
    std::vector<Traversal> tour_rev;
    while (!stack.empty()) {
        auto [v, tin] = stack.back();
        auto& list = adj[v];
        size_t& i = ptr[v];
        while (i < list.size() && used.count(list[i].edge)) ++i;
        if (i == list.size()) {
            if (tin) tour_rev.push_back(*tin);
            stack.pop_back();
            continue;
        }
        HalfEdge h = list[i];
        used.insert(h.edge);
        const EdgeData& ed = g.edge(h.edge);
        stack.push_back({ed.other(h.end), Traversal{h.edge, 1 - h.end}});
    }
    if (tour_rev.size() != edges.size())
        throw std::logic_error("euler_circuit: trail did not cover the subgraph");
    std::reverse(tour_rev.begin(), tour_rev.end());
    return tour_rev;
}

}  // namespace sgf
