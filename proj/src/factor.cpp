#include "sgf/factor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sgf/euler.hpp"
#include "sgf/split.hpp"

namespace sgf {

FactorSubgraph FactorSubgraph::of(const SignedGraph& g, const std::set<int>& edges) {
    FactorSubgraph f;
    f.edges = edges;
    for (int v : g.vertices()) f.degree[v] = 0;
    for (int e : edges) {
        const EdgeData& ed = g.edge(e);
        f.degree[ed.u] += 1;
        f.degree[ed.w] += 1;
    }
    return f;
}

TutteResult tutte_condition(const SignedGraph& g, const std::map<int, int>& fdem,
                            int limit) {
    int n = g.vertex_count();
    if (n > limit) throw std::invalid_argument("tutte_condition: vertex count exceeds limit");
    for (int v : g.vertices())
        if (!fdem.count(v)) throw std::invalid_argument("tutte_condition: missing demand");

    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    std::vector<int> role(n, 0);  // 0 = neither, 1 = S, 2 = T

    auto check = [&]() -> bool {
        // components of G - S - T
        std::map<int, int> comp;
        for (int i = 0; i < n; ++i)
            if (role[i] == 0) comp[verts[i]] = -1;
        int nc = 0;
        for (auto& [start, c0] : comp) {
            if (c0 != -1) continue;
            c0 = nc;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& [id, ed] : g.edges()) {
                    for (int end = 0; end < 2; ++end) {
                        if (ed.endpoint(end) != v) continue;
                        int o = ed.other(end);
                        auto it = comp.find(o);
                        if (it != comp.end() && it->second == -1) {
                            it->second = nc;
                            stack.push_back(o);
                        }
                    }
                }
            }
            ++nc;
        }
        auto role_of = [&](int v) {
            int i = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                     verts.begin());
            return role[i];
        };
        // odd components: sum of f over U plus e(U, T) is odd
        std::vector<long> fsum(nc, 0), et(nc, 0);
        for (const auto& [v, c] : comp) fsum[c] += fdem.at(v);
        for (const auto& [id, ed] : g.edges()) {
            if (ed.is_loop()) continue;
            int ru = role_of(ed.u), rw = role_of(ed.w);
            if (ru == 0 && rw == 2) et[comp.at(ed.u)] += 1;
            if (rw == 0 && ru == 2) et[comp.at(ed.w)] += 1;
        }
        long odd = 0;
        for (int c = 0; c < nc; ++c)
            if ((fsum[c] + et[c]) % 2 != 0) ++odd;
        long lhs = 0, rhs = odd;
        for (int i = 0; i < n; ++i) {
            int v = verts[i];
            if (role[i] == 1) lhs += fdem.at(v);
            if (role[i] == 2) {
                int dgs = 0;  // degree of v in G - S
                for (const HalfEdge& h : g.half_edges_at(v)) {
                    int o = g.edge(h.edge).other(h.end);
                    if (g.edge(h.edge).is_loop() || role_of(o) != 1) ++dgs;
                }
                rhs += fdem.at(v) - dgs;
            }
        }
        return lhs >= rhs;
    };

    std::function<TutteResult(int)> rec = [&](int i) -> TutteResult {
        if (i == n) {
            if (check()) return {true, std::nullopt};
            TutteWitness w;
            for (int j = 0; j < n; ++j) {
                if (role[j] == 1) w.s.insert(verts[j]);
                if (role[j] == 2) w.t.insert(verts[j]);
            }
            return {false, w};
        }
        for (int r : {0, 1, 2}) {
            role[i] = r;
            TutteResult res = rec(i + 1);
            if (!res.holds) return res;
        }
        role[i] = 0;
        return {true, std::nullopt};
    };
    return rec(0);
}

// ---------------------------------------------------------------------------
// maximum matching with blossom contraction

std::vector<int> max_matching(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> match(n, -1), p(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<bool> seen(n, false);
        while (true) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::vector<int> q{root};
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        return to;
                    }
                    used[match[to]] = true;
                    q.push_back(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_path(v);
        while (u != -1) {
            int pv = p[u], ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }
    return match;
}

std::optional<FactorSubgraph> find_f_factor(const SignedGraph& g,
                                            const std::map<int, int>& fdem) {
    for (int v : g.vertices()) {
        auto it = fdem.find(v);
        if (it == fdem.end()) throw std::invalid_argument("find_f_factor: missing demand");
        if (it->second < 0) throw std::invalid_argument("find_f_factor: negative demand");
        if (it->second > g.degree(v)) return std::nullopt;
    }

    // One stub per half-edge, d(v) - f(v) fillers joined to every stub of v.
    // A perfect matching picks f(v) stubs per vertex for real edges.
    int n = 0;
    std::map<HalfEdge, int> stub;
    std::vector<std::vector<int>> adj;
    auto new_node = [&]() {
        adj.push_back({});
        return n++;
    };
    for (int v : g.vertices()) {
        std::vector<int> stubs;
        for (const HalfEdge& h : g.half_edges_at(v)) {
            stub[h] = new_node();
            stubs.push_back(stub[h]);
        }
        int fillers = g.degree(v) - fdem.at(v);
        for (int i = 0; i < fillers; ++i) {
            int t = new_node();
            for (int s : stubs) {
                adj[t].push_back(s);
                adj[s].push_back(t);
            }
        }
    }
    for (const auto& [id, ed] : g.edges()) {
        int a = stub.at({id, 0});
        int b = stub.at({id, 1});
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::vector<int> match = max_matching(n, adj);
    for (int i = 0; i < n; ++i)
        if (match[i] == -1) return std::nullopt;
    std::set<int> chosen;
    for (const auto& [id, ed] : g.edges())
        if (match[stub.at({id, 0})] == stub.at({id, 1})) chosen.insert(id);
    FactorSubgraph f = FactorSubgraph::of(g, chosen);
    for (int v : g.vertices())
        if (f.degree.at(v) != fdem.at(v))
            throw std::logic_error("find_f_factor: matching produced wrong degrees");
    return f;
}

// ---------------------------------------------------------------------------

std::vector<FactorSubgraph> petersen_2_factorization(const SignedGraph& g) {
    int m = g.edge_count();
    if (m == 0) throw std::invalid_argument("petersen_2_factorization: no edges");
    int d0 = g.degree(*g.vertices().begin());
    if (d0 % 2 != 0 || d0 == 0)
        throw std::invalid_argument("petersen_2_factorization: graph is not 2p-regular");
    int p = d0 / 2;
    for (int v : g.vertices())
        if (g.degree(v) != 2 * p)
            throw std::invalid_argument("petersen_2_factorization: graph is not 2p-regular");

    // Orient each component along an Euler circuit, then decompose the
    // out/in bipartite multigraph into p perfect matchings.
    std::map<int, int> head_end;  // edge -> arriving end under the orientation
    for (const auto& comp : g.components()) {
        std::set<int> ce;
        for (int v : comp)
            for (int e : g.incident_edges(v)) ce.insert(e);
        for (const Traversal& t : euler_circuit(g, ce)) head_end[t.edge] = t.in_end;
    }

    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    auto vindex = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                verts.begin());
    };
    int nv = static_cast<int>(verts.size());

    // Bipartite graph: left = out side, right = in side, one edge per graph
    // edge.  Kuhn's algorithm peels one perfect matching per round.
    std::set<int> remaining;
    for (const auto& [id, ed] : g.edges()) remaining.insert(id);
    std::vector<FactorSubgraph> factors;
    for (int round = 0; round < p; ++round) {
        std::vector<std::vector<std::pair<int, int>>> radj(nv);  // left -> (right, edge)
        for (int e : remaining) {
            const EdgeData& ed = g.edge(e);
            int hin = head_end.at(e);
            int to = ed.endpoint(hin);
            int from = ed.other(hin);
            radj[vindex(from)].push_back({vindex(to), e});
        }
        std::vector<int> match_right(nv, -1), match_edge(nv, -1);
        std::vector<bool> seen;
        std::function<bool(int)> try_kuhn = [&](int left) -> bool {
            for (auto [right, e] : radj[left]) {
                if (seen[right]) continue;
                seen[right] = true;
                if (match_right[right] == -1 || try_kuhn(match_right[right])) {
                    match_right[right] = left;
                    match_edge[right] = e;
                    return true;
                }
            }
            return false;
        };
        for (int left = 0; left < nv; ++left) {
            seen.assign(nv, false);
            if (!try_kuhn(left))
                throw std::logic_error("petersen_2_factorization: no perfect matching");
        }
        std::set<int> chosen;
        for (int right = 0; right < nv; ++right) chosen.insert(match_edge[right]);
        for (int e : chosen) remaining.erase(e);
        factors.push_back(FactorSubgraph::of(g, chosen));
    }
    if (!remaining.empty())
        throw std::logic_error("petersen_2_factorization: edges left over");
    for (const FactorSubgraph& f : factors)
        for (int v : g.vertices())
            if (f.degree.at(v) != 2)
                throw std::logic_error("petersen_2_factorization: factor is not 2-regular");
    return factors;
}

FactorSubgraph p_mu_factor(const SignedGraph& g, int p, const std::map<int, int>& mu) {
    if (p < 1) throw std::invalid_argument("p_mu_factor: p must be positive");
    int k = 2 * p + 1;
    for (const auto& [id, ed] : g.edges())
        if (ed.is_loop()) throw std::invalid_argument("p_mu_factor: loops not supported");
    for (int v : g.vertices()) {
        auto it = mu.find(v);
        if (it == mu.end() || it->second < 1)
            throw std::invalid_argument("p_mu_factor: mu must be positive on every vertex");
        if (g.degree(v) != k * it->second)
            throw std::invalid_argument("p_mu_factor: degree must equal (2p+1)*mu");
    }
    {
        auto c = g.odd_edge_connectivity();
        if (c && *c < k)
            throw std::invalid_argument("p_mu_factor: odd edge connectivity below 2p+1");
    }

    // Batch-split every vertex down to degree (2p+1) or 2(2p+1).
    SignedGraph work = g;
    while (true) {
        int target = -1;
        for (int v : work.vertices())
            if (work.degree(v) != k && work.degree(v) != 2 * k) {
                target = v;
                break;
            }
        if (target < 0) break;
        work = batch_split(work, target, 2 * k, k).graph;
    }

    // {1,2}-factor on the reduced graph.
    std::map<int, int> fdem;
    for (int v : work.vertices()) fdem[v] = work.degree(v) / k;
    auto f0 = find_f_factor(work, fdem);
    if (!f0) throw std::logic_error("p_mu_factor: {1,2}-factor missing (theorem violation)");

    // Remove it and halve the 4p-degree vertices (no connectivity to keep);
    // the first 2p half-edges in canonical order go to the clone.
    SignedGraph rest = work;
    for (int e : f0->edges) rest = rest.without_edge(e);
    while (true) {
        int target = -1;
        for (int v : rest.vertices())
            if (rest.degree(v) == 4 * p) {
                target = v;
                break;
            }
        if (target < 0) break;
        auto halves = rest.half_edges_at(target);
        halves.resize(2 * p);
        rest = rest.split_off(target, halves).first;
    }
    for (int v : rest.vertices())
        if (rest.degree(v) != 2 * p) throw std::logic_error("p_mu_factor: not 2p-regular");

    std::vector<FactorSubgraph> two_factors = petersen_2_factorization(rest);

    // Union the right half of the factorization; edge ids survive all splits.
    std::set<int> chosen;
    int q = p / 2;
    for (int i = 0; i < q; ++i)
        chosen.insert(two_factors[i].edges.begin(), two_factors[i].edges.end());
    if (p % 2 == 1) chosen.insert(f0->edges.begin(), f0->edges.end());

    FactorSubgraph f = FactorSubgraph::of(g, chosen);
    for (int v : g.vertices())
        if (f.degree.at(v) != p * mu.at(v))
            throw std::logic_error("p_mu_factor: degree audit failed");
    return f;
}

}  // namespace sgf
