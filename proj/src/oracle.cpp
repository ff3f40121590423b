#include "sgf/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace sgf::oracle {

int search_gate(int fallback) {
    if (const char* s = std::getenv("SGF_SEARCH_GATE")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return fallback;
}

namespace {

// Edges in BFS order from the smallest vertex of each component,
// ties broken by ascending edge id.
std::vector<int> bfs_edge_order(const SignedGraph& g) {
    std::vector<int> order;
    std::set<int> seen_v, seen_e;
    for (int start : g.vertices()) {
        if (seen_v.count(start)) continue;
        std::deque<int> q{start};
        seen_v.insert(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int e : g.incident_edges(v)) {
                if (seen_e.count(e)) continue;
                seen_e.insert(e);
                order.push_back(e);
                int o = g.edge(e).u == v ? g.edge(e).w : g.edge(e).u;
                if (!seen_v.count(o)) {
                    seen_v.insert(o);
                    q.push_back(o);
                }
            }
        }
    }
    return order;
}

struct FlowSearch {
    const SignedGraph& g;
    FlowSpec spec;
    const EdgeConstraints& constraints;
    const std::function<bool(const FlowAssignment&)>& emit;

    std::vector<int> order;
    std::vector<std::vector<int>> domain;       // candidate values per order slot
    std::map<int, int> remaining, partial;
    Orientation tau;
    std::map<int, int> val;
    int maxabs = 0;
    bool integral = false;
    bool stop = false;

    FlowSearch(const SignedGraph& gr, const FlowSpec& sp, const EdgeConstraints& cs,
               const std::function<bool(const FlowAssignment&)>& cb)
        : g(gr), spec(sp), constraints(cs), emit(cb) {
        order = bfs_edge_order(g);
        tau = canonical_orientation(g);
        integral = !spec.is_modular();
        int lo = spec.is_circular() ? spec.d : 0;
        int hi = spec.is_circular() ? spec.k - spec.d : spec.k - 1;
        maxabs = hi;
        for (int v : g.vertices()) {
            remaining[v] = g.degree(v);
            partial[v] = 0;
        }
        for (int e : order) {
            std::vector<int> dom;
            auto push = [&](int x) {
                int a = std::abs(x);
                if (a < lo || a > hi) return;
                if (spec.nowhere_zero && x == 0) return;
                dom.push_back(x);
            };
            auto it = constraints.find(e);
            if (it != constraints.end()) {
                for (int x : it->second) push(x);
            } else {
                push(0);
                for (int a = std::max(lo, 1); a <= hi; ++a) {
                    push(a);
                    push(-a);
                }
            }
            domain.push_back(dom);
        }
    }

    bool vertex_ok(int v) const {
        int r = remaining.at(v);
        int s = partial.at(v);
        if (r == 0) return integral ? s == 0 : sym_mod(s, spec.k) == 0;
        if (integral) return std::abs(s) <= maxabs * r;
        return true;
    }

    void rec(size_t i) {
        if (stop) return;
        if (i == order.size()) {
            FlowAssignment fa;
            fa.orientation = tau;
            fa.value = val;
            if (!emit(fa)) stop = true;
            return;
        }
        int e = order[i];
        const EdgeData& ed = g.edge(e);
        int t0 = tau.at({e, 0});
        int t1 = tau.at({e, 1});
        for (int x : domain[i]) {
            val[e] = x;
            partial[ed.u] += x * t0;
            partial[ed.w] += x * t1;
            remaining[ed.u] -= 1;
            remaining[ed.w] -= 1;
            if (vertex_ok(ed.u) && vertex_ok(ed.w)) rec(i + 1);
            partial[ed.u] -= x * t0;
            partial[ed.w] -= x * t1;
            remaining[ed.u] += 1;
            remaining[ed.w] += 1;
            if (stop) break;
        }
        val.erase(e);
    }
};

}  // namespace

void for_each_flow(const SignedGraph& g, const FlowSpec& spec,
                   const std::function<bool(const FlowAssignment&)>& cb,
                   const EdgeConstraints& constraints, int gate) {
    if (gate < 0) gate = search_gate();
    if (g.edge_count() > gate)
        throw std::invalid_argument("search_flow: edge count exceeds gate");
    FlowSearch s(g, spec, constraints, cb);
    s.rec(0);
}

std::optional<FlowAssignment> search_flow(const SignedGraph& g, const FlowSpec& spec,
                                          const EdgeConstraints& constraints, int gate) {
    std::optional<FlowAssignment> out;
    for_each_flow(
        g, spec,
        [&](const FlowAssignment& fa) {
            out = fa;
            return false;
        },
        constraints, gate);
    return out;
}

std::optional<Orientation> search_orientation(const SignedGraph& g, int p, int gate) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (gate < 0) gate = search_gate();
    if (g.edge_count() > gate)
        throw std::invalid_argument("search_orientation: edge count exceeds gate");
    int mod = 2 * p + 1;
    std::vector<int> order = bfs_edge_order(g);
    std::map<int, int> remaining, partial;
    for (int v : g.vertices()) {
        remaining[v] = g.degree(v);
        partial[v] = 0;
    }
    Orientation tau;
    std::optional<Orientation> found;

    auto vertex_ok = [&](int v) {
        int r = remaining[v];
        int s = partial[v];
        if (r == 0) return sym_mod(s, mod) == 0;
        // Reachable sums are s-r, s-r+2, ..., s+r; some multiple of mod
        // must lie in that progression.
        int lo = s - r, hi = s + r;
        int m = (lo >= 0 ? (lo + mod - 1) / mod : -((-lo) / mod)) * mod;
        for (; m <= hi; m += mod)
            if ((m - lo) % 2 == 0) return true;
        return false;
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (found) return;
        if (i == order.size()) {
            found = tau;
            return;
        }
        int e = order[i];
        const EdgeData& ed = g.edge(e);
        for (int t0 : {1, -1}) {
            int t1 = -ed.sign * t0;
            tau.set(e, t0, t1);
            partial[ed.u] += t0;
            partial[ed.w] += t1;
            remaining[ed.u] -= 1;
            remaining[ed.w] -= 1;
            if (vertex_ok(ed.u) && vertex_ok(ed.w)) rec(i + 1);
            partial[ed.u] -= t0;
            partial[ed.w] -= t1;
            remaining[ed.u] += 1;
            remaining[ed.w] += 1;
            if (found) break;
        }
        tau.tau.erase(e);
    };
    rec(0);
    return found;
}

std::optional<OddCut> min_odd_cut(const SignedGraph& g) {
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("min_odd_cut: vertex count exceeds limit");
    if (n <= 1) return std::nullopt;
    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    std::optional<OddCut> best;
    unsigned long masks = 1ul << (n - 1);
    for (unsigned long mask = 1; mask < masks; ++mask) {
        int cut = 0;
        auto side = [&](int v) {
            int i = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                     verts.begin());
            return i == 0 ? 0 : static_cast<int>((mask >> (i - 1)) & 1u);
        };
        for (const auto& [id, ed] : g.edges()) {
            if (ed.is_loop()) continue;
            if (side(ed.u) != side(ed.w)) ++cut;
        }
        if (cut > 0 && cut % 2 == 1 && (!best || cut < best->size)) {
            OddCut oc;
            oc.size = cut;
            for (int v : verts)
                if (side(v) == 1) oc.side.push_back(v);
            best = oc;
        }
    }
    return best;
}

std::optional<FactorSubgraph> brute_f_factor(const SignedGraph& g,
                                             const std::map<int, int>& fdem, int gate) {
    if (gate < 0) gate = search_gate();
    if (g.edge_count() > gate)
        throw std::invalid_argument("brute_f_factor: edge count exceeds gate");
    for (int v : g.vertices())
        if (!fdem.count(v)) throw std::invalid_argument("brute_f_factor: missing demand");

    std::vector<int> order;
    for (const auto& [id, ed] : g.edges()) order.push_back(id);
    // cap[i][v]: half-edges of order[i..] at v.
    std::vector<std::map<int, int>> cap(order.size() + 1);
    for (int v : g.vertices()) cap[order.size()][v] = 0;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        cap[i] = cap[i + 1];
        const EdgeData& ed = g.edge(order[i]);
        cap[i][ed.u] += 1;
        cap[i][ed.w] += 1;
    }

    std::map<int, int> deg;
    for (int v : g.vertices()) deg[v] = 0;
    std::set<int> chosen;
    std::optional<FactorSubgraph> found;

    auto ok = [&](int v, size_t next) {
        return deg[v] <= fdem.at(v) && deg[v] + cap[next][v] >= fdem.at(v);
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (found) return;
        if (i == order.size()) {
            for (int v : g.vertices())
                if (deg[v] != fdem.at(v)) return;
            found = FactorSubgraph::of(g, chosen);
            return;
        }
        const EdgeData& ed = g.edge(order[i]);
        // exclude first, then include
        if (ok(ed.u, i + 1) && ok(ed.w, i + 1)) rec(i + 1);
        if (found) return;
        deg[ed.u] += 1;
        deg[ed.w] += 1;
        chosen.insert(order[i]);
        if (ok(ed.u, i + 1) && ok(ed.w, i + 1)) rec(i + 1);
        chosen.erase(order[i]);
        deg[ed.u] -= 1;
        deg[ed.w] -= 1;
    };
    rec(0);
    return found;
}

}  // namespace sgf::oracle
