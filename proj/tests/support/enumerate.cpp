#include "support/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace sgf::test {

namespace {

struct Slot {
    int u, w;
};

std::vector<Slot> make_slots(int n, bool loops) {
    std::vector<Slot> slots;
    for (int u = 0; u < n; ++u)
        for (int w = u; w < n; ++w) {
            if (u == w && !loops) continue;
            slots.push_back({u, w});
        }
    return slots;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// canonical form: lexicographically smallest sorted edge list over perms
std::vector<std::pair<int, int>> canonical_edges(const std::vector<Slot>& slots,
                                                 const std::vector<int>& mult, int n,
                                                 const std::vector<std::vector<int>>& perms) {
    std::vector<std::pair<int, int>> best;
    bool first = true;
    std::vector<std::pair<int, int>> cur;
    for (const auto& perm : perms) {
        cur.clear();
        for (size_t i = 0; i < slots.size(); ++i) {
            if (!mult[i]) continue;
            int a = perm[slots[i].u], b = perm[slots[i].w];
            if (b < a) std::swap(a, b);
            for (int c = 0; c < mult[i]; ++c) cur.push_back({a, b});
        }
        std::sort(cur.begin(), cur.end());
        if (first || cur < best) {
            best = cur;
            first = false;
        }
    }
    (void)n;
    return best;
}

SignedGraph graph_from_mult(int n, const std::vector<Slot>& slots,
                            const std::vector<int>& mult) {
    std::vector<std::tuple<int, int, int>> edges;
    for (size_t i = 0; i < slots.size(); ++i)
        for (int c = 0; c < mult[i]; ++c) edges.push_back({slots[i].u, slots[i].w, 1});
    return SignedGraph::build(n, edges);
}

}  // namespace

void for_each_multigraph(const EnumOptions& opt,
                         const std::function<bool(const SignedGraph&)>& cb) {
    bool stop = false;
    for (int n = 1; n <= opt.max_vertices && !stop; ++n) {
        auto slots = make_slots(n, opt.allow_loops);
        auto perms = all_perms(n);
        std::set<std::vector<std::pair<int, int>>> seen;
        std::vector<int> mult(slots.size(), 0);
        std::vector<int> deg(n, 0);

        std::function<void(size_t, int)> rec = [&](size_t i, int budget) {
            if (stop) return;
            if (i == slots.size()) {
                int m = opt.max_edges - budget;
                if (n >= 2 && m == 0) return;
                if (opt.require_min_degree1 && n >= 2)
                    for (int v = 0; v < n; ++v)
                        if (deg[v] == 0) return;
                SignedGraph g = graph_from_mult(n, slots, mult);
                if (opt.require_connected && !g.connected()) return;
                auto canon = canonical_edges(slots, mult, n, perms);
                if (!seen.insert(canon).second) return;
                if (!cb(g)) stop = true;
                return;
            }
            int loop = slots[i].u == slots[i].w;
            for (int c = 0; c <= budget; ++c) {
                mult[i] = c;
                deg[slots[i].u] += c;
                deg[slots[i].w] += c;  // loops count twice via both adds
                (void)loop;
                rec(i + 1, budget - c);
                deg[slots[i].u] -= c;
                deg[slots[i].w] -= c;
                mult[i] = 0;
                if (stop) return;
            }
        };
        rec(0, opt.max_edges);
    }
}

void for_each_signature(const SignedGraph& g,
                        const std::function<bool(const SignedGraph&)>& cb) {
    std::vector<int> ids;
    for (const auto& [id, ed] : g.edges()) ids.push_back(id);
    int m = static_cast<int>(ids.size());
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::map<int, EdgeData> edges = g.edges();
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) edges[ids[i]].sign = -1;
        if (!cb(SignedGraph::from_parts(g.vertices(), edges))) return;
    }
}

void for_each_simple_graph(int max_vertices, int max_edges,
                           const std::function<bool(const SignedGraph&)>& cb) {
    bool stop = false;
    for (int n = 1; n <= max_vertices && !stop; ++n) {
        auto slots = make_slots(n, false);
        auto perms = all_perms(n);
        int nslots = static_cast<int>(slots.size());
        // slot permutation tables
        std::vector<std::vector<int>> slot_perm(perms.size(), std::vector<int>(nslots));
        std::map<std::pair<int, int>, int> slot_index;
        for (int i = 0; i < nslots; ++i) slot_index[{slots[i].u, slots[i].w}] = i;
        for (size_t pi = 0; pi < perms.size(); ++pi)
            for (int i = 0; i < nslots; ++i) {
                int a = perms[pi][slots[i].u], b = perms[pi][slots[i].w];
                if (b < a) std::swap(a, b);
                slot_perm[pi][i] = slot_index.at({a, b});
            }
        std::set<unsigned long> seen;
        for (unsigned long mask = 0; mask < (1ul << nslots) && !stop; ++mask) {
            int m = __builtin_popcountl(mask);
            if (m > max_edges) continue;
            if (n >= 2 && m == 0) continue;
            if (n >= 2) {
                bool iso_vertex = false;
                for (int v = 0; v < n && !iso_vertex; ++v) {
                    bool touched = false;
                    for (int i = 0; i < nslots; ++i)
                        if (((mask >> i) & 1u) && (slots[i].u == v || slots[i].w == v)) {
                            touched = true;
                            break;
                        }
                    if (!touched) iso_vertex = true;
                }
                if (iso_vertex) continue;
            }
            unsigned long canon = mask;
            for (const auto& sp : slot_perm) {
                unsigned long pm = 0;
                for (int i = 0; i < nslots; ++i)
                    if ((mask >> i) & 1u) pm |= 1ul << sp[i];
                canon = std::min(canon, pm);
            }
            if (!seen.insert(canon).second) continue;
            std::vector<std::tuple<int, int, int>> edges;
            for (int i = 0; i < nslots; ++i)
                if ((mask >> i) & 1u) edges.push_back({slots[i].u, slots[i].w, 1});
            if (!cb(SignedGraph::build(n, edges))) stop = true;
        }
    }
}

void for_each_regular_multigraph(int n, int r, bool allow_loops,
                                 const std::function<bool(const SignedGraph&)>& cb) {
    auto slots = make_slots(n, allow_loops);
    auto perms = all_perms(n);
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<int> mult(slots.size(), 0);
    std::vector<int> deg(n, 0);
    bool stop = false;

    // last slot index touching each vertex, for exact-degree checks
    std::vector<int> last_slot(n, -1);
    for (size_t i = 0; i < slots.size(); ++i) {
        last_slot[slots[i].u] = static_cast<int>(i);
        last_slot[slots[i].w] = static_cast<int>(i);
    }

    std::function<void(size_t)> rec = [&](size_t i) {
        if (stop) return;
        if (i == slots.size()) {
            SignedGraph g = graph_from_mult(n, slots, mult);
            auto canon = canonical_edges(slots, mult, n, perms);
            if (!seen.insert(canon).second) return;
            if (!cb(g)) stop = true;
            return;
        }
        const Slot& s = slots[i];
        int loop = s.u == s.w;
        int cap = loop ? (r - deg[s.u]) / 2 : std::min(r - deg[s.u], r - deg[s.w]);
        for (int c = 0; c <= cap; ++c) {
            mult[i] = c;
            deg[s.u] += loop ? 2 * c : c;
            if (!loop) deg[s.w] += c;
            bool ok = true;
            if (last_slot[s.u] == static_cast<int>(i) && deg[s.u] != r) ok = false;
            if (!loop && last_slot[s.w] == static_cast<int>(i) && deg[s.w] != r) ok = false;
            if (ok) rec(i + 1);
            deg[s.u] -= loop ? 2 * c : c;
            if (!loop) deg[s.w] -= c;
            mult[i] = 0;
            if (stop) return;
        }
    };
    rec(0);
}

SignedGraph random_multigraph(std::mt19937_64& rng, int n, int m, double negprob,
                              bool allow_loops) {
    std::vector<std::tuple<int, int, int>> edges;
    long long threshold = static_cast<long long>(negprob * 1000000.0);
    for (int i = 0; i < m; ++i) {
        int u = static_cast<int>(rng() % n);
        int w = static_cast<int>(rng() % n);
        while (!allow_loops && u == w) w = static_cast<int>(rng() % n);
        int sign = static_cast<long long>(rng() % 1000000) < threshold ? -1 : 1;
        edges.push_back({u, w, sign});
    }
    return SignedGraph::build(n, edges);
}

}  // namespace sgf::test
