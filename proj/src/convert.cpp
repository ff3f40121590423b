#include "sgf/convert.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "sgf/euler.hpp"

namespace sgf::convert {

namespace {

std::set<int> edge_ids(const SignedGraph& g) {
    std::set<int> ids;
    for (const auto& [id, ed] : g.edges()) ids.insert(id);
    return ids;
}

// Components of the subgraph formed by the given edges, as edge sets.
std::vector<std::set<int>> edge_components(const SignedGraph& g, const std::set<int>& edges) {
    std::map<int, int> comp;  // vertex -> component index
    std::vector<std::set<int>> out;
    for (int e : edges) {
        const EdgeData& ed = g.edge(e);
        comp.emplace(ed.u, -1);
        comp.emplace(ed.w, -1);
    }
    for (auto& [start, c0] : comp) {
        if (c0 != -1) continue;
        int c = static_cast<int>(out.size());
        out.push_back({});
        std::vector<int> stack{start};
        c0 = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : edges) {
                const EdgeData& ed = g.edge(e);
                for (int end = 0; end < 2; ++end) {
                    if (ed.endpoint(end) != v) continue;
                    out[c].insert(e);
                    int o = ed.other(end);
                    if (comp[o] == -1) {
                        comp[o] = c;
                        stack.push_back(o);
                    }
                }
            }
        }
    }
    return out;
}

int negatives_in(const SignedGraph& g, const std::set<int>& edges) {
    int n = 0;
    for (int e : edges)
        if (g.edge(e).sign < 0) ++n;
    return n;
}

std::string join_edges(const std::set<int>& edges) {
    std::ostringstream os;
    bool first = true;
    for (int e : edges) {
        if (!first) os << " ";
        os << "e" << e;
        first = false;
    }
    return os.str();
}

// Orients a closed trail carrying a direction state that flips across
// negative edges, and writes f = 1 on the trail's edges.
void orient_trail(const SignedGraph& g, const std::vector<Traversal>& tour,
                  FlowAssignment& fa) {
    int s = 1;
    for (const Traversal& t : tour) {
        const EdgeData& ed = g.edge(t.edge);
        int tail_end = 1 - t.in_end;
        int tau_tail = s;
        int tau_head = -ed.sign * s;
        if (tail_end == 0)
            fa.orientation.set(t.edge, tau_tail, tau_head);
        else
            fa.orientation.set(t.edge, tau_head, tau_tail);
        fa.value[t.edge] = 1;
        s = ed.sign * s;
    }
    if (s != 1) throw std::logic_error("trail state did not close");
}

}  // namespace

FlowAssignment int2_from_mod2(const SignedGraph& g, const FlowAssignment& f1) {
    VerifyReport in = verify(g, f1, FlowSpec::modulo(2));
    if (!in.pass) throw std::invalid_argument("int2_from_mod2: input " + in.message());
    std::set<int> supp = support(f1);
    FlowAssignment out;
    out.orientation = f1.orientation;
    for (const auto& [id, ed] : g.edges()) out.value[id] = 0;
    for (const std::set<int>& comp : edge_components(g, supp)) {
        if (negatives_in(g, comp) % 2 != 0)
            throw std::invalid_argument(
                "int2_from_mod2: support component with an odd number of negative edges: " +
                join_edges(comp));
        orient_trail(g, euler_circuit(g, comp), out);
    }
    VerifyReport rep = verify(g, out, FlowSpec::integer(2));
    if (!rep.pass || support(out) != supp)
        throw std::logic_error("int2_from_mod2: construction failed self-check");
    return out;
}

namespace {

FlowAssignment restrict_flow(const FlowAssignment& fa, const SignedGraph& sub) {
    FlowAssignment out;
    for (const auto& [id, ed] : sub.edges()) {
        out.value[id] = fa.at(id);
        out.orientation.tau[id] = fa.orientation.tau.at(id);
    }
    return out;
}

// Recursive core of the modulo-2 to integer-3 conversion.  g is connected
// and fa's support carries an even number of negative edges in total.
FlowAssignment int3_rec(const SignedGraph& g, const FlowAssignment& fa) {
    std::set<int> supp = support(fa);
    std::set<int> all = edge_ids(g);
    if (supp == all) return int2_from_mod2(g, fa);

    auto blocks = g.bridges_and_blocks();
    std::set<int> bridges(blocks.bridges.begin(), blocks.bridges.end());

    // Smallest edge outside the support decides the branch.
    int estar = 0;
    for (int e : all)
        if (!supp.count(e)) {
            estar = e;
            break;
        }

    // A non-bridge is deleted and restored with 0.
    if (g.edge(estar).is_loop() || !bridges.count(estar)) {
        SignedGraph g2 = g.without_edge(estar);
        FlowAssignment f2in = fa;
        f2in.value.erase(estar);
        f2in.orientation.tau.erase(estar);
        FlowAssignment f2 = int3_rec(g2, f2in);
        f2.value[estar] = 0;
        f2.orientation.tau[estar] = fa.orientation.tau.at(estar);
        return f2;
    }
    const EdgeData& ed = g.edge(estar);
    int x1 = ed.u, x2 = ed.w;
    SignedGraph cut = g.without_edge(estar);
    std::set<int> q1_verts, q2_verts;
    for (const auto& comp : cut.components()) {
        bool has1 = std::find(comp.begin(), comp.end(), x1) != comp.end();
        if (has1)
            q1_verts.insert(comp.begin(), comp.end());
        else if (std::find(comp.begin(), comp.end(), x2) != comp.end())
            q2_verts.insert(comp.begin(), comp.end());
    }
    SignedGraph q1 = cut.induced(q1_verts);
    SignedGraph q2 = cut.induced(q2_verts);

    std::set<int> b1, b2;
    for (int e : supp) (q1.has_edge(e) ? b1 : b2).insert(e);
    int neg1 = negatives_in(g, b1);

    FlowAssignment f2;
    if (neg1 % 2 == 0) {
        FlowAssignment g1 = int3_rec(q1, restrict_flow(fa, q1));
        FlowAssignment g2 = int3_rec(q2, restrict_flow(fa, q2));
        f2.value = g1.value;
        f2.orientation = g1.orientation;
        f2.value.insert(g2.value.begin(), g2.value.end());
        f2.orientation.tau.insert(g2.orientation.tau.begin(), g2.orientation.tau.end());
        f2.value[estar] = 0;
        f2.orientation.tau[estar] = fa.orientation.tau.at(estar);
        return f2;
    }

    // Odd-odd parity: add a negative loop at each side, recurse, then pick
    // +-2 on the bridge to zero both boundaries.
    auto solve_side = [&](const SignedGraph& q, int x) {
        auto [h, rec] = q.with_edge(x, x, -1);
        int loop = std::get<AddEdgeRec>(rec).edge;
        FlowAssignment fin = restrict_flow(fa, q);
        fin.value[loop] = 1;
        fin.orientation.set(loop, 1, 1);
        FlowAssignment gsol = int3_rec(h, fin);
        int d = boundary_excluding(h, gsol, x, {loop});
        gsol.value.erase(loop);
        gsol.orientation.tau.erase(loop);
        return std::make_pair(gsol, d);
    };
    auto [g1, d1] = solve_side(q1, x1);
    auto [g2, d2] = solve_side(q2, x2);
    if (std::abs(d1) != 2 || std::abs(d2) != 2)
        throw std::logic_error("int3_from_mod2: gadget boundary is not +-2");
    if (d2 != -ed.sign * d1) {
        for (auto& [id, v] : g1.value) v = -v;
        d1 = -d1;
    }
    if (d2 != -ed.sign * d1) throw std::logic_error("int3_from_mod2: parity repair failed");
    f2.value = g1.value;
    f2.orientation = g1.orientation;
    f2.value.insert(g2.value.begin(), g2.value.end());
    f2.orientation.tau.insert(g2.orientation.tau.begin(), g2.orientation.tau.end());
    int tx1 = fa.orientation.at({estar, ed.u == x1 ? 0 : 1});
    f2.value[estar] = -d1 * tx1;
    f2.orientation.tau[estar] = fa.orientation.tau.at(estar);
    return f2;
}

}  // namespace

FlowAssignment int3_from_mod2(const SignedGraph& g, const FlowAssignment& f1) {
    if (!g.connected()) throw std::invalid_argument("int3_from_mod2: graph not connected");
    VerifyReport in = verify(g, f1, FlowSpec::modulo(2));
    if (!in.pass) throw std::invalid_argument("int3_from_mod2: input " + in.message());
    std::set<int> supp = support(f1);
    if (negatives_in(g, supp) % 2 != 0)
        throw std::invalid_argument(
            "int3_from_mod2: support has an odd number of negative edges");
    FlowAssignment f2 = int3_rec(g, f1);
    VerifyReport rep = verify(g, f2, FlowSpec::integer(3));
    std::set<int> ones;
    for (const auto& [id, v] : f2.value)
        if (std::abs(v) == 1) ones.insert(id);
    if (!rep.pass || ones != supp)
        throw std::logic_error("int3_from_mod2: construction failed self-check");
    return f2;
}

FlowAssignment int3_from_mod3(const SignedGraph& g, const FlowAssignment& f1, int gate) {
    VerifyReport in = verify(g, f1, FlowSpec::modulo(3));
    if (!in.pass) throw std::invalid_argument("int3_from_mod3: input " + in.message());
    std::set<int> supp = support(f1);
    {
        std::set<int> verts;
        for (int e : supp) {
            verts.insert(g.edge(e).u);
            verts.insert(g.edge(e).w);
        }
        SignedGraph sub = SignedGraph::from_parts(
            verts, [&] {
                std::map<int, EdgeData> m;
                for (int e : supp) m[e] = g.edge(e);
                return m;
            }());
        if (!sub.bridges_and_blocks().bridges.empty())
            throw std::invalid_argument("int3_from_mod3: support contains a bridge");
    }
    if (static_cast<int>(supp.size()) > gate)
        throw std::invalid_argument("int3_from_mod3: support exceeds search gate");

    std::vector<int> order(supp.begin(), supp.end());
    std::map<int, int> remaining, partial;
    for (int v : g.vertices()) {
        remaining[v] = 0;
        partial[v] = 0;
    }
    for (int e : order) {
        const EdgeData& ed = g.edge(e);
        remaining[ed.u] += 1;
        remaining[ed.w] += 1;
    }
    FlowAssignment f2;
    f2.orientation = f1.orientation;
    for (const auto& [id, ed] : g.edges()) f2.value[id] = 0;

    bool found = false;
    auto vertex_ok = [&](int v) {
        if (remaining[v] == 0) return partial[v] == 0;
        return std::abs(partial[v]) <= 2 * remaining[v];
    };
    std::function<void(size_t)> rec = [&](size_t i) {
        if (found) return;
        if (i == order.size()) {
            found = true;
            return;
        }
        int e = order[i];
        const EdgeData& ed = g.edge(e);
        int r = ((f1.at(e) % 3) + 3) % 3;  // 1 or 2
        int t0 = f1.orientation.at({e, 0});
        int t1 = f1.orientation.at({e, 1});
        int cands[2] = {r == 1 ? 1 : -1, r == 1 ? -2 : 2};
        for (int x : cands) {
            f2.value[e] = x;
            partial[ed.u] += x * t0;
            partial[ed.w] += x * t1;
            remaining[ed.u] -= 1;
            remaining[ed.w] -= 1;
            if (vertex_ok(ed.u) && vertex_ok(ed.w)) rec(i + 1);
            if (found) return;  // keep the accepted assignment in place
            partial[ed.u] -= x * t0;
            partial[ed.w] -= x * t1;
            remaining[ed.u] += 1;
            remaining[ed.w] += 1;
        }
        f2.value[e] = 0;
    };
    rec(0);
    if (!found)
        throw std::logic_error("int3_from_mod3: no residue lift found (theorem violation)");
    VerifyReport rep = verify(g, f2, FlowSpec::integer(3));
    if (!rep.pass || support(f2) != supp)
        throw std::logic_error("int3_from_mod3: construction failed self-check");
    return f2;
}

FlowAssignment double_flow_search(const SignedGraph& g, const FlowAssignment& f1, int k,
                                  int gate) {
    if (k < 2) throw std::invalid_argument("double_flow_search: k must be >= 2");
    VerifyReport in = verify(g, f1, FlowSpec::modulo(k));
    if (!in.pass) throw std::invalid_argument("double_flow_search: input " + in.message());
    if (g.edge_count() > gate)
        throw std::invalid_argument("double_flow_search: edge count exceeds gate");
    std::set<int> supp = support(f1);

    std::vector<int> order;
    std::vector<std::vector<int>> domain;
    for (const auto& [id, ed] : g.edges()) {
        order.push_back(id);
        int r = ((f1.at(id) % k) + k) % k;
        std::vector<int> dom;
        for (int a = 0; a <= 2 * k - 1; ++a) {
            for (int x : {a, -a}) {
                if (x == 0 && a != 0) continue;
                if (((x % k) + k) % k != r) continue;
                if (x == 0 && supp.count(id)) continue;
                dom.push_back(x);
            }
        }
        domain.push_back(dom);
    }
    std::map<int, int> remaining, partial;
    for (int v : g.vertices()) {
        remaining[v] = g.degree(v);
        partial[v] = 0;
    }
    FlowAssignment f2;
    f2.orientation = f1.orientation;
    bool found = false;
    int maxabs = 2 * k - 1;
    auto vertex_ok = [&](int v) {
        if (remaining[v] == 0) return partial[v] == 0;
        return std::abs(partial[v]) <= maxabs * remaining[v];
    };
    std::function<void(size_t)> rec = [&](size_t i) {
        if (found) return;
        if (i == order.size()) {
            found = true;
            return;
        }
        int e = order[i];
        const EdgeData& ed = g.edge(e);
        int t0 = f1.orientation.at({e, 0});
        int t1 = f1.orientation.at({e, 1});
        for (int x : domain[i]) {
            f2.value[e] = x;
            partial[ed.u] += x * t0;
            partial[ed.w] += x * t1;
            remaining[ed.u] -= 1;
            remaining[ed.w] -= 1;
            if (vertex_ok(ed.u) && vertex_ok(ed.w)) rec(i + 1);
            if (found) return;
            partial[ed.u] -= x * t0;
            partial[ed.w] -= x * t1;
            remaining[ed.u] += 1;
            remaining[ed.w] += 1;
        }
        f2.value.erase(e);
    };
    rec(0);
    if (!found)
        throw std::logic_error("double_flow_search: no lift found (theorem violation)");
    VerifyReport rep = verify(g, f2, FlowSpec::integer(2 * k));
    if (!rep.pass) throw std::logic_error("double_flow_search: failed self-check");
    for (int e : supp)
        if (f2.at(e) == 0) throw std::logic_error("double_flow_search: support not contained");
    return f2;
}

// ---------------------------------------------------------------------------
// integer 4-flow from a modulo 3-flow

namespace {

struct Potential {
    long suppc = 0;
    long degsum = 0;
    bool operator<(const Potential& o) const {
        return suppc != o.suppc ? suppc < o.suppc : degsum < o.degsum;
    }
};

Potential potential_of(const SignedGraph& g, const FlowAssignment& fa) {
    Potential p;
    for (const auto& [id, ed] : g.edges())
        if (fa.at(id) == 0) ++p.suppc;
    for (int v : g.vertices()) p.degsum += std::abs(g.degree(v) - 3);
    return p;
}

struct Int4Solver {
    Int4Diagnostics* diag;
    int gate;

    FlowAssignment solve(SignedGraph g, FlowAssignment fa,
                         std::optional<Potential> bound);
    FlowAssignment solve_connected(const SignedGraph& g, const FlowAssignment& fa,
                                   const Potential& pot);
    FlowAssignment fallback(const SignedGraph& g, const FlowAssignment& fa);
    FlowAssignment case_split(const SignedGraph& g, const FlowAssignment& fa,
                              int v, const Potential& pot);
    FlowAssignment case_contract(const SignedGraph& g, const FlowAssignment& fa,
                                 const Potential& pot);
};

// Strips positive loops and zero-valued loops (restored verbatim: a positive
// loop's halves cancel in every boundary) and drops isolated vertices.
void strip_loops(SignedGraph& g, FlowAssignment& fa,
                 std::map<int, std::pair<int, std::pair<int, int>>>& stripped) {
    std::vector<int> victims;
    for (const auto& [id, ed] : g.edges())
        if (ed.is_loop() && (ed.sign > 0 || fa.at(id) == 0)) victims.push_back(id);
    for (int id : victims) {
        stripped[id] = {fa.at(id), fa.orientation.tau.at(id)};
        g = g.without_loop(id).first;
        fa.value.erase(id);
        fa.orientation.tau.erase(id);
    }
    for (int v : std::vector<int>(g.vertices().begin(), g.vertices().end()))
        if (g.degree(v) == 0) g = g.without_vertex(v);
}

FlowAssignment Int4Solver::solve(SignedGraph g, FlowAssignment fa,
                                 std::optional<Potential> bound) {
    std::map<int, std::pair<int, std::pair<int, int>>> stripped;
    strip_loops(g, fa, stripped);

    FlowAssignment result;
    if (g.edge_count() == 0) {
        // nothing left
    } else {
        Potential pot = potential_of(g, fa);
        bool in_envelope = !bound || pot < *bound;
        if (!in_envelope) {
            // The structural step above us failed to shrink the potential;
            // solve each component by the bounded restricted search instead.
            for (const auto& comp : g.components()) {
                std::set<int> vs(comp.begin(), comp.end());
                SignedGraph sub = g.induced(vs);
                if (sub.edge_count() == 0) continue;
                if (diag) diag->fallback_components += 1;
                FlowAssignment part = fallback(sub, restrict_flow(fa, sub));
                result.value.insert(part.value.begin(), part.value.end());
                result.orientation.tau.insert(part.orientation.tau.begin(),
                                              part.orientation.tau.end());
            }
        } else {
            for (const auto& comp : g.components()) {
                std::set<int> vs(comp.begin(), comp.end());
                SignedGraph sub = g.induced(vs);
                if (sub.edge_count() == 0) continue;
                FlowAssignment fsub = restrict_flow(fa, sub);
                FlowAssignment part = solve_connected(sub, fsub, potential_of(sub, fsub));
                result.value.insert(part.value.begin(), part.value.end());
                result.orientation.tau.insert(part.orientation.tau.begin(),
                                              part.orientation.tau.end());
            }
        }
    }
    for (const auto& [id, vt] : stripped) {
        result.value[id] = vt.first;
        result.orientation.tau[id] = vt.second;
    }
    return result;
}

FlowAssignment Int4Solver::solve_connected(const SignedGraph& g, const FlowAssignment& fa,
                                           const Potential& pot) {
    std::set<int> supp = support(fa);
    std::set<int> all = edge_ids(g);

    if (supp.empty()) {
        FlowAssignment zero;
        zero.orientation = fa.orientation;
        for (int e : all) zero.value[e] = 0;
        return zero;
    }
    if (!g.bridges_and_blocks().bridges.empty()) {
        // Outside the proven envelope (the recursion maintains bridgelessness);
        // solve directly.
        if (diag) diag->fallback_components += 1;
        return fallback(g, fa);
    }
    if (supp == all) return int3_from_mod3(g, fa, gate);

    for (int v : g.vertices())
        if (g.degree(v) >= 4) {
            if (diag) diag->structural_steps += 1;
            return case_split(g, fa, v, pot);
        }
    if (diag) diag->structural_steps += 1;
    return case_contract(g, fa, pot);
}

FlowAssignment Int4Solver::case_split(const SignedGraph& g, const FlowAssignment& fa,
                                      int v, const Potential& pot) {
    auto blocks = g.bridges_and_blocks();
    std::map<int, int> block_of;
    for (size_t b = 0; b < blocks.blocks.size(); ++b)
        for (int e : blocks.blocks[b]) block_of[e] = static_cast<int>(b);
    bool is_cut = std::find(blocks.cut_vertices.begin(), blocks.cut_vertices.end(), v) !=
                  blocks.cut_vertices.end();

    std::vector<HalfEdge> nonloop;
    int loop_boundary = 0;
    for (const HalfEdge& h : g.half_edges_at(v)) {
        if (g.edge(h.edge).is_loop())
            loop_boundary += fa.at(h.edge) * fa.orientation.at(h);
        else
            nonloop.push_back(h);
    }

    // Candidate pairs: distinct non-loop edges, spanning two blocks when v
    // is a cut vertex, and never detaching v onto unbalanced loops only.
    // Pairs whose suppression keeps two distinct endpoints go first.
    struct Cand {
        HalfEdge h1, h2;
        bool parallel;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < nonloop.size(); ++i)
        for (size_t j = i + 1; j < nonloop.size(); ++j) {
            const HalfEdge &h1 = nonloop[i], &h2 = nonloop[j];
            if (h1.edge == h2.edge) continue;
            if (is_cut && block_of[h1.edge] == block_of[h2.edge]) continue;
            bool leaves_loops_only = nonloop.size() == 2;
            if (leaves_loops_only && sym_mod(loop_boundary, 3) != 0) continue;
            int o1 = g.edge(h1.edge).other(h1.end);
            int o2 = g.edge(h2.edge).other(h2.end);
            cands.push_back({h1, h2, o1 == o2});
        }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return !a.parallel && b.parallel; });

    SignedGraph g1;
    int vstar = -1;
    bool chosen = false;
    for (const Cand& c : cands) {
        auto [cand, rec] = g.split_off(v, {c.h1, c.h2});
        if (cand.bridges_and_blocks().bridges.empty()) {
            g1 = cand;
            vstar = std::get<SplitOffRec>(rec).new_vertex;
            chosen = true;
            break;
        }
    }
    if (!chosen) {
        if (diag) diag->fallback_components += 1;
        return fallback(g, fa);
    }

    int bv = boundary(g1, fa, vstar);
    if (sym_mod(bv, 3) != 0) {
        // add a positive edge v -> v* carrying the residue
        int t = ((bv % 3) + 3) % 3;  // 1 or 2
        auto [g2, rec] = g1.with_edge(v, vstar, 1);
        int aid = std::get<AddEdgeRec>(rec).edge;
        FlowAssignment fa2 = fa;
        fa2.value[aid] = t;
        fa2.orientation.set(aid, 1, -1);
        VerifyReport chk = verify(g2, fa2, FlowSpec::modulo(3));
        if (!chk.pass) throw std::logic_error("int4_from_mod3: split lost flow property");
        FlowAssignment sol = solve(g2, fa2, pot);
        sol.value.erase(aid);
        sol.orientation.tau.erase(aid);
        return sol;
    }

    // both boundaries are 0 mod 3: suppress the degree-2 vertices
    struct Lift {
        int merged, e1, e2;
        std::pair<int, int> tau1, tau2;
        int tw1, tw2;  // tau at the suppressed vertex on e1, e2
    };
    SignedGraph g2 = g1;
    FlowAssignment fa2 = fa;
    std::vector<Lift> lifts;
    for (int w : {vstar, v}) {
        if (!g2.has_vertex(w) || g2.degree(w) != 2) continue;
        auto halves = g2.half_edges_at(w);
        if (halves[0].edge == halves[1].edge) continue;  // a loop stays
        if (sym_mod(boundary(g2, fa2, w), 3) != 0)
            throw std::logic_error("int4_from_mod3: unbalanced degree-2 vertex");
        const EdgeData& d1 = g2.edge(halves[0].edge);
        const EdgeData& d2 = g2.edge(halves[1].edge);
        if (d1.other(halves[0].end) == d2.other(halves[1].end) &&
            d1.sign * d2.sign < 0 && fa2.at(halves[0].edge) != 0)
            continue;  // would create a valued negative loop; leave w in place
        auto [gs, rec] = g2.suppressed(w);
        const auto& sr = std::get<SuppressRec>(rec);
        Lift lf;
        lf.merged = sr.merged;
        lf.e1 = sr.edge1;
        lf.e2 = sr.edge2;
        lf.tau1 = fa2.orientation.tau.at(sr.edge1);
        lf.tau2 = fa2.orientation.tau.at(sr.edge2);
        lf.tw1 = fa2.orientation.at({sr.edge1, halves[0].end});
        lf.tw2 = fa2.orientation.at({sr.edge2, halves[1].end});
        int a = fa2.at(sr.edge1);
        int t0 = fa2.orientation.at({sr.edge1, 1 - halves[0].end});
        int t1 = -sr.merged_data.sign * t0;
        fa2.value.erase(sr.edge1);
        fa2.value.erase(sr.edge2);
        fa2.orientation.tau.erase(sr.edge1);
        fa2.orientation.tau.erase(sr.edge2);
        fa2.value[sr.merged] = a;
        fa2.orientation.set(sr.merged, t0, t1);
        g2 = gs;
        lifts.push_back(lf);
    }
    VerifyReport chk = verify(g2, fa2, FlowSpec::modulo(3));
    if (!chk.pass) throw std::logic_error("int4_from_mod3: suppression lost flow property");
    FlowAssignment sol = solve(g2, fa2, pot);
    for (auto it = lifts.rbegin(); it != lifts.rend(); ++it) {
        int y = sol.at(it->merged);
        sol.value.erase(it->merged);
        sol.orientation.tau.erase(it->merged);
        sol.value[it->e1] = y;
        sol.orientation.tau[it->e1] = it->tau1;
        sol.value[it->e2] = -y * it->tw1 * it->tw2;
        sol.orientation.tau[it->e2] = it->tau2;
    }
    return sol;
}

FlowAssignment Int4Solver::case_contract(const SignedGraph& g, const FlowAssignment& fa,
                                         const Potential& pot) {
    std::set<int> supp = support(fa);
    int x = -1, estar = 0;
    for (int v : g.vertices()) {
        bool has_supp = false, has_zero = false;
        int first_zero = 0;
        for (int e : g.incident_edges(v)) {
            if (supp.count(e))
                has_supp = true;
            else if (!first_zero) {
                has_zero = true;
                first_zero = e;
            }
        }
        if (has_supp && has_zero) {
            x = v;
            estar = first_zero;
            break;
        }
    }
    if (x < 0) throw std::logic_error("int4_from_mod3: no mixed-support vertex");
    if (g.edge(estar).is_loop()) throw std::logic_error("int4_from_mod3: zero loop survived");

    SignedGraph gx = g;
    FlowAssignment fax = fa;
    bool switched = false;
    if (g.edge(estar).sign < 0) {
        std::tie(gx, fax) = flow_switch(g, fa, x);
        switched = true;
    }
    const EdgeData& ed = gx.edge(estar);
    int end_x = ed.u == x ? 0 : 1;
    int s = fax.orientation.at({estar, end_x});

    auto [gc, rec] = gx.contracted(estar);
    FlowAssignment fc = fax;
    fc.value.erase(estar);
    fc.orientation.tau.erase(estar);
    FlowAssignment sol = solve(gc, fc, pot);

    int delta = 0;
    for (const HalfEdge& h : gx.half_edges_at(x)) {
        if (h.edge == estar) continue;
        delta += sol.at(h.edge) * sol.orientation.at(h);
    }

    FlowAssignment out;
    if (sym_mod(delta, 3) != 0) {
        // enlarge the support and restart
        FlowAssignment h1;
        h1.orientation = fax.orientation;
        for (const auto& [id, edd] : gx.edges()) {
            if (id == estar) continue;
            h1.value[id] = sym_mod(sol.at(id), 3);
            h1.orientation.tau[id] = sol.orientation.tau.at(id);
        }
        h1.value[estar] = sym_mod(-delta * s, 3);
        h1.orientation.tau[estar] = fax.orientation.tau.at(estar);
        VerifyReport chk = verify(gx, h1, FlowSpec::modulo(3));
        if (!chk.pass) throw std::logic_error("int4_from_mod3: restart flow invalid");
        if (potential_of(gx, h1).suppc >= pot.suppc)
            throw std::logic_error("int4_from_mod3: restart did not grow support");
        if (diag) diag->restarts += 1;
        out = solve(gx, h1, pot);
    } else {
        int fe = -delta * s;
        if (std::abs(fe) > 3) {
            if (diag) diag->fallback_components += 1;
            out = fallback(gx, fax);
        } else {
            out = sol;
            out.value[estar] = fe;
            out.orientation.tau[estar] = fax.orientation.tau.at(estar);
        }
    }
    if (switched) out = flow_switch(gx, out, x).second;
    return out;
}

FlowAssignment Int4Solver::fallback(const SignedGraph& g, const FlowAssignment& fa) {
    if (g.edge_count() > std::max(gate, 24))
        throw std::invalid_argument("int4_from_mod3: fallback exceeds search gate");
    std::set<int> supp = support(fa);
    std::vector<int> order;
    for (const auto& [id, ed] : g.edges()) order.push_back(id);

    auto attempt = [&](bool wide) -> std::optional<FlowAssignment> {
        std::map<int, int> remaining, partial;
        for (int v : g.vertices()) {
            remaining[v] = g.degree(v);
            partial[v] = 0;
        }
        FlowAssignment f2;
        f2.orientation = fa.orientation;
        bool found = false;
        auto vertex_ok = [&](int v) {
            if (remaining[v] == 0) return partial[v] == 0;
            return std::abs(partial[v]) <= 3 * remaining[v];
        };
        std::function<void(size_t)> rec = [&](size_t i) {
            if (found) return;
            if (i == order.size()) {
                found = true;
                return;
            }
            int e = order[i];
            const EdgeData& ed = g.edge(e);
            int t0 = fa.orientation.at({e, 0});
            int t1 = fa.orientation.at({e, 1});
            static const std::vector<int> supp_dom{1, -1, 2, -2};
            static const std::vector<int> zero_dom{0, 3, -3};
            static const std::vector<int> wide_dom{0, 1, -1, 2, -2, 3, -3};
            const std::vector<int>& dom =
                supp.count(e) ? supp_dom : (wide ? wide_dom : zero_dom);
            for (int xv : dom) {
                f2.value[e] = xv;
                partial[ed.u] += xv * t0;
                partial[ed.w] += xv * t1;
                remaining[ed.u] -= 1;
                remaining[ed.w] -= 1;
                if (vertex_ok(ed.u) && vertex_ok(ed.w)) rec(i + 1);
                if (found) return;
                partial[ed.u] -= xv * t0;
                partial[ed.w] -= xv * t1;
                remaining[ed.u] += 1;
                remaining[ed.w] += 1;
            }
            f2.value.erase(e);
        };
        rec(0);
        if (!found) return std::nullopt;
        return f2;
    };
    if (auto r = attempt(false)) return *r;
    if (auto r = attempt(true)) return *r;
    throw std::logic_error("int4_from_mod3: no integer 4-flow found (theorem violation)");
}

}  // namespace

FlowAssignment int4_from_mod3(const SignedGraph& g, const FlowAssignment& f1,
                              Int4Diagnostics* diag, int gate) {
    VerifyReport in = verify(g, f1, FlowSpec::modulo(3));
    if (!in.pass) throw std::invalid_argument("int4_from_mod3: input " + in.message());
    if (!g.bridges_and_blocks().bridges.empty())
        throw std::invalid_argument("int4_from_mod3: bridge detected");
    Int4Solver solver{diag, gate};
    FlowAssignment f2 = solver.solve(g, f1, std::nullopt);
    VerifyReport rep = verify(g, f2, FlowSpec::integer(4));
    if (!rep.pass) throw std::logic_error("int4_from_mod3: failed self-check");
    for (int e : support(f1)) {
        int a = std::abs(f2.at(e));
        if (a < 1 || a > 2)
            throw std::logic_error("int4_from_mod3: support not covered by {1,2} values");
    }
    return f2;
}

}  // namespace sgf::convert
