#include "sgf/circular.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgf/factor.hpp"

namespace sgf {

PairSet mixed_vertex_pairs(const SignedGraph& g, const Orientation& tau, int v) {
    std::vector<HalfEdge> out, in;
    for (const HalfEdge& h : g.half_edges_at(v))
        (tau.at(h) > 0 ? out : in).push_back(h);
    if (out.empty() || in.empty())
        throw std::invalid_argument("mixed_vertex_pairs: vertex is uniform");
    PairSet s;
    s.vertex = v;
    for (const HalfEdge& a : out)
        for (const HalfEdge& b : in) {
            if (a.edge == b.edge) continue;  // the two halves of a positive loop
            s.add(a, b);
        }
    return s;
}

namespace {

struct StripRec {
    int edge;
    std::pair<int, int> tau;
};
struct SuppRec {
    int merged, e1, e2;
    std::pair<int, int> tau1, tau2;
    int tw1, tw2;
};
using LiftRec = std::variant<StripRec, SuppRec>;

void strip_positive_loops(SignedGraph& g, Orientation& tau, std::vector<LiftRec>& lifts,
                          CircularDiagnostics* diag) {
    std::vector<int> victims;
    for (const auto& [id, ed] : g.edges())
        if (ed.is_loop() && ed.sign > 0) victims.push_back(id);
    for (int id : victims) {
        lifts.push_back(StripRec{id, tau.tau.at(id)});
        g = g.without_loop(id).first;
        tau.tau.erase(id);
        if (diag) diag->stripped_loops += 1;
    }
    for (int v : std::vector<int>(g.vertices().begin(), g.vertices().end()))
        if (g.degree(v) == 0) g = g.without_vertex(v);
}

}  // namespace

FlowAssignment integer_circular_from_orientation(const SignedGraph& g,
                                                 const Orientation& tau0, int p,
                                                 CircularDiagnostics* diag) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    int k = 2 * p + 1;
    for (const auto& [id, ed] : g.edges())
        if (ed.is_loop() && ed.sign < 0)
            throw std::invalid_argument(
                "integer_circular_from_orientation: negative loops are not supported");
    if (!is_modulo_orientation(g, tau0, p))
        throw std::invalid_argument(
            "integer_circular_from_orientation: not a modulo (2p+1)-orientation");
    {
        auto c = g.odd_edge_connectivity();
        if (c && *c < k)
            throw std::invalid_argument(
                "integer_circular_from_orientation: odd edge connectivity below 2p+1");
    }

    SignedGraph work = g;
    Orientation tau = tau0;
    std::vector<LiftRec> lifts;
    strip_positive_loops(work, tau, lifts, diag);

    // Split some mixed vertex and suppress the new degree-2 vertex until all
    // vertices are uniform.  Suppressions that would form a negative loop are
    // avoided; when every mixed vertex is stuck on them, the instance is
    // rejected (the splitting machinery does not cover negative loops).
    while (true) {
        std::vector<int> mixed;
        for (int v : work.vertices()) {
            bool has_out = false, has_in = false;
            for (const HalfEdge& h : work.half_edges_at(v))
                (tau.at(h) > 0 ? has_out : has_in) = true;
            if (has_out && has_in) mixed.push_back(v);
        }
        if (mixed.empty()) break;

        bool applied = false;
        bool saw_negative_loop_option = false;
        for (int v : mixed) {
            if (applied) break;
            if (work.degree(v) == k)
                throw std::logic_error("mixed vertex of degree 2p+1 (orientation broken)");
            PairSet s = mixed_vertex_pairs(work, tau, v);
            if (!sequentially_connected(s, work.degree(v)))
                throw std::logic_error("mixed pair set not sequentially connected");

            std::vector<std::pair<HalfEdge, HalfEdge>> cands(s.pairs.begin(),
                                                             s.pairs.end());
            auto makes_negative_loop = [&](const std::pair<HalfEdge, HalfEdge>& pr) {
                const EdgeData& d1 = work.edge(pr.first.edge);
                const EdgeData& d2 = work.edge(pr.second.edge);
                return d1.other(pr.first.end) == d2.other(pr.second.end) &&
                       d1.sign * d2.sign < 0;
            };
            bool exists_preserving = false;
            for (const auto& pr : cands) {
                if (applied) break;
                auto [g1, rec] = work.split_off(v, {pr.first, pr.second});
                auto conn = g1.odd_edge_connectivity();
                if (conn && *conn < k) continue;
                exists_preserving = true;
                if (makes_negative_loop(pr)) {
                    saw_negative_loop_option = true;
                    continue;
                }
                int vstar = std::get<SplitOffRec>(rec).new_vertex;
                if (diag) {
                    diag->stages.push_back(g1);
                    diag->splits += 1;
                }
                auto halves = g1.half_edges_at(vstar);
                auto [g2, srec] = g1.suppressed(vstar);
                const auto& sr = std::get<SuppressRec>(srec);
                SuppRec lf;
                lf.merged = sr.merged;
                lf.e1 = sr.edge1;
                lf.e2 = sr.edge2;
                lf.tau1 = tau.tau.at(sr.edge1);
                lf.tau2 = tau.tau.at(sr.edge2);
                int end1 = halves[0].edge == sr.edge1 ? halves[0].end : halves[1].end;
                int end2 = halves[0].edge == sr.edge2 ? halves[0].end : halves[1].end;
                lf.tw1 = tau.at({sr.edge1, end1});
                lf.tw2 = tau.at({sr.edge2, end2});
                if (lf.tw1 * lf.tw2 != -1)
                    throw std::logic_error("suppressed pair is not one-in-one-out");
                int t0 = tau.at({sr.edge1, 1 - end1});
                int t1 = -sr.merged_data.sign * t0;
                tau.tau.erase(sr.edge1);
                tau.tau.erase(sr.edge2);
                tau.set(sr.merged, t0, t1);
                lifts.push_back(lf);
                work = g2;
                if (!is_modulo_orientation(work, tau, p))
                    throw std::logic_error("orientation lost after split+suppress");
                if (diag) diag->stages.push_back(work);
                strip_positive_loops(work, tau, lifts, diag);
                applied = true;
            }
            if (!applied && !exists_preserving)
                throw std::logic_error(
                    "odd-preserving split exhausted its pair set (theorem violation)");
        }
        if (!applied) {
            if (saw_negative_loop_option)
                throw std::invalid_argument(
                    "integer_circular_from_orientation: splitting would create a "
                    "negative loop (unsupported)");
            throw std::logic_error(
                "odd-preserving split exhausted its pair set (theorem violation)");
        }
    }

    // Uniform graph: d(v) = (2p+1) mu(v); extract the p*mu factor.
    FlowAssignment out;
    if (work.edge_count() > 0) {
        std::map<int, int> mu;
        for (int v : work.vertices()) {
            if (work.degree(v) % k != 0)
                throw std::logic_error("uniform vertex degree not a multiple of 2p+1");
            mu[v] = work.degree(v) / k;
        }
        FactorSubgraph f = p_mu_factor(work, p, mu);
        for (const auto& [id, ed] : work.edges()) {
            out.value[id] = f.edges.count(id) ? -(p + 1) : p;
            out.orientation.tau[id] = tau.tau.at(id);
        }
    }

    // Lift back: stripped positive loops take p, suppressed edges copy the
    // merged value to both constituents.
    for (auto it = lifts.rbegin(); it != lifts.rend(); ++it) {
        if (const auto* srec = std::get_if<StripRec>(&*it)) {
            out.value[srec->edge] = p;
            out.orientation.tau[srec->edge] = srec->tau;
        } else {
            const auto& lf = std::get<SuppRec>(*it);
            int y = out.at(lf.merged);
            out.value.erase(lf.merged);
            out.orientation.tau.erase(lf.merged);
            out.value[lf.e1] = y;
            out.orientation.tau[lf.e1] = lf.tau1;
            out.value[lf.e2] = -y * lf.tw1 * lf.tw2;
            out.orientation.tau[lf.e2] = lf.tau2;
        }
    }

    VerifyReport rep = verify(g, out, FlowSpec::circular_integer(k, p));
    if (!rep.pass)
        throw std::logic_error("integer_circular_from_orientation: failed self-check: " +
                               rep.message());
    return out;
}

}  // namespace sgf
