#include "sgf/flow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgf {

int Orientation::at(const HalfEdge& h) const {
    auto it = tau.find(h.edge);
    if (it == tau.end()) throw std::invalid_argument("orientation missing edge");
    return h.end == 0 ? it->second.first : it->second.second;
}

void Orientation::set(int edge, int t0, int t1) { tau[edge] = {t0, t1}; }

Orientation canonical_orientation(const SignedGraph& g) {
    Orientation tau;
    for (const auto& [id, ed] : g.edges()) tau.set(id, 1, -ed.sign);
    return tau;
}

void check_orientation(const SignedGraph& g, const Orientation& tau) {
    for (const auto& [id, ed] : g.edges()) {
        auto it = tau.tau.find(id);
        if (it == tau.tau.end()) throw std::invalid_argument("orientation missing edge");
        auto [t0, t1] = it->second;
        if ((t0 != 1 && t0 != -1) || (t1 != 1 && t1 != -1))
            throw std::invalid_argument("orientation values must be +-1");
        if (t0 * t1 != -ed.sign)
            throw std::invalid_argument("orientation violates tau1*tau2 = -sign");
    }
}

int FlowAssignment::at(int edge) const {
    auto it = value.find(edge);
    if (it == value.end()) throw std::invalid_argument("flow missing edge value");
    return it->second;
}

std::string FlowSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case FlowKind::Modulo: os << "modulo " << k; break;
        case FlowKind::Integer: os << "integer " << k; break;
        case FlowKind::CircularModulo: os << "circular modulo " << k << "/" << d; break;
        case FlowKind::CircularInteger: os << "circular integer " << k << "/" << d; break;
    }
    if (nowhere_zero && !is_circular()) os << " nowhere-zero";
    return os.str();
}

int sym_mod(long long x, int k) {
    long long r = x % k;
    if (r < 0) r += k;
    if (r >= (k + 1) / 2) r -= k;
    return static_cast<int>(r);
}

int boundary(const SignedGraph& g, const FlowAssignment& fa, int v) {
    return boundary_excluding(g, fa, v, {});
}

int boundary_excluding(const SignedGraph& g, const FlowAssignment& fa, int v,
                       const std::set<int>& skip) {
    int sum = 0;
    for (const HalfEdge& h : g.half_edges_at(v)) {
        if (skip.count(h.edge)) continue;
        sum += fa.at(h.edge) * fa.orientation.at(h);
    }
    return sum;
}

std::string VerifyReport::message() const {
    if (pass) return "pass";
    std::ostringstream os;
    os << "fail:";
    if (!bad_boundary_vertices.empty()) {
        os << " boundary at";
        for (int v : bad_boundary_vertices) os << " v" << v;
    }
    if (!bad_range_edges.empty()) {
        os << " range at";
        for (int e : bad_range_edges) os << " e" << e;
    }
    if (!zero_edges.empty()) {
        os << " zero at";
        for (int e : zero_edges) os << " e" << e;
    }
    return os.str();
}

VerifyReport verify(const SignedGraph& g, const FlowAssignment& fa, const FlowSpec& spec) {
    if (spec.k < 2) throw std::invalid_argument("flow spec needs k >= 2");
    if (spec.is_circular() && (spec.d < 1 || 2 * spec.d > spec.k))
        throw std::invalid_argument("circular spec needs 1 <= d and 2d <= k");
    check_orientation(g, fa.orientation);
    VerifyReport rep;
    rep.pass = true;
    for (const auto& [id, ed] : g.edges()) {
        int f = fa.at(id);
        int lo = spec.is_circular() ? spec.d : 0;
        int hi = spec.is_circular() ? spec.k - spec.d : spec.k - 1;
        int a = std::abs(f);
        if (a < lo || a > hi) {
            rep.bad_range_edges.push_back(id);
            rep.pass = false;
        }
        if (spec.nowhere_zero && f == 0) {
            rep.zero_edges.push_back(id);
            rep.pass = false;
        }
    }
    for (int v : g.vertices()) {
        int b = boundary(g, fa, v);
        int residue = spec.is_modular() ? sym_mod(b, spec.k) : b;
        rep.vertex_residues[v] = residue;
        if (residue != 0) {
            rep.bad_boundary_vertices.push_back(v);
            rep.pass = false;
        }
    }
    return rep;
}

std::set<int> support(const FlowAssignment& fa) {
    std::set<int> s;
    for (const auto& [id, f] : fa.value)
        if (f != 0) s.insert(id);
    return s;
}

bool is_modulo_orientation(const SignedGraph& g, const Orientation& tau, int p) {
    check_orientation(g, tau);
    int mod = 2 * p + 1;
    for (int v : g.vertices()) {
        int sum = 0;
        for (const HalfEdge& h : g.half_edges_at(v)) sum += tau.at(h);
        if (sym_mod(sum, mod) != 0) return false;
    }
    return true;
}

FlowAssignment orientation_to_circular_flow(const SignedGraph& g, const Orientation& tau,
                                            int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (!is_modulo_orientation(g, tau, p))
        throw std::invalid_argument("not a modulo (2p+1)-orientation");
    FlowAssignment fa;
    fa.orientation = tau;
    for (const auto& [id, ed] : g.edges()) fa.value[id] = p;
    return fa;
}

Orientation circular_flow_to_orientation(const SignedGraph& g, const FlowAssignment& fa,
                                         int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    int mod = 2 * p + 1;
    VerifyReport rep = verify(g, fa, FlowSpec::circular_modulo(mod, p));
    if (!rep.pass)
        throw std::invalid_argument("input is not a circular modulo (2p+1)/p flow: " +
                                    rep.message());
    Orientation out = fa.orientation;
    for (const auto& [id, ed] : g.edges()) {
        int r = sym_mod(-2LL * fa.at(id), mod);
        if (r != 1 && r != -1) throw std::logic_error("scaled residue must be +-1");
        if (r == -1) {
            auto& [t0, t1] = out.tau[id];
            t0 = -t0;
            t1 = -t1;
        }
    }
    return out;
}

std::pair<SignedGraph, FlowAssignment> flow_switch(const SignedGraph& g,
                                                   const FlowAssignment& fa, int v) {
    auto [g2, rec] = g.switched(v);
    FlowAssignment out = fa;
    for (const auto& [id, ed] : g.edges()) {
        auto& [t0, t1] = out.orientation.tau[id];
        if (ed.u == v) t0 = -t0;
        if (ed.w == v) t1 = -t1;
    }
    return {g2, out};
}

}  // namespace sgf
