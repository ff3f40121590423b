#ifndef SGF_FLOW_HPP
#define SGF_FLOW_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sgf/signed_graph.hpp"

namespace sgf {

// Bidirected orientation: tau(h) = +1 means the half-edge is directed away
// from its endpoint.  Compatibility law: tau(h1) * tau(h2) = -sign(e), so a
// positive edge has one half out and one half in, while a negative edge is
// extroverted (both out) or introverted (both in).
struct Orientation {
    std::map<int, std::pair<int, int>> tau;  // edge id -> (tau at end 0, end 1)

    int at(const HalfEdge& h) const;
    void set(int edge, int t0, int t1);
    bool operator==(const Orientation&) const = default;
};

// Canonical orientation: tau = +1 at end 0, forced at end 1 by the law.
Orientation canonical_orientation(const SignedGraph& g);
// Throws if some edge is missing or violates the compatibility law.
void check_orientation(const SignedGraph& g, const Orientation& tau);

struct FlowAssignment {
    Orientation orientation;
    std::map<int, int> value;  // edge id -> f(e)

    int at(int edge) const;
    bool operator==(const FlowAssignment&) const = default;
};

enum class FlowKind { Modulo, Integer, CircularModulo, CircularInteger };

struct FlowSpec {
    FlowKind kind = FlowKind::Integer;
    int k = 2;
    int d = 1;  // circular kinds only; requires 2d <= k
    bool nowhere_zero = false;

    bool is_circular() const {
        return kind == FlowKind::CircularModulo || kind == FlowKind::CircularInteger;
    }
    bool is_modular() const {
        return kind == FlowKind::Modulo || kind == FlowKind::CircularModulo;
    }
    static FlowSpec modulo(int k, bool nz = false) { return {FlowKind::Modulo, k, 1, nz}; }
    static FlowSpec integer(int k, bool nz = false) { return {FlowKind::Integer, k, 1, nz}; }
    static FlowSpec circular_modulo(int k, int d) { return {FlowKind::CircularModulo, k, d, true}; }
    static FlowSpec circular_integer(int k, int d) { return {FlowKind::CircularInteger, k, d, true}; }
    std::string describe() const;
};

struct VerifyReport {
    bool pass = false;
    // Exact boundaries for integer kinds, symmetric residues mod k otherwise.
    std::map<int, int> vertex_residues;
    std::vector<int> bad_boundary_vertices;
    std::vector<int> bad_range_edges;
    std::vector<int> zero_edges;  // offенders under nowhere-zero only
    std::string message() const;
};

// Residue of x in the symmetric range -floor(k/2) .. ceil(k/2)-1.
int sym_mod(long long x, int k);

// Signed sum of f over the half-edges at v; a loop contributes both halves.
int boundary(const SignedGraph& g, const FlowAssignment& fa, int v);

// Boundary at v ignoring a set of edges (used by converters mid-rewrite).
int boundary_excluding(const SignedGraph& g, const FlowAssignment& fa, int v,
                       const std::set<int>& skip);

VerifyReport verify(const SignedGraph& g, const FlowAssignment& fa, const FlowSpec& spec);

std::set<int> support(const FlowAssignment& fa);

// Modulo (2p+1)-orientation test: sum of tau over H(v) is 0 mod 2p+1 everywhere.
bool is_modulo_orientation(const SignedGraph& g, const Orientation& tau, int p);

// Assigns f = p to every edge of a modulo (2p+1)-orientation, producing a
// circular modulo (2p+1)/p flow.
FlowAssignment orientation_to_circular_flow(const SignedGraph& g, const Orientation& tau,
                                            int p);

// Scales a circular modulo (2p+1)/p flow by -2 (the inverse of p mod 2p+1),
// turning every edge residue into +-1, and flips the edges with residue -1.
Orientation circular_flow_to_orientation(const SignedGraph& g, const FlowAssignment& fa,
                                         int p);

// Switch at v combined with flipping tau on every half-edge at v.  Maps
// valid flows to valid flows; the boundary at v is negated.
std::pair<SignedGraph, FlowAssignment> flow_switch(const SignedGraph& g,
                                                   const FlowAssignment& fa, int v);

}  // namespace sgf

#endif
