#ifndef SGF_CIRCULAR_HPP
#define SGF_CIRCULAR_HPP

#include <vector>

#include "sgf/flow.hpp"
#include "sgf/signed_graph.hpp"
#include "sgf/split.hpp"

namespace sgf {

// Symmetric product of the outgoing and incoming half-edges at a mixed
// vertex, minus same-loop pairs.  Always sequentially connected.
PairSet mixed_vertex_pairs(const SignedGraph& g, const Orientation& tau, int v);

struct CircularDiagnostics {
    // graph after each split (before the suppression), then after the
    // suppression; used to re-audit odd-edge-connectivity externally
    std::vector<SignedGraph> stages;
    int splits = 0;
    int stripped_loops = 0;
};

// Turns a modulo (2p+1)-orientation of an odd-(2p+1)-edge-connected graph
// into an integer flow with p <= |f| <= p+1 and zero boundaries:
// mixed vertices are split (odd-connectivity preserved) and suppressed
// until every vertex is uniform, a p*mu(v)-degree spanning subgraph F is
// extracted, f = p off F and -(p+1) on F, and the values are lifted back
// through the rewrites.  Positive loops are stripped and restored with p;
// negative loops are rejected.
FlowAssignment integer_circular_from_orientation(const SignedGraph& g,
                                                 const Orientation& tau, int p,
                                                 CircularDiagnostics* diag = nullptr);

}  // namespace sgf

#endif
