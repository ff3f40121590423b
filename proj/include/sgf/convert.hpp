#ifndef SGF_CONVERT_HPP
#define SGF_CONVERT_HPP

#include "sgf/flow.hpp"
#include "sgf/signed_graph.hpp"

namespace sgf::convert {

// Modulo 2-flow whose support has an even number of negative edges per
// component -> integer 2-flow with identical support.  Per component, a
// closed Euler trail is walked carrying a direction state that flips on
// negative edges; the even negative count closes the trail consistently.
FlowAssignment int2_from_mod2(const SignedGraph& g, const FlowAssignment& f1);

// Connected graph, modulo 2-flow with an even total number of negative
// support edges -> integer 3-flow whose +-1 edges are exactly the support.
// Recursion on bridges outside the support; an odd-odd parity split is
// repaired with negative-loop gadgets and a +-2 value on the bridge.
FlowAssignment int3_from_mod2(const SignedGraph& g, const FlowAssignment& f1);

// Modulo 3-flow with bridgeless support -> integer 3-flow with the same
// support, by per-edge binary residue lifts {r, r-3} under boundary
// pruning.  Success is guaranteed; exhaustion is an internal error.
FlowAssignment int3_from_mod3(const SignedGraph& g, const FlowAssignment& f1,
                              int gate = 24);

struct Int4Diagnostics {
    int structural_steps = 0;
    int restarts = 0;
    int fallback_components = 0;
};

// Bridgeless graph, modulo 3-flow -> integer 4-flow whose {+-1,+-2} edges
// cover the support; other edges carry 0 or +-3.  Follows the
// split/suppress/contract recursion with the (|supp^c|, sum|d-3|)
// potential; rare loop-heavy corners fall back to a bounded exhaustive
// search over the same restricted value shape.
FlowAssignment int4_from_mod3(const SignedGraph& g, const FlowAssignment& f1,
                              Int4Diagnostics* diag = nullptr, int gate = 24);

// Modulo k-flow -> integer 2k-flow with support containment, by bounded
// backtracking over per-edge lifts f2 = f1 (mod k), |f2| <= 2k-1.
FlowAssignment double_flow_search(const SignedGraph& g, const FlowAssignment& f1, int k,
                                  int gate = 24);

}  // namespace sgf::convert

#endif
