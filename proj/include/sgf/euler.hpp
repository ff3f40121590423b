#ifndef SGF_EULER_HPP
#define SGF_EULER_HPP

#include <set>
#include <vector>

#include "sgf/signed_graph.hpp"

namespace sgf {

// One step of a closed trail: the edge is traversed from
// endpoint(1 - in_end) to endpoint(in_end).
struct Traversal {
    int edge = 0;
    int in_end = 0;
};

// Closed Euler trail over the given edge subset, which must induce a
// connected even-degree subgraph.  Starts at the smallest touched vertex;
// edges are taken smallest id first.
std::vector<Traversal> euler_circuit(const SignedGraph& g, const std::set<int>& edges);

}  // namespace sgf

#endif
