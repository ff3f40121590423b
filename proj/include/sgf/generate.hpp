#ifndef SGF_GENERATE_HPP
#define SGF_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "sgf/flow.hpp"
#include "sgf/signed_graph.hpp"

namespace sgf::gen {

struct Generated {
    SignedGraph graph;
    std::optional<FlowAssignment> flow;  // only some families ship one
};

// Deterministic instance families.  Known names:
//   fig1                         three negative-digon gadgets on a hub
//   negloops:N                   one vertex with N negative loops
//   k33, k55                     all-positive complete bipartite
//   bowtie                       two triangles sharing a vertex
//   two-triangles-bridge         two triangles joined by one edge
//   random:n,m,negprob           uniform multigraph, loops allowed
//   random-eulerian[:n,m,negprob]  random graph patched to even degrees
//   random-bridgeless-cubic[:n]  cubic configuration model, filtered
Generated generate(const std::string& family, std::uint64_t seed);

}  // namespace sgf::gen

#endif
