#ifndef SGF_ORACLE_HPP
#define SGF_ORACLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sgf/factor.hpp"
#include "sgf/flow.hpp"
#include "sgf/signed_graph.hpp"

namespace sgf::oracle {

// Search gate (max edge count for flow searches); SGF_SEARCH_GATE overrides.
int search_gate(int fallback = 20);

// Per-edge restriction: when present, only the listed values may be used
// (they are additionally filtered by the spec's range).
using EdgeConstraints = std::map<int, std::vector<int>>;

// Backtracking search with a fixed canonical orientation and signed values,
// edges in BFS order from the smallest vertex, values ascending by absolute
// value with positive first.  Returns the first satisfying assignment.
std::optional<FlowAssignment> search_flow(const SignedGraph& g, const FlowSpec& spec,
                                          const EdgeConstraints& constraints = {},
                                          int gate = -1);

// Enumerates satisfying assignments in canonical order until the callback
// returns false.  Used by exhaustive test drivers.
void for_each_flow(const SignedGraph& g, const FlowSpec& spec,
                   const std::function<bool(const FlowAssignment&)>& cb,
                   const EdgeConstraints& constraints = {}, int gate = -1);

// First modulo (2p+1)-orientation in canonical order, or nullopt after
// exhausting the search space.
std::optional<Orientation> search_orientation(const SignedGraph& g, int p, int gate = -1);

struct OddCut {
    int size = 0;
    std::vector<int> side;  // vertices of the witness side
};

// Minimum odd edge cut over all vertex bipartitions; nullopt if every cut
// is even.  |V| must be <= 16.
std::optional<OddCut> min_odd_cut(const SignedGraph& g);

// First edge subset matching the degree demands, by subset backtracking
// with degree pruning.  |E| must be <= gate.
std::optional<FactorSubgraph> brute_f_factor(const SignedGraph& g,
                                             const std::map<int, int>& fdem,
                                             int gate = -1);

}  // namespace sgf::oracle

#endif
