#ifndef SGF_FACTOR_HPP
#define SGF_FACTOR_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sgf/signed_graph.hpp"

namespace sgf {

struct FactorSubgraph {
    std::set<int> edges;
    std::map<int, int> degree;  // loops count 2

    static FactorSubgraph of(const SignedGraph& g, const std::set<int>& edges);
    bool operator==(const FactorSubgraph&) const = default;
};

struct TutteWitness {
    std::set<int> s;
    std::set<int> t;
};

struct TutteResult {
    bool holds = false;
    std::optional<TutteWitness> witness;  // a violating pair when !holds
};

// Exhaustive check of the f-factor criterion over all disjoint (S, T) pairs.
// |V| must be <= limit.
TutteResult tutte_condition(const SignedGraph& g, const std::map<int, int>& fdem,
                            int limit = 12);

// Finds a spanning subgraph with d_F(v) = fdem(v) exactly, via reduction to
// perfect matching (per-half-edge stubs plus filler vertices), or nullopt.
std::optional<FactorSubgraph> find_f_factor(const SignedGraph& g,
                                            const std::map<int, int>& fdem);

// Splits a 2p-regular multigraph into p edge-disjoint spanning 2-regular
// subgraphs: Euler orientation per component, out/in vertex doubling into a
// p-regular bipartite multigraph, then repeated perfect matching extraction.
std::vector<FactorSubgraph> petersen_2_factorization(const SignedGraph& g);

// For a loop-free graph with odd-edge-connectivity >= 2p+1 and
// d(v) = (2p+1) * mu(v), returns a spanning subgraph with d_F(v) = p * mu(v).
FactorSubgraph p_mu_factor(const SignedGraph& g, int p, const std::map<int, int>& mu);

// Maximum matching on a simple undirected graph given as an adjacency list
// (augmenting paths with blossom contraction).  Returns mate per vertex, -1
// if unmatched.
std::vector<int> max_matching(int n, const std::vector<std::vector<int>>& adj);

}  // namespace sgf

#endif
