#ifndef SGF_SPLIT_HPP
#define SGF_SPLIT_HPP

#include <set>
#include <utility>
#include <vector>

#include "sgf/signed_graph.hpp"

namespace sgf {

// Unordered half-edge pairs at one vertex; no pair may consist of the two
// halves of one loop.
struct PairSet {
    int vertex = 0;
    std::set<std::pair<HalfEdge, HalfEdge>> pairs;  // stored with first < second

    void add(HalfEdge a, HalfEdge b);
    static PairSet all_pairs(const SignedGraph& g, int v);
    static PairSet consecutive_pairs(const SignedGraph& g, int v);
};

// True iff the pair-graph on the vertex's half-edges is connected and
// covers all d of them (vacuously true for d <= 1).
bool sequentially_connected(const PairSet& s, int d);

struct SplitResult {
    SignedGraph graph;
    std::pair<HalfEdge, HalfEdge> pair;
    TraceRecord record;
};

// Splitting step for bridgeless graphs: picks a pair of non-loop edges at a
// degree >= 4 vertex whose split stays bridgeless (spanning two blocks when
// v is a cut vertex).  Candidates are verified in canonical order.
SplitResult fleischner_split(const SignedGraph& g, int v);

// Splits a pair from S away from v, keeping the minimum odd edge cut at
// least lambda_o.  Candidates verified in canonical order; exhaustion
// contradicts the guarantee and raises logic_error.
SplitResult odd_preserving_split(const SignedGraph& g, int v, const PairSet& s,
                                 int lambda_o);

struct BatchSplitResult {
    SignedGraph graph;
    int new_vertex = 0;
    TraceRecord record;
};

// Splits `a` half-edges away from v (a even, a <= d(v) - lambda_o) as a/2
// odd-connectivity-preserving pair splits whose pairs are then merged into
// one new vertex of degree a.
BatchSplitResult batch_split(const SignedGraph& g, int v, int a, int lambda_o);

}  // namespace sgf

#endif
