#ifndef SGF_TEST_ENUMERATE_HPP
#define SGF_TEST_ENUMERATE_HPP

#include <functional>
#include <random>

#include "sgf/signed_graph.hpp"

namespace sgf::test {

struct EnumOptions {
    int max_vertices = 5;
    int max_edges = 8;
    bool allow_loops = true;
    bool require_connected = false;
    // drop graphs with isolated vertices (those duplicate smaller classes)
    bool require_min_degree1 = true;
};

// All-positive multigraphs up to isomorphism, streamed in a deterministic
// order; the callback returns false to stop early.
void for_each_multigraph(const EnumOptions& opt,
                         const std::function<bool(const SignedGraph&)>& cb);

// All 2^m signatures of the underlying graph.
void for_each_signature(const SignedGraph& g,
                        const std::function<bool(const SignedGraph&)>& cb);

// Simple graphs up to isomorphism (no loops, no parallels).
void for_each_simple_graph(int max_vertices, int max_edges,
                           const std::function<bool(const SignedGraph&)>& cb);

// r-regular multigraphs on exactly n vertices up to isomorphism.
void for_each_regular_multigraph(int n, int r, bool allow_loops,
                                 const std::function<bool(const SignedGraph&)>& cb);

SignedGraph random_multigraph(std::mt19937_64& rng, int n, int m, double negprob,
                              bool allow_loops);

}  // namespace sgf::test

#endif
