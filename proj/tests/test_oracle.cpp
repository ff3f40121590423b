#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sgf/generate.hpp"
#include "sgf/oracle.hpp"
#include "support/enumerate.hpp"

using namespace sgf;

TEST_CASE("search_flow basics") {
    SignedGraph c3 = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    auto fa = oracle::search_flow(c3, FlowSpec::integer(2, true));
    REQUIRE(fa.has_value());
    CHECK(verify(c3, *fa, FlowSpec::integer(2, true)).pass);
    for (const auto& [id, v] : fa->value) CHECK(std::abs(v) == 1);

    // no nowhere-zero integer 2-flow on a triangle with one negative edge
    SignedGraph bad = SignedGraph::build(3, {{0, 1, -1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(!oracle::search_flow(bad, FlowSpec::integer(2, true)).has_value());

    SignedGraph big = gen::generate("random:8,24,0.2", 5).graph;
    CHECK_THROWS_AS(oracle::search_flow(big, FlowSpec::integer(2), {}, 20),
                    std::invalid_argument);
}

TEST_CASE("search_flow respects constraints") {
    SignedGraph c3 = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    oracle::EdgeConstraints cons;
    cons[2] = {0};
    auto fa = oracle::search_flow(c3, FlowSpec::integer(3), cons);
    REQUIRE(fa.has_value());
    CHECK(fa->at(2) == 0);
}

TEST_CASE("search_orientation") {
    SignedGraph k33 = gen::generate("k33", 0).graph;
    CHECK(oracle::search_orientation(k33, 1).has_value());

    SignedGraph k4 = SignedGraph::build(
        4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(!oracle::search_orientation(k4, 1).has_value());

    SignedGraph empty = SignedGraph::build(0, {});
    CHECK(oracle::search_orientation(empty, 1).has_value());
}

TEST_CASE("min odd cut") {
    SignedGraph k4 = SignedGraph::build(
        4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    auto cut = oracle::min_odd_cut(k4);
    REQUIRE(cut.has_value());
    CHECK(cut->size == 3);
    CHECK(cut->side.size() == 1);

    SignedGraph c4 = SignedGraph::build(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK(!oracle::min_odd_cut(c4).has_value());

    SignedGraph ttb = gen::generate("two-triangles-bridge", 0).graph;
    auto bcut = oracle::min_odd_cut(ttb);
    REQUIRE(bcut.has_value());
    CHECK(bcut->size == 1);
}

TEST_CASE("min odd cut agrees with odd_edge_connectivity") {
    test::EnumOptions opt;
    opt.max_vertices = 4;
    opt.max_edges = 6;
    int seen = 0;
    test::for_each_multigraph(opt, [&](const SignedGraph& g) {
        auto a = g.odd_edge_connectivity();
        auto b = oracle::min_odd_cut(g);
        CHECK(a.has_value() == b.has_value());
        if (a && b) CHECK(*a == b->size);
        return ++seen < 4000;
    });
    CHECK(seen > 100);
}

TEST_CASE("brute f-factor") {
    SignedGraph tri = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    std::map<int, int> ones{{0, 1}, {1, 1}, {2, 1}};
    CHECK(!oracle::brute_f_factor(tri, ones).has_value());

    SignedGraph c4 = SignedGraph::build(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    std::map<int, int> m1{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    auto pm = oracle::brute_f_factor(c4, m1);
    REQUIRE(pm.has_value());
    CHECK(pm->edges.size() == 2);

    std::map<int, int> m2{{0, 2}, {1, 2}, {2, 2}, {3, 2}};
    auto full = oracle::brute_f_factor(c4, m2);
    REQUIRE(full.has_value());
    CHECK(full->edges.size() == 4);
}

TEST_CASE("modulo search succeeds whenever integer search does") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        SignedGraph g = test::random_multigraph(rng, 4, 5, 0.4, true);
        for (int k : {2, 3}) {
            if (oracle::search_flow(g, FlowSpec::integer(k, true)))
                CHECK(oracle::search_flow(g, FlowSpec::modulo(k, true)).has_value());
        }
    }
}

TEST_CASE("oracle first solution is deterministic") {
    SignedGraph g = gen::generate("random:5,7,0.4", 9).graph;
    auto a = oracle::search_flow(g, FlowSpec::modulo(3));
    auto b = oracle::search_flow(g, FlowSpec::modulo(3));
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->value == b->value);
}
