#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sgf/factor.hpp"
#include "sgf/generate.hpp"
#include "sgf/oracle.hpp"
#include "support/enumerate.hpp"

using namespace sgf;

namespace {

std::map<int, int> uniform_demand(const SignedGraph& g, int f) {
    std::map<int, int> d;
    for (int v : g.vertices()) d[v] = f;
    return d;
}

}  // namespace

TEST_CASE("tutte condition") {
    SignedGraph tri = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    TutteResult t = tutte_condition(tri, uniform_demand(tri, 1));
    CHECK(!t.holds);
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->s.empty());
    CHECK(t.witness->t.empty());

    SignedGraph e = SignedGraph::build(2, {{0, 1, 1}});
    CHECK(tutte_condition(e, uniform_demand(e, 1)).holds);

    SignedGraph k4 = SignedGraph::build(
        4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(tutte_condition(k4, uniform_demand(k4, 1)).holds);
}

TEST_CASE("find_f_factor basics") {
    SignedGraph c4 = SignedGraph::build(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    auto whole = find_f_factor(c4, uniform_demand(c4, 2));
    REQUIRE(whole.has_value());
    CHECK(whole->edges.size() == 4);

    auto pm = find_f_factor(c4, uniform_demand(c4, 1));
    REQUIRE(pm.has_value());
    CHECK(pm->edges.size() == 2);
    CHECK((pm->edges == std::set<int>{1, 3} || pm->edges == std::set<int>{2, 4}));

    SignedGraph k4 = SignedGraph::build(
        4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    auto k4pm = find_f_factor(k4, uniform_demand(k4, 1));
    REQUIRE(k4pm.has_value());
    CHECK(k4pm->edges.size() == 2);

    SignedGraph tri = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(!find_f_factor(tri, uniform_demand(tri, 1)).has_value());
}

TEST_CASE("find_f_factor on parallels and loops") {
    SignedGraph bond = SignedGraph::build(2, {{0, 1, 1}, {0, 1, -1}, {0, 1, 1}});
    auto one = find_f_factor(bond, uniform_demand(bond, 1));
    REQUIRE(one.has_value());
    CHECK(one->edges.size() == 1);

    // loop demands two at its vertex
    SignedGraph loopy = SignedGraph::build(2, {{0, 0, 1}, {0, 1, 1}, {0, 1, 1}});
    std::map<int, int> dem{{0, 2}, {1, 0}};
    auto lf = find_f_factor(loopy, dem);
    REQUIRE(lf.has_value());
    CHECK(lf->edges == std::set<int>{1});
    std::map<int, int> dem2{{0, 3}, {1, 1}};
    auto lf2 = find_f_factor(loopy, dem2);
    REQUIRE(lf2.has_value());
    CHECK(lf2->degree.at(0) == 3);
}

TEST_CASE("finder, criterion and brute force agree on small graphs") {
    test::EnumOptions opt;
    opt.max_vertices = 4;
    opt.max_edges = 6;
    int graphs = 0, instances = 0;
    test::for_each_multigraph(opt, [&](const SignedGraph& g) {
        ++graphs;
        std::vector<int> verts(g.vertices().begin(), g.vertices().end());
        std::vector<int> caps;
        for (int v : verts) caps.push_back(std::min(g.degree(v), 3));
        if (*std::min_element(caps.begin(), caps.end()) < 1) return true;
        std::vector<int> dem(verts.size(), 1);
        while (true) {
            std::map<int, int> fdem;
            bool feasible = true;
            for (size_t i = 0; i < verts.size(); ++i) {
                fdem[verts[i]] = dem[i];
                if (dem[i] > g.degree(verts[i])) feasible = false;
            }
            if (feasible) {
                ++instances;
                auto found = find_f_factor(g, fdem);
                auto brute = oracle::brute_f_factor(g, fdem);
                CHECK(found.has_value() == brute.has_value());
                CHECK(found.has_value() == tutte_condition(g, fdem).holds);
                if (found)
                    for (int v : verts) CHECK(found->degree.at(v) == fdem.at(v));
            }
            size_t i = 0;
            while (i < dem.size() && dem[i] == caps[i]) dem[i++] = 1;
            if (i == dem.size()) break;
            dem[i] += 1;
        }
        return graphs < 40;
    });
    CHECK(instances > 200);
}

TEST_CASE("max_matching agrees with brute force") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::vector<int>> adj(n);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w)
                if (rng() % 100 < 45) {
                    adj[u].push_back(w);
                    adj[w].push_back(u);
                    pairs.push_back({u, w});
                }
        auto match = max_matching(n, adj);
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (match[v] >= 0) ++size;
        size /= 2;
        // brute force maximum matching
        int best = 0;
        int m = static_cast<int>(pairs.size());
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            std::vector<bool> used(n, false);
            bool ok = true;
            int cnt = 0;
            for (int i = 0; i < m && ok; ++i)
                if ((mask >> i) & 1u) {
                    auto [a, b] = pairs[i];
                    if (used[a] || used[b]) ok = false;
                    used[a] = used[b] = true;
                    ++cnt;
                }
            if (ok) best = std::max(best, cnt);
        }
        CHECK(size == best);
    }
}

TEST_CASE("petersen 2-factorization") {
    SignedGraph c5 =
        SignedGraph::build(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
    auto f1 = petersen_2_factorization(c5);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].edges.size() == 5);

    std::vector<std::tuple<int, int, int>> k5e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5e.push_back({i, j, 1});
    SignedGraph k5 = SignedGraph::build(5, k5e);
    auto f2 = petersen_2_factorization(k5);
    REQUIRE(f2.size() == 2);
    std::set<int> seen;
    for (const auto& f : f2) {
        for (int v : k5.vertices()) CHECK(f.degree.at(v) == 2);
        for (int e : f.edges) CHECK(seen.insert(e).second);
    }
    CHECK(seen.size() == 10);

    // two parallel digons: a 4-regular two-vertex multigraph
    SignedGraph dd = SignedGraph::build(2, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}});
    auto f3 = petersen_2_factorization(dd);
    REQUIRE(f3.size() == 2);
    for (const auto& f : f3) CHECK(f.edges.size() == 2);

    SignedGraph odd = SignedGraph::build(2, {{0, 1, 1}});
    CHECK_THROWS_AS(petersen_2_factorization(odd), std::invalid_argument);
}

TEST_CASE("petersen partitions every 2p-regular multigraph") {
    for (int p : {1, 2}) {
        int count = 0;
        for (int n = 1; n <= 4; ++n) {
            test::for_each_regular_multigraph(n, 2 * p, true, [&](const SignedGraph& g) {
                if (!g.connected()) return true;
                auto fs = petersen_2_factorization(g);
                CHECK(static_cast<int>(fs.size()) == p);
                std::set<int> all;
                for (const auto& f : fs) {
                    for (int v : g.vertices()) CHECK(f.degree.at(v) == 2);
                    all.insert(f.edges.begin(), f.edges.end());
                }
                CHECK(static_cast<int>(all.size()) == g.edge_count());
                return ++count < 200;
            });
        }
        CHECK(count > 3);
    }
}

TEST_CASE("p_mu_factor") {
    SignedGraph k4 = SignedGraph::build(
        4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    FactorSubgraph pm = p_mu_factor(k4, 1, uniform_demand(k4, 1));
    for (int v : k4.vertices()) CHECK(pm.degree.at(v) == 1);

    SignedGraph k55 = gen::generate("k55", 0).graph;
    FactorSubgraph tf = p_mu_factor(k55, 2, uniform_demand(k55, 1));
    for (int v : k55.vertices()) CHECK(tf.degree.at(v) == 2);

    // all degrees 6 with mu = 2, p = 1: a spanning 2-regular-by-demand piece
    SignedGraph six = SignedGraph::build(3, {{0, 1, 1},
                                             {0, 1, 1},
                                             {0, 1, 1},
                                             {0, 2, 1},
                                             {0, 2, 1},
                                             {0, 2, 1},
                                             {1, 2, 1},
                                             {1, 2, 1},
                                             {1, 2, 1}});
    FactorSubgraph f6 = p_mu_factor(six, 1, uniform_demand(six, 2));
    for (int v : six.vertices()) CHECK(f6.degree.at(v) == 2);

    SignedGraph loopy = SignedGraph::build(1, {{0, 0, 1}});
    CHECK_THROWS_AS(p_mu_factor(loopy, 1, uniform_demand(loopy, 1)),
                    std::invalid_argument);
}

TEST_CASE("cubic 3-edge-connected graphs always have a perfect matching") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SignedGraph g = gen::generate("random-bridgeless-cubic:6", seed).graph;
        auto conn = g.odd_edge_connectivity();
        if (conn && *conn < 3) continue;
        auto pm = find_f_factor(g, uniform_demand(g, 1));
        CHECK(pm.has_value());
    }
}
