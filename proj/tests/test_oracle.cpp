#include <doctest.h>

#include <random>

#include "nic/error.hpp"
#include "nic/generate.hpp"
#include "nic/oracle.hpp"
#include "nic/recognize.hpp"
#include "support.hpp"

using namespace nic;

TEST_CASE("optimal graph on twelve vertices has one kite set") {
    Graph g = gen_optimal(2).graph;
    OracleOptions opts;
    opts.optimal = true;
    auto res = oracle_maximal_nic(g, opts);
    CHECK(res.decision);
    REQUIRE(res.kite_sets.size() == 1);
    CHECK(res.kite_sets[0] == recognize_optimal(g).kite_set);

    opts.prune = false;
    auto full = oracle_maximal_nic(g, opts);
    CHECK(full.kite_sets == res.kite_sets);
    CHECK(full.candidates >= res.candidates);
}

TEST_CASE("K5 has no optimal kite set") {
    OracleOptions opts;
    opts.optimal = true;
    CHECK_FALSE(oracle_maximal_nic(support::complete_graph(5), opts).decision);
    opts.prune = false;
    CHECK(oracle_maximal_nic(support::complete_graph(5), opts).kite_sets.empty());
}

TEST_CASE("K4 has the planar and the kite outcome") {
    auto res = oracle_maximal_nic(support::complete_graph(4));
    REQUIRE(res.kite_sets.size() == 2);
    CHECK(res.kite_sets[0].empty());
    CHECK(res.kite_sets[1] == KiteSet{{0, 1, 2, 3}});
}

TEST_CASE("limit is enforced") {
    try {
        oracle_maximal_nic(gen_optimal(3).graph);
        FAIL("expected LimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LimitExceeded);
    }
    OracleOptions wide;
    wide.limit = 20;
    wide.optimal = true;
    CHECK(oracle_maximal_nic(gen_optimal(3).graph, wide).kite_sets.size() == 1);
}

TEST_CASE("oracle and recognizer agree on small dense graphs") {
    std::mt19937 rng(31);
    OracleOptions opts;
    opts.optimal = true;
    for (int t = 0; t < 100; ++t) {
        Graph g = support::random_graph(7, 18, rng);
        CHECK(oracle_maximal_nic(g, opts).decision == recognize_optimal(g).accepted);
    }
}

TEST_CASE("oracle and recognizer agree on rewired optimal graphs") {
    Graph g = gen_optimal(2).graph;
    std::mt19937 rng(12);
    OracleOptions opts;
    opts.optimal = true;
    std::vector<Edge> non_edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    for (int t = 0; t < 40; ++t) {
        auto edges = g.edges();
        edges[rng() % edges.size()] = non_edges[rng() % non_edges.size()];
        Graph mutant = new_graph(g.n(), edges);
        auto r = recognize_optimal(mutant);
        CHECK(oracle_maximal_nic(mutant, opts).decision == r.accepted);
        if (!r.accepted)
            CHECK((r.reason == RejectReason::KiteCoverViolation || r.reason == RejectReason::NonplanarStarGraph ||
                   r.reason == RejectReason::StructurallyInvalid));
    }
}
