#include <doctest.h>

#include <random>
#include <set>

#include "nic/generate.hpp"
#include "nic/k4.hpp"
#include "support.hpp"

using namespace nic;

namespace {

std::vector<K4> ref_list(const Graph& g) {
    auto raw = support::brute_force_k4_ref(g);
    return {raw.begin(), raw.end()};
}

void check_buckets(const Graph& g, const K4Catalog& cat) {
    REQUIRE(static_cast<int>(cat.buckets.size()) == g.m());
    for (int id = 0; id < g.m(); ++id) {
        auto [u, v] = g.edges()[id];
        std::vector<int> expect;
        for (size_t i = 0; i < cat.k4s.size(); ++i) {
            const auto& q = cat.k4s[i];
            if (std::count(q.begin(), q.end(), u) && std::count(q.begin(), q.end(), v)) expect.push_back(static_cast<int>(i));
        }
        auto got = cat.buckets[id];
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }
}

}  // namespace

TEST_CASE("complete graphs") {
    auto r4 = list_k4(support::complete_graph(4), 1 << 20);
    CHECK_FALSE(r4.timed_out);
    CHECK(r4.catalog.k4s.size() == 1);
    for (const auto& b : r4.catalog.buckets) CHECK(b.size() == 1);
    auto r5 = list_k4(support::complete_graph(5), 1 << 20);
    CHECK(r5.catalog.k4s.size() == 5);
    for (const auto& b : r5.catalog.buckets) CHECK(b.size() == 3);
    auto r6 = list_k4(support::complete_graph(6), 1 << 20);
    CHECK(r6.catalog.k4s.size() == 15);
    for (const auto& b : r6.catalog.buckets) CHECK(b.size() == 6);
}

TEST_CASE("listing equals brute force on random graphs") {
    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
        int n = 4 + static_cast<int>(rng() % 9);  // 4..12
        Graph g = support::random_graph(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
        auto r = list_k4(g, 1LL << 40);
        REQUIRE_FALSE(r.timed_out);
        CHECK(r.catalog.k4s == ref_list(g));
        CHECK(brute_force_k4(g) == ref_list(g));
        check_buckets(g, r.catalog);
        CHECK(bucket_by_edge(r.catalog.k4s, g) == r.catalog.buckets);
    }
}

TEST_CASE("generated fixtures stay within the step budget") {
    std::vector<Graph> fixtures;
    for (int k = 1; k <= 6; ++k) fixtures.push_back(gen_sparsest(k).graph);
    for (int k = 2; k <= 6; ++k) fixtures.push_back(gen_optimal(k).graph);
    fixtures.push_back(gen_nested_k5(3).graph);
    fixtures.push_back(gen_flip_fixture().graph);
    for (const auto& g : fixtures) {
        auto r = list_k4(g, 256LL * g.n());
        REQUIRE_FALSE(r.timed_out);
        CHECK(r.steps <= 256LL * g.n());
        CHECK(r.catalog.k4s.size() <= 27u * g.n());
        if (g.n() <= 40) CHECK(r.catalog.k4s == ref_list(g));
    }
}

TEST_CASE("step cap boundary is exact") {
    Graph g = gen_optimal(3).graph;
    auto full = list_k4(g, 1LL << 40);
    REQUIRE_FALSE(full.timed_out);
    auto at = list_k4(g, full.steps);
    CHECK_FALSE(at.timed_out);
    CHECK(at.catalog.k4s == full.catalog.k4s);
    auto below = list_k4(g, full.steps - 1);
    CHECK(below.timed_out);
    CHECK(below.catalog.k4s.empty());
}

TEST_CASE("dense complete graphs exceed the 256n budget") {
    // Smallest t for which K_t needs more than 256 t steps; measured and frozen.
    constexpr int kFirstTimeout = 19;
    for (int t = 4; t <= kFirstTimeout; ++t) {
        auto r = list_k4(support::complete_graph(t), 256LL * t);
        CHECK(r.timed_out == (t == kFirstTimeout));
    }
}
