#include <doctest.h>

#include <random>

#include "nic/graph.hpp"
#include "nic/planarity.hpp"
#include "support.hpp"

using namespace nic;

namespace {

// Every rotation must list exactly the neighbors and give a sphere per component.
void check_rotation(const Graph& g, const Rotation& rot) {
    REQUIRE(static_cast<int>(rot.size()) == g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto sorted = rot[v];
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == g.neighbors(v));
    }
    if (is_connected(g) && g.m() > 0) CHECK(count_faces(g, rot) == 2 - g.n() + g.m());
}

}  // namespace

TEST_CASE("Kuratowski graphs are nonplanar") {
    CHECK_FALSE(test_planarity(support::complete_graph(5)).planar);
    std::vector<Edge> k33;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.push_back({a, b});
    CHECK_FALSE(test_planarity(new_graph(6, k33)).planar);
    auto r = test_planarity(support::complete_graph(4));
    CHECK(r.planar);
    check_rotation(support::complete_graph(4), r.rotation);
}

TEST_CASE("planarity agrees with the minor oracle on small random graphs") {
    std::mt19937 rng(2024);
    int planar_seen = 0, nonplanar_seen = 0;
    for (int t = 0; t < 600; ++t) {
        int n = 5 + static_cast<int>(rng() % 4);  // 5..8
        int maxm = std::min(n * (n - 1) / 2, 3 * n - 6 + 2);
        int m = n - 1 + static_cast<int>(rng() % (maxm - n + 2));
        Graph g = support::random_graph(n, m, rng);
        auto r = test_planarity(g);
        bool ref = support::brute_force_planar(g);
        CHECK(r.planar == ref);
        if (r.planar) {
            check_rotation(g, r.rotation);
            ++planar_seen;
        } else {
            CHECK(r.rotation.empty());
            ++nonplanar_seen;
        }
    }
    CHECK(planar_seen > 50);
    CHECK(nonplanar_seen > 50);
}

TEST_CASE("random triangulations are planar with 2n-4 faces") {
    std::mt19937 rng(3);
    for (int n : {4, 5, 10, 30, 50, 200}) {
        Graph g = support::random_triangulation(n, rng);
        CHECK(g.m() == 3 * n - 6);
        auto r = test_planarity(g);
        REQUIRE(r.planar);
        check_rotation(g, r.rotation);
        CHECK(count_faces(g, r.rotation) == 2 * n - 4);
    }
}

TEST_CASE("disconnected and trivial graphs") {
    auto r = test_planarity(new_graph(0, {}));
    CHECK(r.planar);
    r = test_planarity(new_graph(6, {{0, 1}, {3, 4}, {4, 5}, {3, 5}}));
    CHECK(r.planar);
    check_rotation(new_graph(6, {{0, 1}, {3, 4}, {4, 5}, {3, 5}}), r.rotation);
}

TEST_CASE("rotation index positions") {
    Rotation rot = {{1, 2, 3}, {0}, {3, 0}, {0, 2}};
    RotationIndex idx(rot);
    CHECK(idx.position(0, 3) == 2);
    CHECK(idx.position(2, 0) == 1);
    CHECK(idx.position(1, 2) == -1);
    CHECK(idx.half_edge_count() == 8);
    CHECK(idx.half_edge(2, 1) == 5);
}
