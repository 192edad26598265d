#include "nic/generate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "nic/error.hpp"

namespace nic {

namespace {

struct Builder {
    int n = 0;
    std::set<Edge> edges;
    std::vector<Crossing> crossings;

    void edge(int u, int v) { edges.insert(make_edge(u, v)); }
    // Quadrangle p,q,r,s in cyclic order receives both diagonals, crossing.
    void kite(int p, int q, int r, int s) {
        edge(p, q), edge(q, r), edge(r, s), edge(s, p);
        edge(p, r), edge(q, s);
        crossings.push_back({make_edge(p, r), make_edge(q, s)});
    }
    Graph graph() const { return new_graph(n, std::vector<Edge>(edges.begin(), edges.end())); }
};

GeneratedInstance finish(std::string family, int k, int i, const Builder& b, int crossings_expected) {
    GeneratedInstance inst;
    inst.family = std::move(family);
    inst.k = k;
    inst.i = i;
    inst.graph = b.graph();
    inst.witness = embed_with_crossings(inst.graph, b.crossings);
    inst.expected_n = b.n;
    inst.expected_m = static_cast<int>(b.edges.size());
    inst.expected_crossings = crossings_expected;
    return inst;
}

// Ring of k sectors between poles N = 0 and S = 1; sector j owns
// a, b, c, d, e = 2 + 5j + {0..4}. Quadrangles (a,b,c,d), (N,b,e,a'), (S,c,e,d')
// with a', d' from sector j + 1 each carry a kite.
Builder optimal_ring(int k) {
    Builder b;
    b.n = 5 * k + 2;
    const int N = 0, S = 1;
    auto at = [k](int j, int t) { return 2 + 5 * (((j % k) + k) % k) + t; };
    for (int j = 0; j < k; ++j) {
        int a = at(j, 0), bb = at(j, 1), c = at(j, 2), d = at(j, 3), e = at(j, 4);
        int a1 = at(j + 1, 0), d1 = at(j + 1, 3);
        b.kite(a, bb, c, d);
        b.kite(N, bb, e, a1);
        b.kite(S, c, e, d1);
    }
    return b;
}

// Replaces the structure of the optimal ring on the region vertices
// {0..11, 12, 15} plus `extra` new vertices with a fixed patch. Patch vertex
// ids at or above base_first map to the new vertices 5k + 2, 5k + 3, ...
Builder ring_with_patch(int k, int extra, int base_first, const std::vector<Edge>& patch_edges,
                        const std::vector<Crossing>& patch_crossings) {
    Builder ring = optimal_ring(k);
    auto map = [&](int v) { return v >= base_first ? 5 * k + 2 + (v - base_first) : v; };
    std::set<int> region;
    for (int v = 0; v < 12; ++v) region.insert(v);
    region.insert(12), region.insert(15);
    for (int j = 0; j < extra; ++j) region.insert(5 * k + 2 + j);
    auto inside = [&](int v) { return region.count(v) > 0; };

    Builder b;
    b.n = 5 * k + 2 + extra;
    for (Edge e : ring.edges)
        if (!(inside(e.first) && inside(e.second))) b.edges.insert(e);
    for (const auto& c : ring.crossings)
        if (!(inside(c.e1.first) && inside(c.e1.second) && inside(c.e2.first) && inside(c.e2.second)))
            b.crossings.push_back(c);
    for (Edge e : patch_edges) b.edge(map(e.first), map(e.second));
    for (const auto& c : patch_crossings)
        b.crossings.push_back({make_edge(map(c.e1.first), map(c.e1.second)), make_edge(map(c.e2.first), map(c.e2.second))});
    return b;
}

// Patch adding two vertices to sectors 0 and 1 (ids 22, 23 in the k = 4 ring).
const std::vector<Edge> kPatch2Edges = {
    {0, 2}, {0, 3}, {0, 7}, {0, 8}, {0, 9}, {0, 12}, {0, 23}, {1, 5}, {1, 6}, {1, 9}, {1, 15}, {2, 3},
    {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {3, 8}, {3, 9}, {3, 10}, {3, 23}, {4, 8}, {4, 9}, {4, 10},
    {4, 11}, {4, 22}, {5, 6}, {6, 9}, {6, 15}, {7, 9}, {7, 10}, {7, 12}, {7, 22}, {7, 23}, {8, 11}, {8, 22},
    {8, 23}, {9, 10}, {9, 12}, {9, 15}, {10, 22}, {10, 23}, {11, 22}, {11, 23}, {12, 15}, {22, 23}};
const std::vector<Crossing> kPatch2Crossings = {
    {{3, 5}, {2, 6}}, {{1, 9}, {6, 15}}, {{0, 9}, {7, 12}}, {{0, 8}, {3, 23}},
    {{3, 10}, {4, 9}}, {{10, 23}, {7, 22}}, {{8, 22}, {4, 11}}};

// Patch adding four vertices to sectors 0 and 1 (ids 32..35 in the k = 6 ring).
const std::vector<Edge> kPatch4Edges = {
    {0, 2}, {0, 12}, {0, 34}, {0, 35}, {1, 3}, {1, 5}, {1, 11}, {1, 15}, {2, 3}, {2, 5}, {2, 6},
    {2, 8}, {2, 9}, {2, 35}, {3, 5}, {3, 6}, {3, 11}, {3, 15}, {4, 7}, {4, 8}, {4, 10}, {4, 15},
    {4, 32}, {4, 34}, {5, 6}, {6, 9}, {6, 10}, {6, 11}, {7, 8}, {7, 10}, {7, 11}, {7, 32}, {7, 33},
    {8, 9}, {8, 10}, {8, 34}, {8, 35}, {9, 10}, {9, 11}, {9, 35}, {10, 11}, {10, 33}, {11, 15}, {11, 32},
    {11, 33}, {12, 15}, {12, 34}, {12, 35}, {15, 32}, {15, 34}, {32, 33}, {32, 34}, {34, 35}};
const std::vector<Crossing> kPatch4Crossings = {
    {{0, 34}, {12, 35}}, {{2, 3}, {5, 6}}, {{9, 35}, {2, 8}}, {{9, 11}, {6, 10}},
    {{1, 11}, {3, 15}}, {{7, 11}, {32, 33}}, {{4, 15}, {32, 34}}, {{7, 8}, {4, 10}}};

// Standalone instance for (k, i) = (2, 4): n = 16, m = 50, eight kites.
const std::vector<Edge> kDense16Edges = {
    {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 12}, {0, 15}, {1, 4}, {1, 5}, {1, 7}, {1, 9}, {1, 10},
    {1, 11}, {1, 12}, {1, 13}, {1, 14}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 13}, {2, 14}, {3, 6},
    {3, 8}, {3, 10}, {3, 13}, {3, 14}, {4, 5}, {4, 6}, {4, 7}, {4, 11}, {4, 12}, {5, 6}, {5, 11},
    {5, 14}, {6, 8}, {6, 10}, {6, 12}, {6, 15}, {7, 8}, {7, 9}, {7, 12}, {7, 15}, {8, 9}, {8, 10},
    {9, 10}, {9, 13}, {10, 13}, {11, 14}, {12, 15}, {13, 14}};
const std::vector<Crossing> kDense16Crossings = {
    {{11, 14}, {1, 5}}, {{2, 4}, {5, 6}}, {{3, 14}, {2, 13}}, {{6, 10}, {3, 8}},
    {{1, 10}, {9, 13}}, {{0, 9}, {7, 8}}, {{6, 15}, {0, 12}}, {{1, 12}, {4, 7}}};

// Sparsest instance on 12 vertices with level-2 dual nodes.
const std::vector<Edge> kSparse2Edges = {
    {0, 1}, {0, 2}, {0, 6}, {1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 6}, {2, 7}, {3, 6},
    {3, 7}, {3, 8}, {3, 11}, {4, 6}, {4, 7}, {4, 11}, {5, 6}, {5, 8}, {5, 9}, {5, 10}, {5, 11},
    {6, 7}, {6, 8}, {6, 10}, {6, 11}, {7, 11}, {8, 9}, {8, 10}, {8, 11}, {9, 10}, {10, 11}};
const std::vector<Crossing> kSparse2Crossings = {{{2, 3}, {1, 7}}, {{10, 11}, {5, 6}}};

}  // namespace

GeneratedInstance gen_sparsest(int k) {
    if (k < 1) throw Error(ErrorCode::InvalidParameters, "sparsest family needs k >= 1");
    Builder b;
    std::vector<std::array<int, 3>> tets;
    if (k == 1) {
        // Poles 0 and 1 are tetrahedron centers; 2..6 carry one kite.
        b.n = 7;
        for (Edge e : std::vector<Edge>{{0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 5}, {2, 6},
                                        {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}})
            b.edge(e.first, e.second);
        b.kite(2, 3, 4, 5);
    } else if (k == 2) {
        // Found by search; its dual has two level-2 triangles next to three tetrahedra.
        b.n = 12;
        for (Edge e : kSparse2Edges) b.edge(e.first, e.second);
        b.crossings = kSparse2Crossings;
    } else {
        // Hubs A = 0, B = 1; p_j = 2 + j, q_j = 2 + k + j, h_j = 2 + 2k + j; centers follow.
        const int A = 0, B = 1;
        b.n = 2 + 3 * k;
        auto p = [&](int j) { return 2 + j; };
        auto q = [&](int j) { return 2 + k + j; };
        auto h = [&](int j) { return 2 + 2 * k + ((j % k) + k) % k; };
        for (int j = 0; j < k; ++j) {
            b.edge(A, p(j)), b.edge(B, q(j)), b.edge(A, h(j)), b.edge(B, h(j));
            b.kite(p(j), h(j), q(j), h(j - 1));
        }
        for (int j = 0; j < k; ++j) tets.push_back({A, p(j), h(j - 1)}), tets.push_back({B, q(j), h(j)});
    }
    for (const auto& t : tets) {
        int z = b.n++;
        for (int v : t) b.edge(z, v);
    }
    return finish("sparsest", k, 0, b, k);
}

GeneratedInstance gen_optimal(int k) {
    if (k < 2) throw Error(ErrorCode::KTooSmall, "optimal NIC-planar graphs need k >= 2");
    return finish("optimal", k, 0, optimal_ring(k), 3 * k);
}

GeneratedInstance gen_densest_intermediate(int k, int i) {
    auto invalid = [&]() {
        throw Error(ErrorCode::InvalidParameters,
                    "no densest-intermediate construction for k=" + std::to_string(k) + ", i=" + std::to_string(i));
    };
    Builder b;
    if (i == 1 || i == 3) {
        if (k < 2) invalid();
        b = optimal_ring(k);
        const int N = 0, a0 = 2, b0 = 3;
        if (i == 1) {
            // Degree-3 vertex inside the trivial triangle (N, a0, b0).
            int z = b.n++;
            b.edge(z, N), b.edge(z, a0), b.edge(z, b0);
        } else {
            // Kite (N, u, v, w) plus five triangles inside (N, a0, b0).
            int u = b.n++, v = b.n++, w = b.n++;
            b.kite(N, u, v, w);
            b.edge(u, a0), b.edge(v, a0), b.edge(v, b0), b.edge(w, b0);
        }
    } else if (i == 2) {
        if (k < 4 || k % 4 != 0) invalid();
        b = ring_with_patch(k, 2, 22, kPatch2Edges, kPatch2Crossings);
    } else if (i == 4) {
        if (k < 2 || (k - 2) % 4 != 0) invalid();
        if (k == 2) {
            b.n = 16;
            for (Edge e : kDense16Edges) b.edge(e.first, e.second);
            for (const auto& c : kDense16Crossings)
                b.crossings.push_back({make_edge(c.e1.first, c.e1.second), make_edge(c.e2.first, c.e2.second)});
        } else {
            b = ring_with_patch(k, 4, 32, kPatch4Edges, kPatch4Crossings);
        }
    } else {
        invalid();
    }
    int m = static_cast<int>(b.edges.size());
    return finish("densest-intermediate", k, i, b, m - (3 * b.n - 6));
}

NicEmbedding nested_k5_variant(int k, std::uint64_t mask) {
    if (k < 2) throw Error(ErrorCode::InvalidParameters, "nested K5 family needs k >= 2");
    if (k - 1 < 64 && (mask >> (k - 1)) != 0) throw Error(ErrorCode::InvalidParameters, "mask has bits beyond the layer gaps");
    Builder b;
    b.n = 3 * k;
    auto u = [](int i) { return 3 * (i - 1); };
    auto v = [](int i) { return 3 * (i - 1) + 1; };
    auto w = [](int i) { return 3 * (i - 1) + 2; };
    for (int i = 1; i <= k; ++i) b.edge(u(i), v(i)), b.edge(v(i), w(i)), b.edge(w(i), u(i));
    for (int i = 2; i <= k; ++i) {
        // Intra-layer edges I1..I6 in cyclic order around the gap; triangle Tj holds Ij and I(j+1).
        std::array<Edge, 6> intra = {Edge{u(i), u(i - 1)}, Edge{v(i), u(i - 1)}, Edge{v(i), v(i - 1)},
                                     Edge{w(i), v(i - 1)}, Edge{w(i), w(i - 1)}, Edge{u(i), w(i - 1)}};
        for (Edge e : intra) b.edge(e.first, e.second);
        bool diagonal = (mask >> (i - 2)) & 1;
        for (int j = 0; j < 6; ++j) {
            int a = b.n++, bb = b.n++;
            Edge side = intra[diagonal ? (j + 1) % 6 : j];
            int x = side.first, y = side.second;
            std::set<int> tri{intra[j].first, intra[j].second, intra[(j + 1) % 6].first, intra[(j + 1) % 6].second};
            for (int t : tri) b.edge(a, t), b.edge(bb, t);
            b.edge(a, bb);
            b.crossings.push_back({make_edge(x, bb), make_edge(y, a)});
        }
    }
    Graph g = b.graph();
    return embed_with_crossings(g, b.crossings);
}

GeneratedInstance gen_nested_k5(int k) {
    NicEmbedding emb = nested_k5_variant(k, 0);
    GeneratedInstance inst;
    inst.family = "nested-k5";
    inst.k = k;
    inst.graph = emb.graph;
    inst.expected_n = 15 * k - 12;
    inst.expected_m = 51 * k - 48;
    inst.expected_crossings = 6 * (k - 1);
    inst.witness = std::move(emb);
    return inst;
}

GeneratedInstance gen_rac_counterexample() {
    Builder base = optimal_ring(2);
    std::set<Edge> crossed;
    for (const auto& c : base.crossings) crossed.insert(c.e1), crossed.insert(c.e2);
    Builder b;
    b.n = base.n;
    b.edges = base.edges;
    b.crossings = base.crossings;
    for (Edge e : base.edges) {
        if (crossed.count(e)) continue;
        for (int j = 0; j < 7; ++j) {
            int mid = b.n++;
            b.edge(e.first, mid), b.edge(mid, e.second);
        }
    }
    return finish("rac-counterexample", 2, 0, b, static_cast<int>(base.crossings.size()));
}

GeneratedInstance gen_flip_fixture() {
    // u, v, w, x, y, z = 0..5: kite {u, w, x, y} with w x crossing u y, triangles
    // (u, v, w) and (u, v, x), and z adjacent to w, v, x, y.
    const int u = 0, v = 1, w = 2, x = 3, y = 4, z = 5;
    Builder b;
    b.n = 6;
    b.kite(w, u, x, y);
    for (Edge e : std::vector<Edge>{{u, v}, {v, w}, {v, x}, {z, w}, {z, v}, {z, x}, {z, y}}) b.edge(e.first, e.second);
    return finish("flip-fixture", 0, 0, b, 1);
}

NicEmbedding k5_one_planar_embedding() {
    std::vector<Edge> all;
    for (int a = 0; a < 5; ++a)
        for (int c = a + 1; c < 5; ++c) all.push_back({a, c});
    return embed_with_crossings(new_graph(5, all), {{{0, 2}, {1, 3}}});
}

GadgetGraph np_gadget_transform(const Graph& g) {
    GadgetGraph out;
    int n = g.n() + 8 * g.m();
    std::vector<Edge> edges;
    for (int j = 0; j < g.m(); ++j) {
        auto [u, v] = g.edges()[j];
        int base = g.n() + 8 * j;
        int auv = base, avu = base + 1;
        edges.push_back({u, auv});
        edges.push_back({avu, v});
        edges.push_back({auv, avu});
        for (int t = 0; t < 3; ++t) {
            edges.push_back({u, base + 2 + t}), edges.push_back({base + 2 + t, auv});
            edges.push_back({v, base + 5 + t}), edges.push_back({base + 5 + t, avu});
        }
        out.original_edges.push_back({u, v});
        out.designated.push_back({auv, avu});
    }
    out.graph = new_graph(n, edges);
    return out;
}

NicEmbedding gadget_embedding(const GadgetGraph& gadget, const NicEmbedding& input) {
    auto designated = [&](Edge e) {
        auto it = std::lower_bound(gadget.original_edges.begin(), gadget.original_edges.end(), e);
        if (it == gadget.original_edges.end() || *it != e)
            throw Error(ErrorCode::InvalidEmbedding, "crossing edge missing from the gadget input");
        return gadget.designated[it - gadget.original_edges.begin()];
    };
    std::vector<Crossing> crossings;
    for (const auto& c : input.crossings) crossings.push_back({designated(c.e1), designated(c.e2)});
    return embed_with_crossings(gadget.graph, std::move(crossings));
}

}  // namespace nic
