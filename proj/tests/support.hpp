#pragma once

// Independent reference implementations used to cross-check the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "nic/graph.hpp"

namespace support {

// Small simple graph as adjacency bitmasks (n <= 16).
struct Small {
    int n = 0;
    std::vector<std::uint32_t> adj;
    int m() const {
        int s = 0;
        for (auto a : adj) s += __builtin_popcount(a);
        return s / 2;
    }
    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
};

inline Small from_graph(const nic::Graph& g) {
    Small s{g.n(), std::vector<std::uint32_t>(g.n(), 0)};
    for (auto [u, v] : g.edges()) s.adj[u] |= 1u << v, s.adj[v] |= 1u << u;
    return s;
}

inline Small remove_vertex(const Small& g, int x) {
    Small r{g.n - 1, {}};
    auto squeeze = [x](std::uint32_t mask) {
        std::uint32_t low = mask & ((1u << x) - 1), high = mask >> (x + 1);
        return low | (high << x);
    };
    for (int v = 0; v < g.n; ++v)
        if (v != x) r.adj.push_back(squeeze(g.adj[v]));
    return r;
}

// Deletes isolated and pendant vertices and smooths degree-2 vertices.
inline Small reduce(Small g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            int d = __builtin_popcount(g.adj[v]);
            if (d <= 1) {
                g = remove_vertex(g, v);
                changed = true;
                break;
            }
            if (d == 2) {
                int a = __builtin_ctz(g.adj[v]);
                int b = 31 - __builtin_clz(g.adj[v]);
                g.adj[a] |= 1u << b, g.adj[b] |= 1u << a;
                g.adj[a] &= ~(1u << v), g.adj[b] &= ~(1u << v);
                g.adj[v] = 0;
                g = remove_vertex(g, v);
                changed = true;
                break;
            }
        }
    }
    return g;
}

inline bool is_k5(const Small& g) { return g.n == 5 && g.m() == 10; }

inline bool is_k33(const Small& g) {
    if (g.n != 6 || g.m() != 9) return false;
    for (int v = 0; v < 6; ++v)
        if (__builtin_popcount(g.adj[v]) != 3) return false;
    // Bipartite with both sides of size three.
    std::vector<int> side(6, -1);
    side[0] = 0;
    for (int it = 0; it < 6; ++it)
        for (int v = 0; v < 6; ++v)
            if (side[v] >= 0)
                for (int w = 0; w < 6; ++w)
                    if (g.edge(v, w)) {
                        if (side[w] == side[v]) return false;
                        side[w] = 1 - side[v];
                    }
    return std::count(side.begin(), side.end(), 0) == 3;
}

inline std::vector<std::uint32_t> key_of(const Small& g) {
    std::vector<std::uint32_t> k(g.adj);
    k.push_back(static_cast<std::uint32_t>(g.n));
    return k;
}

// Nonplanar iff some sequence of edge deletions and contractions reaches K5 or K3,3.
inline bool has_kuratowski_minor(const Small& in, std::set<std::vector<std::uint32_t>>& seen) {
    Small g = reduce(in);
    if (g.n < 5) return false;
    if (g.m() > 3 * g.n - 6) return true;
    if (is_k5(g) || is_k33(g)) return true;
    if (!seen.insert(key_of(g)).second) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.edge(u, v)) continue;
            Small del = g;
            del.adj[u] &= ~(1u << v), del.adj[v] &= ~(1u << u);
            if (has_kuratowski_minor(del, seen)) return true;
            Small con = g;
            std::uint32_t merged = (con.adj[u] | con.adj[v]) & ~((1u << u) | (1u << v));
            for (int w = 0; w < con.n; ++w)
                if ((merged >> w) & 1) con.adj[w] |= 1u << u;
            for (int w = 0; w < con.n; ++w) con.adj[w] &= ~(1u << v);
            con.adj[u] = merged;
            con.adj[v] = 0;
            if (has_kuratowski_minor(remove_vertex(con, v), seen)) return true;
        }
    return false;
}

inline bool brute_force_planar(const nic::Graph& g) {
    std::set<std::vector<std::uint32_t>> seen;
    return !has_kuratowski_minor(from_graph(g), seen);
}

inline std::vector<std::array<int, 4>> brute_force_k4_ref(const nic::Graph& g) {
    std::vector<std::array<int, 4>> out;
    int n = g.n();
    std::vector<int> idx(4);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int q[4] = {a, b, c, d};
                    bool all = true;
                    for (int i = 0; i < 4 && all; ++i)
                        for (int j = i + 1; j < 4 && all; ++j) all = g.has_edge(q[i], q[j]);
                    if (all) out.push_back({a, b, c, d});
                }
    return out;
}

inline nic::Graph random_graph(int n, int m, std::mt19937& rng) {
    std::vector<nic::Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<size_t>(m, all.size()));
    return nic::new_graph(n, all);
}

inline nic::Graph complete_graph(int n) {
    std::vector<nic::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return nic::new_graph(n, e);
}

inline nic::Graph cycle_graph(int n) {
    std::vector<nic::Edge> e;
    for (int v = 0; v < n; ++v) e.push_back(nic::make_edge(v, (v + 1) % n));
    return nic::new_graph(n, e);
}

// Random maximal planar graph: start from a triangle and repeatedly insert a
// vertex into a random face or flip a random edge.
inline nic::Graph random_triangulation(int n, std::mt19937& rng) {
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t f = pick(rng);
        auto [a, b, c] = faces[f];
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    auto edge_set = [&]() {
        std::set<nic::Edge> es;
        for (auto [a, b, c] : faces) es.insert(nic::make_edge(a, b)), es.insert(nic::make_edge(b, c)), es.insert(nic::make_edge(c, a));
        return es;
    };
    // Random flips of faces (a,b,c), (b,a,d) into (a,d,c), (d,b,c).
    std::set<nic::Edge> present = edge_set();
    for (int it = 0; it < 4 * n; ++it) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t f = pick(rng);
        int r = static_cast<int>(rng() % 3);
        int a = faces[f][r], b = faces[f][(r + 1) % 3], c = faces[f][(r + 2) % 3];
        for (size_t g = 0; g < faces.size(); ++g) {
            if (g == f) continue;
            for (int t = 0; t < 3; ++t) {
                if (faces[g][t] != b || faces[g][(t + 1) % 3] != a) continue;
                int d = faces[g][(t + 2) % 3];
                if (d == c || present.count(nic::make_edge(c, d))) continue;
                faces[f] = {a, d, c};
                faces[g] = {d, b, c};
                present.erase(nic::make_edge(a, b));
                present.insert(nic::make_edge(c, d));
            }
        }
    }
    std::set<nic::Edge> edges;
    for (auto [a, b, c] : faces) edges.insert(nic::make_edge(a, b)), edges.insert(nic::make_edge(b, c)), edges.insert(nic::make_edge(c, a));
    return nic::new_graph(n, std::vector<nic::Edge>(edges.begin(), edges.end()));
}

}  // namespace support
