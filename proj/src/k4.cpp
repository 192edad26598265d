#include "nic/k4.hpp"

#include <algorithm>

namespace nic {

namespace {

// Smallest-last order; returns position of each vertex.
std::vector<int> degeneracy_positions(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), pos(n, -1);
    int maxd = 0;
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v), maxd = std::max(maxd, deg[v]);
    std::vector<std::vector<int>> bins(maxd + 1);
    for (int v = 0; v < n; ++v) bins[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    int cur = 0, next_pos = 0;
    while (next_pos < n) {
        cur = std::max(cur - 1, 0);
        while (bins[cur].empty()) ++cur;
        int v = bins[cur].back();
        bins[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;  // stale entry
        removed[v] = 1;
        pos[v] = next_pos++;
        for (int w : g.neighbors(v))
            if (!removed[w]) bins[--deg[w]].push_back(w);
    }
    return pos;
}

}  // namespace

K4Result list_k4(const Graph& g, std::int64_t step_cap) {
    K4Result res;
    int n = g.n();
    auto pos = degeneracy_positions(g);
    // Orient each edge from the earlier to the later vertex of the order.
    std::vector<std::vector<int>> out(n);
    for (auto [u, v] : g.edges()) {
        if (pos[u] < pos[v])
            out[u].push_back(v);
        else
            out[v].push_back(u);
    }
    std::vector<int> mark(n, 0);  // 0 none, 1 out(v), 2 out(v) and out(u)
    std::int64_t steps = 0;
    auto step = [&]() {
        if (steps + 1 > step_cap) return false;
        ++steps;
        return true;
    };
    std::vector<K4> found;
    std::vector<int> common;
    for (int v = 0; v < n; ++v) {
        for (int u : out[v]) {
            if (!step()) goto timeout;
            mark[u] = 1;
        }
        for (int u : out[v]) {
            common.clear();
            for (int w : out[u]) {
                if (!step()) goto timeout;
                if (mark[w] == 1) mark[w] = 2, common.push_back(w);
            }
            for (int w : common) {
                for (int x : out[w]) {
                    if (!step()) goto timeout;
                    if (mark[x] == 2) {
                        K4 k{v, u, w, x};
                        std::sort(k.begin(), k.end());
                        found.push_back(k);
                    }
                }
            }
            for (int w : common) mark[w] = 1;  // unmark: inessential
        }
        for (int u : out[v]) mark[u] = 0;
    }
    std::sort(found.begin(), found.end());
    res.steps = steps;
    res.catalog.steps = steps;
    res.catalog.buckets = bucket_by_edge(found, g);
    res.catalog.k4s = std::move(found);
    return res;
timeout:
    res.timed_out = true;
    res.steps = steps;
    return res;
}

std::vector<std::vector<int>> bucket_by_edge(const std::vector<K4>& k4s, const Graph& g) {
    std::vector<std::vector<int>> buckets(g.m());
    for (size_t i = 0; i < k4s.size(); ++i) {
        const auto& k = k4s[i];
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                int id = g.edge_id(k[a], k[b]);
                if (id >= 0) buckets[id].push_back(static_cast<int>(i));
            }
    }
    return buckets;
}

std::vector<K4> brute_force_k4(const Graph& g) {
    std::vector<K4> out;
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) out.push_back({a, b, c, d});
            }
        }
    return out;
}

}  // namespace nic
