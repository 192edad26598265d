#include "nic/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nic/error.hpp"

namespace nic {

Graph::Graph(int n) : n_(n), adj_(n), adj_eid_(n) {}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return -1;
    return adj_eid_[u][it - a.begin()];
}

Graph new_graph(int n, const std::vector<Edge>& input) {
    if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(input.size());
    for (auto [u, v] : input) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        edges.push_back(make_edge(u, v));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw Error(ErrorCode::DuplicateEdge,
                    "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");

    Graph g(n);
    g.edges_ = std::move(edges);
    std::vector<int> deg(n, 0);
    for (auto [u, v] : g.edges_) ++deg[u], ++deg[v];
    for (int v = 0; v < n; ++v) g.adj_[v].reserve(deg[v]), g.adj_eid_[v].reserve(deg[v]);
    // Edges are sorted, so pushing in order keeps the "larger neighbor" halves sorted;
    // a final per-vertex sort fixes the rest.
    for (int id = 0; id < g.m(); ++id) {
        auto [u, v] = g.edges_[id];
        g.adj_[u].push_back(v), g.adj_eid_[u].push_back(id);
        g.adj_[v].push_back(u), g.adj_eid_[v].push_back(id);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        auto& e = g.adj_eid_[v];
        if (std::is_sorted(a.begin(), a.end())) continue;
        std::vector<int> idx(a.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x] < a[y]; });
        std::vector<int> a2, e2;
        a2.reserve(a.size()), e2.reserve(a.size());
        for (int i : idx) a2.push_back(a[i]), e2.push_back(e[i]);
        a.swap(a2), e.swap(e2);
    }
    return g;
}

Graph graph_from_edge_set(int n, std::vector<Edge> edges) {
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return new_graph(n, edges);
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
    long value;
    long offset;
};

std::vector<Token> tokenize_ints(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        long v = 0;
        auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, v);
        if (ec != std::errc() || p != s.data() + j)
            throw Error(ErrorCode::ParseError, "expected integer", static_cast<long>(i));
        out.push_back({v, static_cast<long>(i)});
        i = j;
    }
    return out;
}

Graph parse_edge_list(std::string_view s) {
    auto toks = tokenize_ints(s);
    if (toks.empty()) throw Error(ErrorCode::ParseError, "missing vertex count", 0);
    long n = toks[0].value;
    if (n < 0 || n > 100000000) throw Error(ErrorCode::ParseError, "bad vertex count", toks[0].offset);
    if ((toks.size() - 1) % 2 != 0)
        throw Error(ErrorCode::ParseError, "dangling endpoint", toks.back().offset);
    std::vector<Edge> edges;
    edges.reserve((toks.size() - 1) / 2);
    std::vector<long> offsets;
    for (size_t i = 1; i + 1 < toks.size(); i += 2) {
        long u = toks[i].value, v = toks[i + 1].value;
        for (const auto* t : {&toks[i], &toks[i + 1]})
            if (t->value < 0 || t->value >= n)
                throw Error(ErrorCode::ParseError, "vertex out of range", t->offset);
        if (u == v) throw Error(ErrorCode::ParseError, "loop edge", toks[i].offset);
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        offsets.push_back(toks[i].offset);
    }
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return edges[a] < edges[b]; });
    for (size_t i = 1; i < order.size(); ++i)
        if (edges[order[i]] == edges[order[i - 1]])
            throw Error(ErrorCode::ParseError, "duplicate edge", offsets[order[i]]);
    return new_graph(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    size_t pos = 0;
    auto byte_at = [&](size_t i) -> int {
        if (i >= s.size()) throw Error(ErrorCode::ParseError, "truncated graph6 data", static_cast<long>(i));
        int b = static_cast<unsigned char>(s[i]);
        if (b < 63 || b > 126) throw Error(ErrorCode::ParseError, "byte outside graph6 range", static_cast<long>(i));
        return b - 63;
    };
    long n = 0;
    int first = byte_at(pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else if (byte_at(pos + 1) < 63) {
        for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + k);
        pos = 4;
    } else {
        for (int k = 2; k <= 7; ++k) n = (n << 6) | byte_at(pos + k);
        pos = 8;
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (s.size() < pos + need) throw Error(ErrorCode::ParseError, "truncated graph6 data", static_cast<long>(s.size()));
    if (s.size() > pos + need) throw Error(ErrorCode::ParseError, "trailing bytes after graph6 data", static_cast<long>(pos + need));
    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int b = byte_at(pos + static_cast<size_t>(k / 6));
            if ((b >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    // Padding bits must be zero.
    if (need > 0) {
        int last = byte_at(pos + need - 1);
        int used = static_cast<int>(bits - static_cast<long long>(need - 1) * 6);
        if (used < 6 && (last & ((1 << (6 - used)) - 1)))
            throw Error(ErrorCode::ParseError, "nonzero padding bits", static_cast<long>(pos + need - 1));
    }
    return new_graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(std::string_view bytes, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(bytes) : parse_graph6(bytes);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::string out;
    if (format == GraphFormat::EdgeList) {
        out = std::to_string(g.n()) + "\n";
        for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }
    long n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
    } else {
        out.push_back(126), out.push_back(126);
        for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<unsigned char> packed(static_cast<size_t>((bits + 5) / 6), 0);
    for (auto [i, j] : g.edges()) {
        long long k = static_cast<long long>(j) * (j - 1) / 2 + i;
        packed[static_cast<size_t>(k / 6)] |= static_cast<unsigned char>(1 << (5 - k % 6));
    }
    for (unsigned char b : packed) out.push_back(static_cast<char>(b + 63));
    return out;
}

// ---------------------------------------------------------- connectivity

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) seen[w] = 1, ++count, stack.push_back(w);
    }
    return count == g.n();
}

namespace {

// Iterative articulation-point search; `skip` marks a vertex treated as deleted.
bool has_cut_vertex(const Graph& g, int skip) {
    int n = g.n();
    int start = (skip == 0) ? 1 : 0;
    if (n - (skip >= 0 ? 1 : 0) <= 2) return false;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<size_t> it(n, 0);
    int timer = 0;
    std::vector<int> stack{start};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
        int v = stack.back();
        const auto& nb = g.neighbors(v);
        if (it[v] < nb.size()) {
            int w = nb[it[v]++];
            if (w == skip) continue;
            if (disc[w] < 0) {
                parent[w] = v;
                ++child_count[v];
                disc[w] = low[w] = timer++;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (p != start && low[v] >= disc[p]) return true;
            }
        }
    }
    return child_count[start] > 1;
}

bool connected_without(const Graph& g, int skip) {
    int n = g.n();
    int start = (skip == 0) ? 1 : 0;
    if (start >= n) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (w != skip && !seen[w]) seen[w] = 1, ++count, stack.push_back(w);
    }
    return count == n - (skip >= 0 ? 1 : 0);
}

}  // namespace

bool is_biconnected(const Graph& g) {
    if (!is_connected(g)) return false;
    return !has_cut_vertex(g, -1);
}

bool is_triconnected(const Graph& g) {
    if (g.n() < 4) throw Error(ErrorCode::TooSmall, "triconnectivity needs n >= 4");
    if (!is_biconnected(g)) return false;
    // A separating pair {u,v} exists iff some G-u has cut vertex v.
    for (int u = 0; u < g.n(); ++u) {
        if (!connected_without(g, u) || has_cut_vertex(g, u)) return false;
    }
    return true;
}

Graph induced_without(const Graph& g, int removed) {
    std::vector<Edge> edges;
    auto id = [&](int v) { return v < removed ? v : v - 1; };
    for (auto [u, v] : g.edges())
        if (u != removed && v != removed) edges.push_back({id(u), id(v)});
    return new_graph(g.n() - 1, edges);
}

}  // namespace nic
