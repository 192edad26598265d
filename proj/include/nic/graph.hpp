#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nic {

// Unordered edge, always stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    // Sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    // Index into edges(), or -1.
    int edge_id(int u, int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

    friend Graph new_graph(int n, const std::vector<Edge>& edges);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_eid_;
};

// Throws LoopEdge, DuplicateEdge or VertexOutOfRange.
Graph new_graph(int n, const std::vector<Edge>& edges);

// Like new_graph but silently drops duplicate edges (loops still rejected).
Graph graph_from_edge_set(int n, std::vector<Edge> edges);

enum class GraphFormat { EdgeList, Graph6 };

// Throws ParseError carrying the byte offset of the problem.
Graph parse_graph(std::string_view bytes, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);
// Throws TooSmall for n < 4.
bool is_triconnected(const Graph& g);

// Graph with the listed vertex removed; remaining vertices keep their relative order.
Graph induced_without(const Graph& g, int removed);

}  // namespace nic
