#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nic/embedding.hpp"

namespace nic {

enum class NodeLabel { Kite, Tetrahedron, Triangle };
const char* to_string(NodeLabel label);

struct DualNode {
    NodeLabel label = NodeLabel::Triangle;
    // Sorted original vertices of the face group; canonical node identity.
    std::vector<int> key;
    // Indices into GeneralizedDual::faces.
    std::vector<int> faces;
    int crossing = -1;  // Kite: index into the crossing registry
    int center = -1;    // Tetrahedron: its degree-3 center
};

// One planar primal edge separating the face groups of nodes a and b.
struct DualEdge {
    int a = -1;
    int b = -1;
    Edge segment;
};

struct GeneralizedDual {
    std::vector<Face> faces;
    std::vector<int> face_node;
    std::vector<DualNode> nodes;  // sorted by key
    std::vector<DualEdge> edges;  // parallel edges kept
    std::vector<std::vector<int>> incident;  // node -> edge ids
    int host_m = 0;
    int host_crossings = 0;

    void rebuild_incidence();
    // Node with the given sorted key, or -1.
    int find(const std::vector<int>& key) const;
    // Neighbor node ids, with multiplicity.
    std::vector<int> neighbors(int v) const;
    int other(int edge_id, int v) const { return edges[edge_id].a == v ? edges[edge_id].b : edges[edge_id].a; }
    bool has_parallel_edges() const;
    // Underlying simple graph on node ids.
    Graph simple_graph() const;
    int count(NodeLabel label) const;
};

// Groups the four faces around each crossing into a Kite node, the three faces
// around each planar degree-3 vertex into a Tetrahedron node, and every other
// face into a Triangle node. Throws NotMaximalEmbedding on non-triangular faces,
// malformed kites or dual loops.
GeneralizedDual build_dual(const NicEmbedding& emb);

// Kite-adjacency rules (i) to (v); rule ids "rule-i" .. "rule-v".
VerificationReport check_adjacency_rules(const GeneralizedDual& dual, const Graph& host);

// Degree law, simplicity, planarity and triconnectivity of the dual.
VerificationReport check_dual_structure(const GeneralizedDual& dual);

struct LevelMap {
    std::vector<int> level;     // 0 for kites
    std::vector<char> marked;   // non-kite node adjacent to a kite
    int max_level = 0;
};

// BFS from all Kite nodes. Throws NoKiteNode or LevelExceedsTwo.
LevelMap compute_levels(const GeneralizedDual& dual);

using Rational = boost::rational<long long>;

// Content of the quarter sphere of kite `kite` toward its neighbor `neighbor`.
struct Quarter {
    int kite = -1;
    int neighbor = -1;
    Rational triangle{0};
    Rational tetrahedron{0};
    // A Triangle node stands for 3/2 planar edges, a Tetrahedron node for 9/2.
    Rational planar_edges() const { return triangle * Rational(3, 2) + tetrahedron * Rational(9, 2); }
};

struct SphereAccount {
    std::vector<Quarter> quarters;      // grouped by kite, ordered by (kite, neighbor)
    std::vector<int> kites;             // kite node ids, ascending
    std::vector<Rational> sphere_edges; // per kite: 2 for the kite sides plus its quarters
    Rational total{0};
};

// Splits every level-1 and level-2 node equally over the quarter spheres that
// contain it, then lets each tetrahedron with a single kite exchange a quarter
// of its weight with its two neighboring triangles. Checks every quarter
// (at least 1/3 Triangle or 1/3 Tetrahedron, at most 3 planar edges), every
// sphere (4 to 14 planar edges) and the global total m - 2c.
// Throws AccountingViolation naming the offending kite.
SphereAccount quarter_sphere_accounting(const GeneralizedDual& dual, const LevelMap& levels);

struct FlipCandidate {
    int kite = -1;
    int r = -1;
    int s = -1;
};

// Adjacent Triangle pairs (both unmarked, or both adjacent only to one common
// kite) whose tetrahedral edge is crossed inside some kite.
std::vector<FlipCandidate> flip_candidates(const GeneralizedDual& dual, const NicEmbedding& emb);

// Re-routes the tetrahedral edge of (r, s) to cross their shared edge, turning the
// pair into a kite and the named kite into two triangles. Node ids refer to
// build_dual(emb). Throws PreconditionViolated naming the failed clause.
NicEmbedding kite_flip(const NicEmbedding& emb, int kite, int r, int s);

// DOT with diamond = Kite, triangle = Triangle, house = Tetrahedron.
std::string dual_to_dot(const GeneralizedDual& dual);

std::string key_string(const std::vector<int>& key);

}  // namespace nic
