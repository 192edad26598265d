#pragma once

#include <vector>

#include "nic/graph.hpp"

namespace nic {

// Cyclic neighbor order per vertex. Consistent orientation; faces are traced with
// next(u->v) = v->w where w precedes u in the rotation of v.
using Rotation = std::vector<std::vector<int>>;

struct PlanarityResult {
    bool planar = false;
    Rotation rotation;  // empty when not planar
};

// Boyer-Myrvold edge addition; O(n + m). Disconnected inputs are handled per component.
PlanarityResult test_planarity(const Graph& g);

// Constant-time-ish lookup of a neighbor's position inside a rotation.
class RotationIndex {
public:
    explicit RotationIndex(const Rotation& rot);
    // Position of u in rot[v], or -1.
    int position(int v, int u) const;
    // Global index of half-edge (v, i).
    int half_edge(int v, int i) const { return offset_[v] + i; }
    int half_edge_count() const { return offset_.back(); }

private:
    std::vector<int> offset_;
    std::vector<std::pair<int, int>> sorted_;  // per vertex block: (neighbor, position)
};

// Number of faces of a rotation system on a simple graph (each directed edge used once).
int count_faces(const Graph& g, const Rotation& rot);

}  // namespace nic
