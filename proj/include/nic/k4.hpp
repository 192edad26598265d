#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nic/graph.hpp"

namespace nic {

using K4 = std::array<int, 4>;  // sorted ascending

struct K4Catalog {
    std::vector<K4> k4s;                     // sorted lexicographically
    std::vector<std::vector<int>> buckets;   // per edge id: catalog indices containing the edge
    std::int64_t steps = 0;                  // essential steps consumed by the listing
};

struct K4Result {
    bool timed_out = false;
    std::int64_t steps = 0;
    K4Catalog catalog;  // empty on timeout
};

// Complete-subgraph listing over a degeneracy order. Every vertex mark and every
// scanned oriented edge costs one essential step; the listing stops as soon as
// the counter would exceed step_cap.
K4Result list_k4(const Graph& g, std::int64_t step_cap);

// Per-edge buckets for a catalog of g.
std::vector<std::vector<int>> bucket_by_edge(const std::vector<K4>& k4s, const Graph& g);

// Brute force over all 4-subsets; reference for tests and the oracle.
std::vector<K4> brute_force_k4(const Graph& g);

}  // namespace nic
