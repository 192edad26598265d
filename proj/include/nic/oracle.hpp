#pragma once

#include <cstdint>
#include <vector>

#include "nic/recognize.hpp"

namespace nic {

struct OracleOptions {
    // Require exactly m - (3n - 6) kites covering every edge once.
    bool optimal = false;
    int limit = 12;
    // Exact-cover branching on the least-covered edge (optimal variant only).
    // With pruning off every compatible subset is enumerated and then filtered.
    bool prune = true;
};

struct OracleResult {
    bool decision = false;
    std::vector<KiteSet> kite_sets;  // sorted
    std::int64_t candidates = 0;     // subsets handed to the planarity test
    std::int64_t prunes = 0;         // branches cut before reaching a leaf
};

// Searches subsets of the brute-force K4 catalog whose members pairwise share at
// most one vertex and whose star graph is planar. Throws LimitExceeded if
// n > limit. Decides kite structures of maximal embeddings; it is not a general
// NIC-planarity test.
OracleResult oracle_maximal_nic(const Graph& g, const OracleOptions& opts = {});

}  // namespace nic
