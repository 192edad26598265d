#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nic/embedding.hpp"
#include "nic/k4.hpp"

namespace nic {

enum class RejectReason { EdgeCountMismatch, ArboricityTimeout, KiteCoverViolation, NonplanarStarGraph, StructurallyInvalid };
const char* to_string(RejectReason reason);

using KiteSet = std::vector<K4>;  // sorted

struct RecognitionResult {
    bool accepted = false;
    std::optional<NicEmbedding> embedding;
    RejectReason reason = RejectReason::StructurallyInvalid;
    KiteSet kite_set;
    std::size_t catalog_size = 0;
    std::int64_t steps = 0;
};

struct RecognizeOptions {
    std::int64_t step_cap_multiplier = 256;
};

// Decides whether g is optimal NIC-planar and returns a witness embedding.
RecognitionResult recognize_optimal(const Graph& g, const RecognizeOptions& opts = {});

struct StarGraph {
    Graph graph;              // original vertices 0..n-1, then one dummy per kite
    std::vector<int> dummy;   // kite index -> dummy vertex id
};

// Replaces the six edges of every kite by a star around a new dummy vertex.
StarGraph build_star_graph(const Graph& g, const KiteSet& kites);

// Turns each star center into a crossing of the kite diagonals that alternate in
// its rotation and routes the four kite sides next to the crossing.
NicEmbedding reinsert_kites(const Graph& g, const Rotation& star_rotation, const KiteSet& kites, const std::vector<int>& dummy);

}  // namespace nic
