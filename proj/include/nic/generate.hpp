#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nic/embedding.hpp"

namespace nic {

struct GeneratedInstance {
    std::string family;
    int k = 0;
    int i = 0;
    Graph graph;
    std::optional<NicEmbedding> witness;
    int expected_n = 0;
    int expected_m = 0;
    int expected_crossings = 0;
};

// Sparsest maximal NIC-planar graphs: n = 5k + 2, m = 16k, k >= 1.
GeneratedInstance gen_sparsest(int k);

// Optimal NIC-planar graphs: n = 5k + 2, m = 18k, 3k kites. Throws KTooSmall for k < 2.
GeneratedInstance gen_optimal(int k);

// n = 5k + 2 + i with m = floor(18(n - 2) / 5). Valid: i in {1,3} with k >= 2,
// i = 2 with k = 4 + 4r, i = 4 with k = 2 + 4r. Throws InvalidParameters otherwise.
GeneratedInstance gen_densest_intermediate(int k, int i);

// Nested-triangle graph with a K5 on every inter-layer triangle; n = 15k - 12,
// m = 51k - 48. The witness is variant 0. Throws InvalidParameters for k < 2.
GeneratedInstance gen_nested_k5(int k);
// Bit (i - 2) of mask picks the kite side family for the gap between layers i - 1 and i:
// 0 uses the straight edges u_i u_{i-1}, v_i v_{i-1}, w_i w_{i-1}; 1 the diagonals.
NicEmbedding nested_k5_variant(int k, std::uint64_t mask);

// Optimal graph on 12 vertices with every planar edge widened by seven 2-paths.
GeneratedInstance gen_rac_counterexample();

// Six-vertex configuration with one kite and two flippable triangle pairs.
GeneratedInstance gen_flip_fixture();

// K5 with the single crossing (0,2) x (1,3).
NicEmbedding k5_one_planar_embedding();

struct GadgetGraph {
    Graph graph;
    std::vector<Edge> original_edges;  // in input edge order
    // Per original edge (u,v) with u < v: the designated edge (a_uv, a_vu).
    std::vector<Edge> designated;
};

// Every edge uv becomes u = a_uv - a_vu = v where "=" is a fat connection: a
// direct edge plus three 2-paths. Original vertices keep their ids; edge j adds
// vertices n + 8j (a_uv), n + 8j + 1 (a_vu), n + 8j + 2..4 (u side) and
// n + 8j + 5..7 (v side).
GadgetGraph np_gadget_transform(const Graph& g);

// From a 1-planar embedding of the input graph, a NIC embedding of the gadget
// graph in which exactly the designated edges of crossed input edges cross.
NicEmbedding gadget_embedding(const GadgetGraph& gadget, const NicEmbedding& input);

}  // namespace nic
