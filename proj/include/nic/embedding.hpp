#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "nic/graph.hpp"
#include "nic/planarity.hpp"

namespace nic {

// Two original edges crossing at one dummy point. For the pair ((a,c),(b,d)) the
// dummy's rotation alternates a, b, c, d. Edges are stored with first < second.
struct Crossing {
    Edge e1;
    Edge e2;
    bool operator==(const Crossing&) const = default;
};

// Planarization rotation system plus crossing registry. Vertex ids 0..n-1 are the
// original vertices; the dummy for crossings[i] has id n + i.
struct NicEmbedding {
    Graph graph;
    std::vector<Crossing> crossings;
    Rotation rotation;

    int n() const { return graph.n(); }
    int dummy(int i) const { return graph.n() + i; }
    bool is_dummy(int v) const { return v >= graph.n(); }
    int planarization_size() const { return graph.n() + static_cast<int>(crossings.size()); }
};

// Corners in walk order; dummies appear as ids >= n.
struct Face {
    std::vector<int> corners;
};

// Original edges minus crossed ones, plus the four half segments per dummy.
Graph planarization(const NicEmbedding& emb);

// Throws InvalidEmbedding if the rotation does not match the planarization,
// NonSphericalEmbedding if Euler's formula fails.
std::vector<Face> trace_faces(const NicEmbedding& emb);

struct Violation {
    std::string rule;
    std::vector<int> witness;
    std::string detail;
};

struct VerificationReport {
    bool pass = true;
    // False when the check does not apply to the input (n < 5 for maximality).
    bool applicable = true;
    std::vector<Violation> violations;

    void add(std::string rule, std::vector<int> witness, std::string detail = {});
    bool has_rule(const std::string& rule) const;
};

VerificationReport verify_nic(const NicEmbedding& emb);

struct MaximalCheckOptions {
    bool check_dual_rules = true;
    // Pairs of K5 subgraphs sharing a crossing must have >= 3 common vertices.
    // Naive K5 enumeration; intended for small inputs.
    bool check_k5_sharing = false;
};

VerificationReport verify_maximal_embedding(const NicEmbedding& emb, const MaximalCheckOptions& opts = {});

// Drops the lexicographically larger edge of every crossing.
Graph planar_reduction(const NicEmbedding& emb);
// Drops both edges of every crossing.
Graph planar_skeleton(const NicEmbedding& emb);

// Builds a rotation system realizing the given crossings: the planarization is
// embedded with temporary rim edges around each dummy so that every crossing is
// a proper alternation. Throws NonPlanar if no such embedding exists and
// InvalidEmbedding for malformed crossing lists.
NicEmbedding embed_with_crossings(const Graph& g, std::vector<Crossing> crossings);

nlohmann::json embedding_to_json(const NicEmbedding& emb);
// Throws ParseError on schema problems and InvalidEmbedding on inconsistent data.
NicEmbedding embedding_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

// All vertex 5-sets inducing K5; sorted.
std::vector<std::array<int, 5>> list_k5(const Graph& g);

}  // namespace nic
