#include "nic/recognize.hpp"

#include <algorithm>

#include "nic/planarity.hpp"

namespace nic {

const char* to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::EdgeCountMismatch: return "EdgeCountMismatch";
        case RejectReason::ArboricityTimeout: return "ArboricityTimeout";
        case RejectReason::KiteCoverViolation: return "KiteCoverViolation";
        case RejectReason::NonplanarStarGraph: return "NonplanarStarGraph";
        case RejectReason::StructurallyInvalid: return "StructurallyInvalid";
    }
    return "Unknown";
}

StarGraph build_star_graph(const Graph& g, const KiteSet& kites) {
    std::vector<char> drop(g.m(), 0);
    StarGraph sg;
    std::vector<Edge> edges;
    for (size_t i = 0; i < kites.size(); ++i) {
        const auto& k = kites[i];
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                int id = g.edge_id(k[a], k[b]);
                if (id >= 0) drop[id] = 1;
            }
        int z = g.n() + static_cast<int>(i);
        sg.dummy.push_back(z);
        for (int v : k) edges.push_back({v, z});
    }
    for (int id = 0; id < g.m(); ++id)
        if (!drop[id]) edges.push_back(g.edges()[id]);
    sg.graph = new_graph(g.n() + static_cast<int>(kites.size()), edges);
    return sg;
}

NicEmbedding reinsert_kites(const Graph& g, const Rotation& star_rotation, const KiteSet& kites, const std::vector<int>& dummy) {
    NicEmbedding emb;
    emb.graph = g;
    int n = g.n();
    // Dummies of the embedding are n + i; remap star ids in case they differ.
    std::vector<int> remap(star_rotation.size());
    for (int v = 0; v < static_cast<int>(remap.size()); ++v) remap[v] = v;
    for (size_t i = 0; i < kites.size(); ++i) remap[dummy[i]] = n + static_cast<int>(i);
    emb.rotation.assign(n + kites.size(), {});
    for (int v = 0; v < static_cast<int>(star_rotation.size()); ++v)
        for (int u : star_rotation[v]) emb.rotation[remap[v]].push_back(remap[u]);

    for (size_t i = 0; i < kites.size(); ++i) {
        int x = n + static_cast<int>(i);
        const auto r = emb.rotation[x];
        emb.crossings.push_back({make_edge(r[0], r[2]), make_edge(r[1], r[3])});
        for (int j = 0; j < 4; ++j) {
            int v = r[j], p = r[(j + 3) % 4], s = r[(j + 1) % 4];
            auto& rv = emb.rotation[v];
            auto it = std::find(rv.begin(), rv.end(), x);
            it = rv.insert(it, s);  // s just before x
            rv.insert(it + 2, p);   // p just after x
        }
    }
    return emb;
}

RecognitionResult recognize_optimal(const Graph& g, const RecognizeOptions& opts) {
    RecognitionResult res;
    const int n = g.n();
    const long long m = g.m();
    if (n < 5 || !is_biconnected(g)) {
        res.reason = RejectReason::StructurallyInvalid;
        return res;
    }
    if (5 * m != 18LL * (n - 2)) {
        res.reason = RejectReason::EdgeCountMismatch;
        return res;
    }
    auto listing = list_k4(g, opts.step_cap_multiplier * static_cast<std::int64_t>(n));
    res.steps = listing.steps;
    if (listing.timed_out) {
        res.reason = RejectReason::ArboricityTimeout;
        return res;
    }
    const auto& cat = listing.catalog;
    res.catalog_size = cat.k4s.size();

    std::vector<char> chosen(cat.k4s.size(), 0);
    for (const auto& bucket : cat.buckets)
        if (bucket.size() == 1) chosen[bucket[0]] = 1;
    for (const auto& bucket : cat.buckets) {
        int hits = 0;
        for (int k : bucket) hits += chosen[k];
        if (hits != 1) {
            res.reason = RejectReason::KiteCoverViolation;
            for (size_t i = 0; i < chosen.size(); ++i)
                if (chosen[i]) res.kite_set.push_back(cat.k4s[i]);
            return res;
        }
    }
    for (size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i]) res.kite_set.push_back(cat.k4s[i]);

    auto star = build_star_graph(g, res.kite_set);
    auto planar = test_planarity(star.graph);
    if (!planar.planar) {
        res.reason = RejectReason::NonplanarStarGraph;
        return res;
    }
    res.embedding = reinsert_kites(g, planar.rotation, res.kite_set, star.dummy);
    res.accepted = true;
    return res;
}

}  // namespace nic
