#include "nic/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace nic {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

}  // namespace

PlanarityResult test_planarity(const Graph& g) {
    PlanarityResult res;
    if (g.m() > 3 * g.n() - 6 && g.n() >= 3) return res;
    BGraph bg(g.n());
    for (int id = 0; id < g.m(); ++id) {
        auto [u, v] = g.edges()[id];
        boost::add_edge(u, v, id, bg);
    }
    std::vector<std::vector<BEdge>> storage(g.n());
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    bool ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                  boost::boyer_myrvold_params::embedding = embedding);
    if (!ok) return res;
    res.planar = true;
    res.rotation.assign(g.n(), {});
    for (int v = 0; v < g.n(); ++v) {
        auto& r = res.rotation[v];
        r.reserve(storage[v].size());
        for (const auto& e : storage[v]) {
            int s = static_cast<int>(boost::source(e, bg)), t = static_cast<int>(boost::target(e, bg));
            r.push_back(s == v ? t : s);
        }
    }
    return res;
}

RotationIndex::RotationIndex(const Rotation& rot) : offset_(rot.size() + 1, 0) {
    for (size_t v = 0; v < rot.size(); ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot[v].size());
    sorted_.resize(offset_.back());
    for (size_t v = 0; v < rot.size(); ++v) {
        auto* base = sorted_.data() + offset_[v];
        for (size_t i = 0; i < rot[v].size(); ++i) base[i] = {rot[v][i], static_cast<int>(i)};
        std::sort(base, base + rot[v].size());
    }
}

int RotationIndex::position(int v, int u) const {
    if (v < 0 || v + 1 >= static_cast<int>(offset_.size())) return -1;
    auto b = sorted_.begin() + offset_[v], e = sorted_.begin() + offset_[v + 1];
    auto it = std::lower_bound(b, e, std::pair<int, int>{u, -1});
    return (it != e && it->first == u) ? it->second : -1;
}

int count_faces(const Graph& g, const Rotation& rot) {
    RotationIndex index(rot);
    auto pos = [&](int v, int u) { return index.position(v, u); };
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    std::vector<char> used(offset[g.n()], 0);
    int faces = 0;
    for (int v = 0; v < g.n(); ++v) {
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
            if (used[offset[v] + i]) continue;
            ++faces;
            int a = v, ia = i;
            while (!used[offset[a] + ia]) {
                used[offset[a] + ia] = 1;
                int b = rot[a][ia];
                int k = static_cast<int>(rot[b].size());
                int p = pos(b, a);
                ia = (p + k - 1) % k;
                a = b;
            }
        }
    }
    return faces;
}

}  // namespace nic
